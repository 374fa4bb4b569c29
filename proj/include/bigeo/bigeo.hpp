#pragma once

/**
 * @file bigeo.hpp
 * @brief Umbrella header for the bigeometric calculus library.
 */

#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"
#include "bigeo/derivative.hpp"
#include "bigeo/sequence.hpp"
#include "bigeo/cesaro.hpp"
#include "bigeo/matrix.hpp"
#include "bigeo/hermite.hpp"
#include "bigeo/expr.hpp"
