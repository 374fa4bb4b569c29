#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "bigeo/error.hpp"

namespace bigeo::detail {

/// Pairwise (cascade) summation; error grows as O(log n) instead of O(n).
template <std::floating_point Real>
Real pairwise_sum(std::span<const Real> xs) {
    constexpr std::size_t block = 16;
    if (xs.size() <= block) {
        Real acc = 0;
        for (Real x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

inline constexpr unsigned max_binomial_order = 60;

/// Exact C(m, v) for m <= 60. Larger orders are refused rather than rounded.
inline std::uint64_t binomial(unsigned m, unsigned v) {
    if (m > max_binomial_order)
        throw domain_error("difference order " + std::to_string(m) +
                           " exceeds the supported maximum of 60");
    if (v > m) return 0;
    if (v > m - v) v = m - v;
    std::uint64_t c = 1;
    for (unsigned j = 1; j <= v; ++j) {
        // c * (m - v + j) is divisible by j; the product stays below 2^64 for m <= 60
        c = c / j * (m - v + j) + c % j * (m - v + j) / j;
    }
    return c;
}

} // namespace bigeo::detail
