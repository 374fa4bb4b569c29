#pragma once

/**
 * @file geo_real.hpp
 * @brief Geometric real numbers and the arithmetic generated by exp.
 *
 * A geometric real is a strictly positive real u, stored as t = ln u. In
 * that representation every geometric operation is the classical operation
 * on logs:
 *
 *   u (+) v = e^(ln u + ln v) = uv          u (-) v = e^(ln u - ln v) = u/v
 *   u (*) v = e^(ln u * ln v)               u (/) v = e^(ln u / ln v), v != 1
 *   |u|_G   = e^|ln u|                      u^(q_G) = e^((ln u)^q)
 *
 * The geometric zero is 1 (log 0) and the geometric identity is e (log 1).
 * Storing logs keeps numbers such as e^(k^m) representable for large k.
 *
 * The C++ operators `+ - * /` on `basic_geo_real` are the geometric field
 * operations, not the classical ones on the represented positive values.
 */

#include <cmath>
#include <compare>
#include <concepts>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "bigeo/detail/summation.hpp"
#include "bigeo/error.hpp"

namespace bigeo {

inline constexpr double default_tolerance = 1e-12;

template <std::floating_point Real>
class basic_geo_real {
public:
    using real_type = Real;

    /// Geometric zero (the number 1).
    constexpr basic_geo_real() noexcept = default;

    static basic_geo_real from_log(Real log_value) {
        if (!std::isfinite(log_value))
            throw domain_error("geometric real needs a finite log value");
        return basic_geo_real(log_value, unchecked{});
    }

    static basic_geo_real from_positive(Real value) {
        if (!(value > 0) || !std::isfinite(value)) {
            std::ostringstream os;
            os << "geometric real needs a positive finite value, got " << value;
            throw domain_error(os.str());
        }
        return basic_geo_real(std::log(value), unchecked{});
    }

    static constexpr basic_geo_real zero() noexcept { return {}; }
    static constexpr basic_geo_real identity() noexcept { return basic_geo_real(Real(1), unchecked{}); }

    constexpr Real log_value() const noexcept { return log_; }
    Real to_positive() const noexcept { return std::exp(log_); }

    constexpr bool is_zero() const noexcept { return log_ == Real(0); }

    friend constexpr std::partial_ordering operator<=>(basic_geo_real u, basic_geo_real v) noexcept {
        return u.log_ <=> v.log_;
    }

    /// Tolerance-based, see `approx_equal`.
    friend bool operator==(basic_geo_real u, basic_geo_real v) noexcept {
        return std::abs(u.log_ - v.log_) <= Real(default_tolerance);
    }

    friend basic_geo_real operator+(basic_geo_real u, basic_geo_real v) { return from_log(u.log_ + v.log_); }
    friend basic_geo_real operator-(basic_geo_real u, basic_geo_real v) { return from_log(u.log_ - v.log_); }
    friend basic_geo_real operator*(basic_geo_real u, basic_geo_real v) { return from_log(u.log_ * v.log_); }
    friend basic_geo_real operator/(basic_geo_real u, basic_geo_real v) {
        if (v.log_ == Real(0))
            throw division_by_geometric_zero("geometric division by the geometric zero 1");
        return from_log(u.log_ / v.log_);
    }
    /// Geometric negation: 1 (-) u, i.e. the reciprocal 1/u.
    friend constexpr basic_geo_real operator-(basic_geo_real u) noexcept { return basic_geo_real(-u.log_, unchecked{}); }

    basic_geo_real& operator+=(basic_geo_real v) { return *this = *this + v; }
    basic_geo_real& operator-=(basic_geo_real v) { return *this = *this - v; }
    basic_geo_real& operator*=(basic_geo_real v) { return *this = *this * v; }
    basic_geo_real& operator/=(basic_geo_real v) { return *this = *this / v; }

private:
    struct unchecked {};
    constexpr basic_geo_real(Real log_value, unchecked) noexcept : log_(log_value) {}

    Real log_ = 0;
};

using geo_real = basic_geo_real<double>;

/// e^t
template <std::floating_point Real = double>
basic_geo_real<Real> geo_exp(Real t) { return basic_geo_real<Real>::from_log(t); }

template <std::floating_point Real>
bool approx_equal(basic_geo_real<Real> u, basic_geo_real<Real> v,
                  std::type_identity_t<Real> tolerance = Real(default_tolerance)) {
    return std::abs(u.log_value() - v.log_value()) <= tolerance;
}

template <std::floating_point Real>
basic_geo_real<Real> gadd(basic_geo_real<Real> u, basic_geo_real<Real> v) { return u + v; }

template <std::floating_point Real>
basic_geo_real<Real> gsub(basic_geo_real<Real> u, basic_geo_real<Real> v) { return u - v; }

template <std::floating_point Real>
basic_geo_real<Real> gmul(basic_geo_real<Real> u, basic_geo_real<Real> v) { return u * v; }

template <std::floating_point Real>
basic_geo_real<Real> gdiv(basic_geo_real<Real> u, basic_geo_real<Real> v) { return u / v; }

template <std::floating_point Real>
basic_geo_real<Real> gabs(basic_geo_real<Real> u) {
    return basic_geo_real<Real>::from_log(std::abs(u.log_value()));
}

/**
 * Geometric power u^(q_G) = e^((ln u)^q).
 *
 * A negative log raised to a non-integer power has no real value and is a
 * domain error; integer powers of negative logs keep their sign. A zero log
 * raised to a negative power is likewise undefined.
 */
template <std::floating_point Real>
basic_geo_real<Real> gpow(basic_geo_real<Real> u, std::type_identity_t<Real> q) {
    const Real t = u.log_value();
    if (t < 0 && q != std::trunc(q))
        throw domain_error("geometric power of a number below 1 needs an integer exponent");
    if (t == 0 && q < 0)
        throw domain_error("negative geometric power of the geometric zero");
    const Real r = std::pow(t, q);
    if (!std::isfinite(r))
        throw domain_error("geometric power overflows");
    return basic_geo_real<Real>::from_log(r);
}

/// Geometric sum (the classical product of the values). Empty -> 1.
template <std::floating_point Real>
basic_geo_real<Real> gsum(std::span<const basic_geo_real<Real>> xs) {
    std::vector<Real> logs;
    logs.reserve(xs.size());
    for (auto x : xs) logs.push_back(x.log_value());
    return basic_geo_real<Real>::from_log(detail::pairwise_sum<Real>(logs));
}

template <std::floating_point Real>
basic_geo_real<Real> gsum(const std::vector<basic_geo_real<Real>>& xs) {
    return gsum(std::span<const basic_geo_real<Real>>(xs));
}

/// Geometric product. Empty -> e.
template <std::floating_point Real>
basic_geo_real<Real> gprod(std::span<const basic_geo_real<Real>> xs) {
    Real acc = 1;
    for (auto x : xs) acc *= x.log_value();
    return basic_geo_real<Real>::from_log(acc);
}

template <std::floating_point Real>
basic_geo_real<Real> gprod(const std::vector<basic_geo_real<Real>>& xs) {
    return gprod(std::span<const basic_geo_real<Real>>(xs));
}

/// d_G(x, y) = |x (-) y|_G
template <std::floating_point Real>
basic_geo_real<Real> gmetric(basic_geo_real<Real> x, basic_geo_real<Real> y) {
    return gabs(x - y);
}

} // namespace bigeo
