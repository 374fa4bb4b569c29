#pragma once

/**
 * @file derivative.hpp
 * @brief Bigeometric derivative D_G f(a) = lim_{x->a} [f(x)/f(a)]^(1/(ln x - ln a)).
 *
 * With g(t) = ln f(e^t) the derivative is exactly e^(g'(ln a)), which equals
 * e^(a f'(a) / f(a)) whenever the classical derivative exists.
 */

#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"

namespace bigeo {

/// A positive-valued function of a positive argument, with an optional classical derivative.
template <std::floating_point Real>
struct basic_real_function {
    std::function<Real(Real)> eval;
    std::function<Real(Real)> classical_derivative;  // may be empty

    bool has_classical_derivative() const noexcept { return static_cast<bool>(classical_derivative); }
};

using real_function = basic_real_function<double>;

template <std::floating_point Real>
basic_geo_real<Real> dg_from_classical(Real a, Real f_a, Real fprime_a) {
    if (!(a > 0)) throw domain_error("bigeometric derivative needs a positive abscissa");
    if (!(f_a > 0)) throw domain_error("bigeometric derivative needs a positive function value");
    return basic_geo_real<Real>::from_log(a * fprime_a / f_a);
}

template <std::floating_point Real>
Real default_dg_step() noexcept {
    return std::cbrt(std::numeric_limits<Real>::epsilon());
}

namespace detail {

template <std::floating_point Real>
Real log_probe(const basic_real_function<Real>& f, Real x) {
    const Real y = f.eval(x);
    if (!(y > 0) || !std::isfinite(y)) {
        std::ostringstream os;
        os << "function value " << y << " at x = " << x << " is not a positive real";
        throw evaluation_error(os.str());
    }
    return std::log(y);
}

} // namespace detail

/// Central difference of ln f in log-log coordinates; second order in h.
template <std::floating_point Real>
basic_geo_real<Real> dg_numeric(const basic_real_function<Real>& f, Real a,
                                std::type_identity_t<Real> h = default_dg_step<Real>()) {
    if (!(a > 0)) throw domain_error("bigeometric derivative needs a positive abscissa");
    if (!(h > 0)) throw domain_error("numeric step must be positive");
    const Real t = std::log(a);
    const Real up = detail::log_probe(f, std::exp(t + h));
    const Real down = detail::log_probe(f, std::exp(t - h));
    (void)detail::log_probe(f, a);  // a itself must map into R(G)
    return basic_geo_real<Real>::from_log((up - down) / (2 * h));
}

/// Uses the classical derivative when the function carries one.
template <std::floating_point Real>
basic_geo_real<Real> dg(const basic_real_function<Real>& f, Real a) {
    if (f.has_classical_derivative()) {
        const Real f_a = f.eval(a);
        if (!(f_a > 0) || !std::isfinite(f_a))
            throw evaluation_error("function is not positive at the requested point");
        return dg_from_classical(a, f_a, f.classical_derivative(a));
    }
    return dg_numeric(f, a);
}

/// Functions with known bigeometric derivatives, used as fixtures and by the CLI.
namespace builtin {

inline real_function exp_function() {
    return {[](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }};
}

/// Positive only for x > 1.
inline real_function ln_function() {
    return {[](double x) { return std::log(x); }, [](double x) { return 1.0 / x; }};
}

/// Positive on the open intervals (2n pi, (2n+1) pi).
inline real_function sin_function() {
    return {[](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }};
}

/// D_G e^x = e^x
inline geo_real dg_exp(double x) { return geo_real::from_log(x); }

/// D_G ln x = e^(1/ln x), x > 1
inline geo_real dg_ln(double x) {
    if (!(x > 1)) throw evaluation_error("D_G ln x needs x > 1");
    return geo_real::from_log(1.0 / std::log(x));
}

/// D_G sin x = e^(x cot x) where sin x > 0
inline geo_real dg_sin(double x) {
    if (!(x > 0) || !(std::sin(x) > 0)) throw evaluation_error("D_G sin x needs sin x > 0");
    return geo_real::from_log(x / std::tan(x));
}

inline std::optional<real_function> lookup(std::string_view name) {
    if (name == "exp") return exp_function();
    if (name == "ln" || name == "log") return ln_function();
    if (name == "sin") return sin_function();
    return std::nullopt;
}

} // namespace builtin

} // namespace bigeo
