#pragma once

/**
 * @file cesaro.hpp
 * @brief Truncated norms and finite-prefix diagnostics for the bigeometric
 *        Cesaro difference sequence spaces C_p^G(Delta_G^m) and C_inf^G(Delta_G^m).
 *
 * For a truncation N the norms are
 *
 *   ||x||_p   = G-sum_{i=1}^m |x_i|_G (+) ( G-sum_{n=1}^N |C_n|_G^(p_G) )^((1/p)_G)
 *   ||x||_inf = G-sum_{i=1}^m |x_i|_G (+) max_{n<=N} |C_n|_G
 *
 * where C_n = (e (/) e^n) (*) G-sum_{k=1}^n Delta_G^m x_k is the Cesaro mean.
 *
 * Finiteness conditions cannot be decided from a prefix. The growth
 * diagnostics report partial log-sums, a least-squares slope over the second
 * half of the prefix, and a heuristic classification; they are evidence, not
 * proofs.
 */

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bigeo/detail/summation.hpp"
#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"
#include "bigeo/sequence.hpp"

namespace bigeo {

inline constexpr std::size_t default_truncation = 200;
inline constexpr double infinite_p = std::numeric_limits<double>::infinity();

template <std::floating_point Real>
struct basic_norm_report {
    basic_geo_real<Real> head_term;
    basic_geo_real<Real> tail_term;
    basic_geo_real<Real> total;
    std::size_t truncation_N = 0;
    Real p = 1;  // infinity for the sup norm

    bool is_sup_norm() const noexcept { return std::isinf(p); }
};

using norm_report = basic_norm_report<double>;

enum class growth_class {
    convergent_like,
    linear_divergent,
    superlinear_divergent,
    inconclusive,
};

constexpr std::string_view to_string(growth_class c) noexcept {
    switch (c) {
    case growth_class::convergent_like: return "convergent-like";
    case growth_class::linear_divergent: return "linear-divergent";
    case growth_class::superlinear_divergent: return "superlinear-divergent";
    case growth_class::inconclusive: return "inconclusive";
    }
    return "unknown";
}

template <std::floating_point Real>
struct basic_growth_diagnostic {
    std::vector<std::pair<std::size_t, Real>> partial_log_sums;
    Real fitted_slope = 0;
    growth_class classification = growth_class::inconclusive;
};

using growth_diagnostic = basic_growth_diagnostic<double>;

/// Classification thresholds for growth diagnostics.
struct growth_thresholds {
    double convergent_slope = 1e-3;
    double linear_band = 0.10;       // relative spread of increments around the slope
    double superlinear_ratio = 1.10;  // later increments vs earlier ones
};

namespace detail {

inline void check_p(double p, bool allow_below_one = false) {
    if (std::isnan(p) || p <= 0 || (!allow_below_one && p < 1))
        throw invalid_p("exponent p must be " + std::string(allow_below_one ? "> 0" : ">= 1"));
}

/// (sum |t_i|^p)^(1/p), scaled by the largest magnitude to avoid overflow.
template <std::floating_point Real>
Real lp_of_logs(std::span<const Real> logs, Real p) {
    Real scale = 0;
    for (Real t : logs) scale = std::max(scale, std::abs(t));
    if (scale == 0) return 0;
    if (std::isinf(p)) return scale;
    std::vector<Real> powers;
    powers.reserve(logs.size());
    for (Real t : logs) powers.push_back(std::pow(std::abs(t) / scale, p));
    return scale * std::pow(pairwise_sum<Real>(powers), Real(1) / p);
}

template <std::floating_point Real>
Real head_log(const basic_geo_sequence<Real>& x, unsigned m) {
    std::vector<Real> heads;
    for (std::size_t i = 1; i <= m; ++i) heads.push_back(std::abs(x[i].log_value()));
    return pairwise_sum<Real>(heads);
}

template <std::floating_point Real>
void require_truncation(const basic_geo_sequence<Real>& x, unsigned m, std::size_t N) {
    if (m == 0) throw domain_error("difference order m must be positive");
    if (N == 0) throw index_out_of_range("truncation N must be positive");
    require_window(N + m, x.size(), "truncated norm");
}

} // namespace detail

/**
 * (G-sum |a_k|_G^(p_G))^((1/p)_G) for p > 0; p = infinity gives max |a_k|_G.
 * With p >= 1 this is the geometric l_p norm used in the Minkowski and Jessen
 * inequalities.
 */
template <std::floating_point Real>
basic_geo_real<Real> power_aggregate(std::span<const basic_geo_real<Real>> xs, std::type_identity_t<Real> p) {
    detail::check_p(p, true);
    std::vector<Real> logs;
    logs.reserve(xs.size());
    for (auto x : xs) logs.push_back(x.log_value());
    return basic_geo_real<Real>::from_log(detail::lp_of_logs<Real>(logs, p));
}

template <std::floating_point Real>
basic_norm_report<Real> norm_p(const basic_geo_sequence<Real>& x, unsigned m, std::type_identity_t<Real> p,
                               std::size_t N = default_truncation) {
    detail::check_p(p);
    detail::require_truncation(x, m, N);
    const auto means = cesaro_means(x, m, N);
    std::vector<Real> logs;
    logs.reserve(means.size());
    for (auto c : means) logs.push_back(c.log_value());
    const auto head = basic_geo_real<Real>::from_log(detail::head_log(x, m));
    const auto tail = basic_geo_real<Real>::from_log(detail::lp_of_logs<Real>(logs, p));
    return {head, tail, head + tail, N, p};
}

template <std::floating_point Real>
basic_norm_report<Real> norm_inf(const basic_geo_sequence<Real>& x, unsigned m, std::size_t N = default_truncation) {
    return norm_p(x, m, std::numeric_limits<Real>::infinity(), N);
}

/**
 * Least-squares slope over the second half of the points, then:
 *  - slope below `convergent_slope`: convergent-like;
 *  - every increment within `linear_band` of the slope: linear-divergent;
 *  - increments in the last quarter exceed those in the third quarter by
 *    `superlinear_ratio`: superlinear-divergent;
 *  - otherwise inconclusive.
 */
template <std::floating_point Real>
basic_growth_diagnostic<Real> classify_growth(std::vector<std::pair<std::size_t, Real>> sums,
                                              const growth_thresholds& th = {}) {
    basic_growth_diagnostic<Real> out;
    out.partial_log_sums = std::move(sums);
    const auto& s = out.partial_log_sums;
    if (s.size() < 2) return out;

    const std::size_t first = s.size() / 2 == s.size() - 1 ? 0 : s.size() / 2;
    const auto window = std::span(s).subspan(first);
    const Real count = static_cast<Real>(window.size());
    Real mean_n = 0, mean_s = 0;
    for (const auto& [n, v] : window) {
        mean_n += static_cast<Real>(n);
        mean_s += v;
    }
    mean_n /= count;
    mean_s /= count;
    Real sxy = 0, sxx = 0;
    for (const auto& [n, v] : window) {
        const Real dn = static_cast<Real>(n) - mean_n;
        sxy += dn * (v - mean_s);
        sxx += dn * dn;
    }
    out.fitted_slope = sxx > 0 ? sxy / sxx : 0;

    if (out.fitted_slope < th.convergent_slope) {
        out.classification = growth_class::convergent_like;
        return out;
    }

    std::vector<Real> inc;
    for (std::size_t j = 1; j < window.size(); ++j) {
        const Real dn = static_cast<Real>(window[j].first - window[j - 1].first);
        inc.push_back((window[j].second - window[j - 1].second) / dn);
    }
    const bool linear = std::all_of(inc.begin(), inc.end(), [&](Real d) {
        return std::abs(d - out.fitted_slope) <= th.linear_band * out.fitted_slope;
    });
    if (linear) {
        out.classification = growth_class::linear_divergent;
        return out;
    }
    if (inc.size() >= 2) {
        const std::size_t half = inc.size() / 2;
        Real early = 0, late = 0;
        for (std::size_t j = 0; j < half; ++j) early += inc[j];
        for (std::size_t j = half; j < inc.size(); ++j) late += inc[j];
        early /= static_cast<Real>(half);
        late /= static_cast<Real>(inc.size() - half);
        if (early > 0 && late > th.superlinear_ratio * early) {
            out.classification = growth_class::superlinear_divergent;
            return out;
        }
    }
    out.classification = growth_class::inconclusive;
    return out;
}

/**
 * Finite surrogate for x in C_p^G(Delta_G^m) (or C_inf^G when p is infinite):
 * partial_log_sums[n] = sum_{j<=n} |ln C_j|^p, or max_{j<=n} |ln C_j| for p = inf.
 */
template <std::floating_point Real>
basic_growth_diagnostic<Real> membership_diagnostic(const basic_geo_sequence<Real>& x, unsigned m,
                                                    std::type_identity_t<Real> p, std::size_t N = default_truncation,
                                                    const growth_thresholds& th = {}) {
    detail::check_p(p);
    detail::require_truncation(x, m, N);
    const auto means = cesaro_means(x, m, N);
    std::vector<std::pair<std::size_t, Real>> sums;
    sums.reserve(N);
    Real acc = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        const Real a = std::abs(means[n - 1].log_value());
        acc = std::isinf(p) ? std::max(acc, a) : acc + std::pow(a, p);
        sums.emplace_back(n, acc);
    }
    return classify_growth<Real>(std::move(sums), th);
}

/// upsilon(x) = (1, ..., 1, x_{m+1}, x_{m+2}, ...)
template <std::floating_point Real>
basic_geo_sequence<Real> upsilon_project(const basic_geo_sequence<Real>& x, unsigned m) {
    detail::require_window(m, x.size(), "upsilon projection");
    std::vector<basic_geo_real<Real>> terms(x.terms().begin(), x.terms().end());
    for (std::size_t i = 0; i < m; ++i) terms[i] = basic_geo_real<Real>::zero();
    return basic_geo_sequence<Real>(std::move(terms));
}

/// Partial sums of G-sum e^(k^m) (*) |a_k|_G, the alpha-dual condition for upsilon C_inf^G(Delta_G^m).
template <std::floating_point Real>
basic_growth_diagnostic<Real> dual_partial_sum(const basic_geo_sequence<Real>& a, unsigned m,
                                               std::size_t N = default_truncation, const growth_thresholds& th = {}) {
    if (m == 0) throw domain_error("difference order m must be positive");
    detail::require_window(N, a.size(), "dual partial sum");
    std::vector<std::pair<std::size_t, Real>> sums;
    sums.reserve(N);
    Real acc = 0;
    for (std::size_t k = 1; k <= N; ++k) {
        acc += std::pow(static_cast<Real>(k), static_cast<Real>(m)) * std::abs(a[k].log_value());
        sums.emplace_back(k, acc);
    }
    return classify_growth<Real>(std::move(sums), th);
}

template <std::floating_point Real>
struct basic_lemma_diag_row {
    std::size_t k;
    basic_geo_real<Real> scaled_difference;  // e^(1/k) (*) |Delta_G^{m-1} x_k|_G
    basic_geo_real<Real> scaled_term;        // e^(k^-m) (*) |x_k|_G
};

using lemma_diag_row = basic_lemma_diag_row<double>;

/// Per-k diagnostic pair; boundedness over the prefix is left to the caller.
template <std::floating_point Real>
std::vector<basic_lemma_diag_row<Real>> lemma_diag_sequences(const basic_geo_sequence<Real>& x, unsigned m,
                                                             std::size_t N = default_truncation) {
    detail::require_truncation(x, m, N);
    std::vector<basic_lemma_diag_row<Real>> rows;
    rows.reserve(N);
    for (std::size_t k = 1; k <= N; ++k) {
        const Real kr = static_cast<Real>(k);
        const auto d = gabs(delta_m(x, m - 1, k));
        const auto t = gabs(x[k]);
        rows.push_back({k, basic_geo_real<Real>::from_log(d.log_value() / kr),
                        basic_geo_real<Real>::from_log(t.log_value() * std::pow(kr, -static_cast<Real>(m)))});
    }
    return rows;
}

} // namespace bigeo
