#pragma once

/**
 * @file sequence.hpp
 * @brief Finite prefixes of geometric sequences and geometric difference operators.
 *
 * Sequences are 1-indexed: `x[1]` is the first term.
 *
 * The m-th order geometric difference is
 *
 *   Delta_G^m x_k = G-sum_{v=0}^{m} (1 (-) e)^(v_G) (*) e^C(m,v) (*) x_{k+v},
 *
 * whose log is the classical forward difference sum_v (-1)^v C(m,v) ln x_{k+v}.
 */

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigeo/detail/summation.hpp"
#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"

namespace bigeo {

template <std::floating_point Real>
class basic_geo_sequence {
public:
    using value_type = basic_geo_real<Real>;
    /// Closed-form rule k -> ln x_k.
    using generator_type = std::function<Real(std::size_t)>;

    basic_geo_sequence() = default;

    explicit basic_geo_sequence(std::vector<value_type> terms) : terms_(std::move(terms)) {}

    static basic_geo_sequence from_logs(std::span<const Real> logs) {
        std::vector<value_type> terms;
        terms.reserve(logs.size());
        for (Real t : logs) terms.push_back(value_type::from_log(t));
        return basic_geo_sequence(std::move(terms));
    }

    static basic_geo_sequence from_positive(std::span<const Real> values) {
        std::vector<value_type> terms;
        terms.reserve(values.size());
        for (Real v : values) terms.push_back(value_type::from_positive(v));
        return basic_geo_sequence(std::move(terms));
    }

    /// Materialises terms 1..length from `generator`.
    static basic_geo_sequence from_generator(generator_type generator, std::size_t length) {
        std::vector<value_type> terms;
        terms.reserve(length);
        for (std::size_t k = 1; k <= length; ++k) terms.push_back(value_type::from_log(generator(k)));
        basic_geo_sequence seq(std::move(terms));
        seq.generator_ = std::move(generator);
        return seq;
    }

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// 1-indexed, unchecked.
    value_type operator[](std::size_t k) const noexcept { return terms_[k - 1]; }

    value_type at(std::size_t k) const {
        if (k == 0 || k > terms_.size())
            throw index_out_of_range("sequence index " + std::to_string(k) + " outside 1.." +
                                     std::to_string(terms_.size()));
        return terms_[k - 1];
    }

    std::span<const value_type> terms() const noexcept { return terms_; }

    std::vector<Real> logs() const {
        std::vector<Real> out;
        out.reserve(terms_.size());
        for (auto t : terms_) out.push_back(t.log_value());
        return out;
    }

    const generator_type& generator() const noexcept { return generator_; }
    bool has_generator() const noexcept { return static_cast<bool>(generator_); }

    /// A copy with term k replaced; drops the generator.
    basic_geo_sequence with_term(std::size_t k, value_type v) const {
        basic_geo_sequence copy(terms_);
        (void)at(k);
        copy.terms_[k - 1] = v;
        return copy;
    }

private:
    std::vector<value_type> terms_;
    generator_type generator_;
};

using geo_sequence = basic_geo_sequence<double>;

namespace detail {

inline void require_window(std::size_t last_index, std::size_t length, const char* what) {
    if (last_index > length)
        throw index_out_of_range(std::string(what) + " needs term " + std::to_string(last_index) +
                                 " but the sequence has " + std::to_string(length));
}

/// Signed binomial weights (-1)^v C(m, v), v = 0..m.
template <std::floating_point Real>
std::vector<Real> difference_weights(unsigned m) {
    std::vector<Real> w(m + 1);
    for (unsigned v = 0; v <= m; ++v) {
        const Real c = static_cast<Real>(binomial(m, v));
        w[v] = (v % 2 == 0) ? c : -c;
    }
    return w;
}

template <std::floating_point Real>
Real delta_log(const basic_geo_sequence<Real>& x, std::span<const Real> weights, std::size_t k) {
    Real acc = 0;
    for (std::size_t v = 0; v < weights.size(); ++v) acc += weights[v] * x[k + v].log_value();
    return acc;
}

} // namespace detail

/**
 * Delta_G^m x_k via the binomial formula. m = 0 returns x_k.
 * Needs k >= 1 and k + m <= x.size().
 */
template <std::floating_point Real>
basic_geo_real<Real> delta_m(const basic_geo_sequence<Real>& x, unsigned m, std::size_t k) {
    if (k == 0) throw index_out_of_range("sequence indices start at 1");
    detail::require_window(k + m, x.size(), "geometric difference");
    const auto w = detail::difference_weights<Real>(m);
    return basic_geo_real<Real>::from_log(detail::delta_log<Real>(x, w, k));
}

/// The sequence (Delta_G^m x_k) for k = 1..count.
template <std::floating_point Real>
basic_geo_sequence<Real> delta_m_sequence(const basic_geo_sequence<Real>& x, unsigned m, std::size_t count) {
    detail::require_window(count + m, x.size(), "geometric difference");
    const auto w = detail::difference_weights<Real>(m);
    std::vector<basic_geo_real<Real>> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k)
        out.push_back(basic_geo_real<Real>::from_log(detail::delta_log<Real>(x, w, k)));
    return basic_geo_sequence<Real>(std::move(out));
}

/// (e (/) e^n) (*) G-sum_{k=1}^{n} Delta_G^m x_k; the log is the mean of the log differences.
template <std::floating_point Real>
basic_geo_real<Real> cesaro_mean_partial(const basic_geo_sequence<Real>& x, unsigned m, std::size_t n) {
    if (n == 0) throw index_out_of_range("Cesaro mean needs n >= 1");
    const auto d = delta_m_sequence(x, m, n);
    const auto logs = d.logs();
    return basic_geo_real<Real>::from_log(detail::pairwise_sum<Real>(logs) / static_cast<Real>(n));
}

/// Cesaro means for every n = 1..count, sharing one running sum.
template <std::floating_point Real>
std::vector<basic_geo_real<Real>> cesaro_means(const basic_geo_sequence<Real>& x, unsigned m, std::size_t count) {
    const auto d = delta_m_sequence(x, m, count);
    std::vector<basic_geo_real<Real>> out;
    out.reserve(count);
    // Kahan-compensated running sum keeps long prefixes accurate.
    Real sum = 0, carry = 0;
    for (std::size_t n = 1; n <= count; ++n) {
        const Real y = d[n].log_value() - carry;
        const Real t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        out.push_back(basic_geo_real<Real>::from_log(sum / static_cast<Real>(n)));
    }
    return out;
}

/// G-sum_{k=1}^{n} Delta_G^m x_k = Delta_G^{m-1} x_1 (-) Delta_G^{m-1} x_{n+1}, m >= 1.
template <std::floating_point Real>
basic_geo_real<Real> telescoped_partial(const basic_geo_sequence<Real>& x, unsigned m, std::size_t n) {
    if (m == 0) throw domain_error("telescoping needs a difference order m >= 1");
    if (n == 0) throw index_out_of_range("telescoped partial sum needs n >= 1");
    detail::require_window(n + m, x.size(), "telescoped partial sum");
    return delta_m(x, m - 1, 1) - delta_m(x, m - 1, n + 1);
}

} // namespace bigeo
