#pragma once

/**
 * @file hermite.hpp
 * @brief Bigeometric Hermite interpolation in Lagrange and Newton form.
 *
 * Given nodes x_0..x_n with values f(x_i) and bigeometric derivatives
 * D_G f(x_i), there is exactly one bigeometric polynomial p_G of geometric
 * degree at most 2n+1 with p_G(x_i) = f(x_i) and D_G p_G(x_i) = D_G f(x_i).
 *
 * Lagrange form:
 *
 *   T_i(x)  = G-prod_{j!=i} (x (-) x_j)  (/)  G-prod_{j!=i} (x_i (-) x_j)
 *   H_i(x)  = [e (-) e^2 (*) D_G T_i(x_i) (*) (x (-) x_i)] (*) T_i(x)^(2_G)
 *   H^_i(x) = (x (-) x_i) (*) T_i(x)^(2_G)
 *   p_G(x)  = G-sum H_i(x) (*) f(x_i)  (+)  G-sum H^_i(x) (*) D_G f(x_i)
 *
 * Newton form over the doubled abscissae z_j = x_{floor(j/2)}:
 *
 *   p_G(x) = f(x_0) (+) G-sum_{k=1}^{2n+1} f_G[z_0..z_k] (*) G-prod_{j<k} (x (-) z_j)
 *
 * with f_G[z_j, z_{j+1}] = D_G f(z_j) when z_j = z_{j+1}, and otherwise the
 * divided-difference recursion carried out with (-) and (/).
 *
 * In logs the whole construction is the classical Hermite interpolant of
 * t -> ln f(e^t) with slopes ln D_G f; `classical_hermite_oracle` computes
 * that directly with plain doubles as an independent check.
 */

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigeo/derivative.hpp"
#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"

namespace bigeo {

struct hermite_node {
    geo_real x;
    geo_real f;
    geo_real dgf;
};

/// One row of user input: the derivative may be bigeometric, classical, or absent.
struct node_record {
    double x = 0;
    double f = 0;
    std::optional<double> fprime;
    std::optional<double> dgf;
};

class hermite_data {
public:
    hermite_data() = default;

    explicit hermite_data(std::vector<hermite_node> nodes, double separation = default_tolerance)
        : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw degenerate_nodes("Hermite data needs at least one node");
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            for (std::size_t j = i + 1; j < nodes_.size(); ++j)
                if (std::abs(nodes_[i].x.log_value() - nodes_[j].x.log_value()) <= separation) {
                    std::ostringstream os;
                    os << "nodes " << i << " and " << j << " coincide (x = " << nodes_[i].x.to_positive() << ")";
                    throw degenerate_nodes(os.str());
                }
    }

    /// f and D_G f sampled from `f`; D_G f uses the classical derivative if `f` has one.
    static hermite_data from_function(const std::vector<double>& xs, const real_function& f) {
        std::vector<hermite_node> nodes;
        nodes.reserve(xs.size());
        for (double x : xs) {
            const double fx = f.eval(x);
            if (!(fx > 0)) throw evaluation_error("interpolated function must be positive at every node");
            nodes.push_back({geo_real::from_positive(x), geo_real::from_positive(fx), dg(f, x)});
        }
        return hermite_data(std::move(nodes));
    }

    /**
     * Derivative precedence per record: `dgf`, then `fprime` converted by
     * D_G f = e^(x f'/f), then a numeric estimate from `fallback`.
     */
    static hermite_data from_records(const std::vector<node_record>& records,
                                     const std::optional<real_function>& fallback = std::nullopt,
                                     double separation = default_tolerance) {
        std::vector<hermite_node> nodes;
        nodes.reserve(records.size());
        for (const auto& r : records) {
            if (!(r.x > 0) || !(r.f > 0)) throw domain_error("node abscissa and value must be positive");
            geo_real d;
            if (r.dgf) {
                d = geo_real::from_positive(*r.dgf);
            } else if (r.fprime) {
                d = dg_from_classical(r.x, r.f, *r.fprime);
            } else if (fallback) {
                d = dg_numeric(*fallback, r.x);
            } else {
                std::ostringstream os;
                os << "node x = " << r.x << " has no derivative and no function to estimate one";
                throw domain_error(os.str());
            }
            nodes.push_back({geo_real::from_positive(r.x), geo_real::from_positive(r.f), d});
        }
        return hermite_data(std::move(nodes), separation);
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    const hermite_node& operator[](std::size_t i) const noexcept { return nodes_[i]; }
    const std::vector<hermite_node>& nodes() const noexcept { return nodes_; }

private:
    std::vector<hermite_node> nodes_;
};

namespace detail {

inline void require_node(const hermite_data& data, std::size_t i) {
    if (i >= data.size())
        throw index_out_of_range("node index " + std::to_string(i) + " outside 0.." + std::to_string(data.size() - 1));
}

} // namespace detail

namespace detail {

template <std::floating_point Real>
basic_geo_real<Real> node_x(const hermite_data& data, std::size_t j) {
    return basic_geo_real<Real>::from_log(static_cast<Real>(data[j].x.log_value()));
}

template <std::floating_point Real>
basic_geo_real<Real> lagrange_T(const hermite_data& data, std::size_t i, basic_geo_real<Real> x) {
    require_node(data, i);
    std::vector<basic_geo_real<Real>> num, den;
    for (std::size_t j = 0; j < data.size(); ++j) {
        if (j == i) continue;
        num.push_back(x - node_x<Real>(data, j));
        den.push_back(node_x<Real>(data, i) - node_x<Real>(data, j));
    }
    return gprod<Real>(num) / gprod<Real>(den);
}

template <std::floating_point Real>
basic_geo_real<Real> lagrange_T_derivative_at_node(const hermite_data& data, std::size_t i) {
    require_node(data, i);
    Real acc = 0;
    const Real ti = static_cast<Real>(data[i].x.log_value());
    for (std::size_t j = 0; j < data.size(); ++j)
        if (j != i) acc += Real(1) / (ti - static_cast<Real>(data[j].x.log_value()));
    return basic_geo_real<Real>::from_log(acc);
}

template <std::floating_point Real>
std::pair<basic_geo_real<Real>, basic_geo_real<Real>> lagrange_H(const hermite_data& data, std::size_t i,
                                                                 basic_geo_real<Real> x) {
    using G = basic_geo_real<Real>;
    const G e = G::identity();
    const G e2 = G::from_log(2);
    const G T = lagrange_T<Real>(data, i, x);
    const G T2 = T * T;  // T^(2_G)
    const G gap = x - node_x<Real>(data, i);
    const G H = (e - e2 * lagrange_T_derivative_at_node<Real>(data, i) * gap) * T2;
    return {H, gap * T2};
}

} // namespace detail

/// T_{n,i}(x): e at x_i, 1 at every other node.
inline geo_real lagrange_T(const hermite_data& data, std::size_t i, geo_real x) {
    return detail::lagrange_T<double>(data, i, x);
}

/// D_G T_{n,i} at x_i, exact: its log is sum_{j!=i} 1/(ln x_i - ln x_j).
inline geo_real lagrange_T_derivative_at_node(const hermite_data& data, std::size_t i) {
    return detail::lagrange_T_derivative_at_node<double>(data, i);
}

/// (H_i(x), H^_i(x))
inline std::pair<geo_real, geo_real> lagrange_H(const hermite_data& data, std::size_t i, geo_real x) {
    return detail::lagrange_H<double>(data, i, x);
}

/// The H_i terms are large and cancel away from the nodes, so the sum is carried in long double.
inline geo_real eval_lagrange(const hermite_data& data, geo_real x) {
    using G = basic_geo_real<long double>;
    const G xl = G::from_log(x.log_value());
    std::vector<G> terms;
    terms.reserve(2 * data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto [H, H_hat] = detail::lagrange_H<long double>(data, i, xl);
        terms.push_back(H * G::from_log(data[i].f.log_value()));
        terms.push_back(H_hat * G::from_log(data[i].dgf.log_value()));
    }
    return geo_real::from_log(static_cast<double>(gsum<long double>(terms).log_value()));
}

struct divided_diff_table {
    std::vector<geo_real> z;  // z_j = x_{floor(j/2)}
    /// columns[c][j] = f_G[z_j, ..., z_{j+c}]
    std::vector<std::vector<geo_real>> columns;

    std::size_t node_count() const noexcept { return z.size() / 2; }
};

inline divided_diff_table build_divided_diff_table(const hermite_data& data) {
    divided_diff_table table;
    const std::size_t size = 2 * data.size();
    table.z.reserve(size);
    std::vector<geo_real> values;
    for (const auto& node : data.nodes()) {
        table.z.insert(table.z.end(), {node.x, node.x});
        values.insert(values.end(), {node.f, node.f});
    }
    table.columns.push_back(std::move(values));

    for (std::size_t c = 1; c < size; ++c) {
        const auto& prev = table.columns.back();
        std::vector<geo_real> col;
        col.reserve(size - c);
        for (std::size_t j = 0; j + c < size; ++j) {
            if (c == 1 && j % 2 == 0) {
                col.push_back(data[j / 2].dgf);
            } else {
                col.push_back((prev[j + 1] - prev[j]) / (table.z[j + c] - table.z[j]));
            }
        }
        table.columns.push_back(std::move(col));
    }
    return table;
}

/// Newton form: coeffs[0] = f(x_0), coeffs[k] = f_G[z_0..z_k]; centers z_0..z_{2n}.
struct bigeo_polynomial {
    std::vector<geo_real> centers;
    std::vector<geo_real> coeffs;

    /// Largest k whose coefficient is not the geometric zero (within `tolerance`).
    std::size_t geometric_degree(double tolerance = default_tolerance) const {
        for (std::size_t k = coeffs.size(); k-- > 0;)
            if (std::abs(coeffs[k].log_value()) > tolerance) return k;
        return 0;
    }

    /// Drops trailing geometric-zero coefficients (and their centers).
    bigeo_polynomial trimmed(double tolerance = default_tolerance) const {
        const std::size_t deg = geometric_degree(tolerance);
        bigeo_polynomial p;
        p.coeffs.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(deg + 1));
        p.centers.assign(centers.begin(), centers.begin() + static_cast<std::ptrdiff_t>(deg));
        return p;
    }
};

inline bigeo_polynomial newton_coeffs(const divided_diff_table& table) {
    if (table.columns.empty()) throw degenerate_nodes("empty divided-difference table");
    bigeo_polynomial p;
    for (const auto& col : table.columns) p.coeffs.push_back(col.front());
    p.centers.assign(table.z.begin(), table.z.end() - 1);
    return p;
}

/// Nested evaluation: a_0 (+) (x (-) z_0) (*) (a_1 (+) (x (-) z_1) (*) (...)).
inline geo_real eval_newton(const bigeo_polynomial& poly, geo_real x) {
    if (poly.coeffs.empty()) return geo_real::zero();
    geo_real acc = poly.coeffs.back();
    for (std::size_t k = poly.coeffs.size() - 1; k-- > 0;) acc = poly.coeffs[k] + (x - poly.centers[k]) * acc;
    return acc;
}

/// p_G as a positive function of a positive argument.
inline real_function as_real_function(bigeo_polynomial poly) {
    return {[poly = std::move(poly)](double x) { return eval_newton(poly, geo_real::from_positive(x)).to_positive(); },
            {}};
}

/**
 * Classical Hermite interpolation of the log-transformed data, in plain
 * doubles: nodes t_i = ln x_i, values ln f_i, slopes ln D_G f_i. Returns
 * e^(q(ln x)). Shares no code with the geometric routines above.
 */
inline geo_real classical_hermite_oracle(const hermite_data& data, geo_real x) {
    const std::size_t n = data.size();
    std::vector<double> z(2 * n), q(2 * n);
    std::vector<double> coef(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        z[2 * i] = z[2 * i + 1] = data[i].x.log_value();
        q[2 * i] = q[2 * i + 1] = data[i].f.log_value();
    }
    // In-place column sweep: after pass c, q[j] holds the divided difference ending at j.
    coef[0] = q[0];
    for (std::size_t c = 1; c < 2 * n; ++c) {
        for (std::size_t j = 2 * n - 1; j >= c; --j) {
            if (c == 1 && j % 2 == 1) {
                q[j] = data[j / 2].dgf.log_value();
            } else {
                const double dz = z[j] - z[j - c];
                if (dz == 0) throw degenerate_nodes("repeated abscissa in classical Hermite table");
                q[j] = (q[j] - q[j - 1]) / dz;
            }
        }
        coef[c] = q[c];
    }
    const double t = x.log_value();
    double acc = coef[2 * n - 1];
    for (std::size_t k = 2 * n - 1; k-- > 0;) acc = coef[k] + (t - z[k]) * acc;
    return geo_real::from_log(acc);
}

} // namespace bigeo
