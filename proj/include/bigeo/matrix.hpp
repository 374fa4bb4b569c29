#pragma once

/**
 * @file matrix.hpp
 * @brief Finite truncations of infinite matrices over R(G) and the B-matrix
 *        for maps into the Cesaro difference spaces.
 *
 * Rows and columns are 1-indexed. With A_n(x) = G-sum_k a_nk (*) x_k,
 *
 *   b_ik = e^(1/i) (*) (Delta_G^{m-1} a_1k (-) Delta_G^{m-1} a_{i+1,k}),
 *
 * where Delta_G acts along the row index n for a fixed column k. Then
 * B_i(x) = e^(1/i) (*) G-sum_{n=1}^{i} Delta_G^m A_n(x), which
 * `transform_consistency` evaluates both ways.
 *
 * A matrix with R rows yields B rows i = 1..R-m only; the rest of the
 * infinite B is not recoverable from the truncation.
 */

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bigeo/detail/summation.hpp"
#include "bigeo/error.hpp"
#include "bigeo/geo_real.hpp"
#include "bigeo/sequence.hpp"

namespace bigeo {

template <std::floating_point Real>
class basic_geo_matrix {
public:
    using value_type = basic_geo_real<Real>;

    basic_geo_matrix() = default;

    /// Geometric-zero filled (every entry 1).
    basic_geo_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static basic_geo_matrix from_rows(const std::vector<std::vector<value_type>>& rows) {
        if (rows.empty()) return {};
        basic_geo_matrix A(rows.size(), rows.front().size());
        for (std::size_t n = 0; n < rows.size(); ++n) {
            if (rows[n].size() != A.cols_)
                throw dimension_mismatch("matrix row " + std::to_string(n + 1) + " has " +
                                         std::to_string(rows[n].size()) + " entries, expected " +
                                         std::to_string(A.cols_));
            for (std::size_t k = 0; k < A.cols_; ++k) A.entries_[n * A.cols_ + k] = rows[n][k];
        }
        return A;
    }

    static basic_geo_matrix from_log_rows(const std::vector<std::vector<Real>>& rows) {
        std::vector<std::vector<value_type>> g;
        g.reserve(rows.size());
        for (const auto& r : rows) {
            auto& out = g.emplace_back();
            for (Real t : r) out.push_back(value_type::from_log(t));
        }
        return from_rows(g);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type operator()(std::size_t n, std::size_t k) const noexcept { return entries_[(n - 1) * cols_ + (k - 1)]; }
    value_type& operator()(std::size_t n, std::size_t k) noexcept { return entries_[(n - 1) * cols_ + (k - 1)]; }

    value_type at(std::size_t n, std::size_t k) const {
        if (n == 0 || n > rows_ || k == 0 || k > cols_)
            throw index_out_of_range("matrix index (" + std::to_string(n) + ", " + std::to_string(k) +
                                     ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        return (*this)(n, k);
    }

    /// Column k as a sequence indexed by row.
    basic_geo_sequence<Real> column(std::size_t k) const {
        std::vector<value_type> c;
        c.reserve(rows_);
        for (std::size_t n = 1; n <= rows_; ++n) c.push_back((*this)(n, k));
        return basic_geo_sequence<Real>(std::move(c));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> entries_;
};

using geo_matrix = basic_geo_matrix<double>;

/// A_n(x) = G-sum_{k=1}^{K} a_nk (*) x_k
template <std::floating_point Real>
basic_geo_real<Real> apply_row(const basic_geo_matrix<Real>& A, std::size_t n, const basic_geo_sequence<Real>& x) {
    if (x.size() < A.cols())
        throw dimension_mismatch("sequence has " + std::to_string(x.size()) + " terms but the matrix has " +
                                 std::to_string(A.cols()) + " columns");
    if (n == 0 || n > A.rows()) throw index_out_of_range("matrix row " + std::to_string(n) + " out of range");
    std::vector<Real> products(A.cols());
    for (std::size_t k = 1; k <= A.cols(); ++k) products[k - 1] = A(n, k).log_value() * x[k].log_value();
    return basic_geo_real<Real>::from_log(detail::pairwise_sum<Real>(products));
}

/// (A_n(x)) for n = 1..rows.
template <std::floating_point Real>
basic_geo_sequence<Real> apply(const basic_geo_matrix<Real>& A, const basic_geo_sequence<Real>& x) {
    std::vector<basic_geo_real<Real>> out;
    out.reserve(A.rows());
    for (std::size_t n = 1; n <= A.rows(); ++n) out.push_back(apply_row(A, n, x));
    return basic_geo_sequence<Real>(std::move(out));
}

template <std::floating_point Real>
basic_geo_matrix<Real> build_B(const basic_geo_matrix<Real>& A, unsigned m) {
    if (m == 0) throw domain_error("difference order m must be positive");
    if (A.rows() < m + 1)
        throw dimension_mismatch("B-matrix of order " + std::to_string(m) + " needs at least " +
                                 std::to_string(m + 1) + " rows, got " + std::to_string(A.rows()));
    const std::size_t out_rows = A.rows() - m;
    basic_geo_matrix<Real> B(out_rows, A.cols());
    for (std::size_t k = 1; k <= A.cols(); ++k) {
        const auto col = A.column(k);
        const auto d = delta_m_sequence(col, m - 1, out_rows + 1);
        for (std::size_t i = 1; i <= out_rows; ++i) {
            const Real diff = d[1].log_value() - d[i + 1].log_value();
            B(i, k) = basic_geo_real<Real>::from_log(diff / static_cast<Real>(i));
        }
    }
    return B;
}

template <std::floating_point Real>
struct basic_consistency_pair {
    basic_geo_real<Real> via_transform;  // e^(1/i) (*) G-sum_{n<=i} Delta_G^m A_n(x)
    basic_geo_real<Real> via_B;          // B_i(x)

    Real log_gap() const noexcept { return std::abs(via_transform.log_value() - via_B.log_value()); }
};

using consistency_pair = basic_consistency_pair<double>;

template <std::floating_point Real>
basic_consistency_pair<Real> transform_consistency(const basic_geo_matrix<Real>& A, unsigned m,
                                                   const basic_geo_sequence<Real>& x, std::size_t i) {
    if (m == 0) throw domain_error("difference order m must be positive");
    if (i == 0 || i + m > A.rows())
        throw dimension_mismatch("row " + std::to_string(i) + " of the order-" + std::to_string(m) +
                                 " B-matrix needs " + std::to_string(i + m) + " rows of A, got " +
                                 std::to_string(A.rows()));
    const auto Ax = apply(A, x);
    const auto diffs = delta_m_sequence(Ax, m, i);
    std::vector<Real> logs = diffs.logs();
    const Real lhs = detail::pairwise_sum<Real>(logs) / static_cast<Real>(i);
    const auto B = build_B(A, m);
    return {basic_geo_real<Real>::from_log(lhs), apply_row(B, i, x)};
}

/// Truncated row sums G-sum_{k<=K} |a_nk|_G; non-decreasing in K.
template <std::floating_point Real>
basic_geo_real<Real> row_abs_sum(const basic_geo_matrix<Real>& A, std::size_t n, std::size_t K) {
    if (K > A.cols()) throw dimension_mismatch("column truncation exceeds matrix width");
    if (n == 0 || n > A.rows()) throw index_out_of_range("matrix row " + std::to_string(n) + " out of range");
    Real acc = 0;
    for (std::size_t k = 1; k <= K; ++k) acc += std::abs(A(n, k).log_value());
    return basic_geo_real<Real>::from_log(acc);
}

} // namespace bigeo
