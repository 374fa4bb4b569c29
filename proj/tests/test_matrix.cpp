#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bigeo/matrix.hpp"
#include "support/oracles.hpp"

using bigeo::geo_exp;
using bigeo::geo_matrix;
using bigeo::geo_real;
using bigeo::geo_sequence;

namespace {

geo_matrix random_matrix(bigeo::test::rng& r, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<double>> logs(rows);
    for (auto& row : logs) row = r.logs(cols, -1, 1);
    return geo_matrix::from_log_rows(logs);
}

// b_ik straight from the definition, using repeated differencing of the column logs.
double b_reference(const geo_matrix& A, unsigned m, std::size_t i, std::size_t k) {
    std::vector<double> col;
    for (std::size_t n = 1; n <= A.rows(); ++n) col.push_back(A(n, k).log_value());
    const auto d = bigeo::test::repeated_difference(col, m - 1);
    return (d[0] - d[i]) / static_cast<double>(i);
}

} // namespace

TEST(GeoMatrix, ConstructionAndAccess) {
    const geo_matrix Z(2, 3);
    EXPECT_EQ(Z(2, 3).log_value(), 0.0);
    const auto A = geo_matrix::from_log_rows({{1, 2}, {3, 4}});
    EXPECT_EQ(A(2, 1).log_value(), 3.0);
    EXPECT_EQ(A.column(2)[2].log_value(), 4.0);
    EXPECT_THROW(A.at(3, 1), bigeo::index_out_of_range);
    EXPECT_THROW(A.at(1, 0), bigeo::index_out_of_range);
    EXPECT_THROW(geo_matrix::from_log_rows({{1, 2}, {3}}), bigeo::dimension_mismatch);
}

TEST(ApplyRow, Examples) {
    const auto A = geo_matrix::from_log_rows({{1, 2}, {0, 1}});
    const auto x = geo_sequence::from_logs(std::vector<double>{3, 4});
    EXPECT_NEAR(bigeo::apply_row(A, 1, x).log_value(), 11.0, 1e-15);
    EXPECT_NEAR(bigeo::apply_row(A, 2, x).log_value(), 4.0, 1e-15);

    // e on the diagonal is the identity transform
    const auto I = geo_matrix::from_log_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto y = geo_sequence::from_logs(std::vector<double>{-0.5, 2.25, 7});
    const auto Iy = bigeo::apply(I, y);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(Iy[k].log_value(), y[k].log_value());

    // a_nk = 1 everywhere sends every sequence to the zero sequence
    const auto Zy = bigeo::apply(geo_matrix(4, 3), y);
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(Zy[n].log_value(), 0.0);
}

TEST(ApplyRow, Errors) {
    const auto A = geo_matrix::from_log_rows({{1, 2, 3}});
    EXPECT_THROW(bigeo::apply_row(A, 1, geo_sequence::from_logs(std::vector<double>{1, 2})), bigeo::dimension_mismatch);
    EXPECT_THROW(bigeo::apply_row(A, 2, geo_sequence::from_logs(std::vector<double>{1, 2, 3})),
                 bigeo::index_out_of_range);
}

TEST(BuildB, FirstOrderByHand) {
    // m = 1: b_ik = (ln a_1k - ln a_{i+1,k}) / i
    const auto A = geo_matrix::from_log_rows({{1, 5}, {2, 1}, {4, -1}});
    const auto B = bigeo::build_B(A, 1);
    ASSERT_EQ(B.rows(), 2u);
    ASSERT_EQ(B.cols(), 2u);
    EXPECT_NEAR(B(1, 1).log_value(), -1.0, 1e-15);
    EXPECT_NEAR(B(1, 2).log_value(), 4.0, 1e-15);
    EXPECT_NEAR(B(2, 1).log_value(), -1.5, 1e-15);
    EXPECT_NEAR(B(2, 2).log_value(), 3.0, 1e-15);
}

TEST(BuildB, ConstantRowsGiveGeometricZero) {
    std::vector<std::vector<double>> rows(6, std::vector<double>{0.3, -2, 1.7});
    const auto A = geo_matrix::from_log_rows(rows);
    for (unsigned m = 1; m <= 5; ++m) {
        const auto B = bigeo::build_B(A, m);
        EXPECT_EQ(B.rows(), 6u - m);
        for (std::size_t i = 1; i <= B.rows(); ++i)
            for (std::size_t k = 1; k <= B.cols(); ++k) EXPECT_EQ(B(i, k).log_value(), 0.0);
    }
}

TEST(BuildB, MatchesDefinition) {
    bigeo::test::rng r(88);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t R = r.index(2, 12), K = r.index(1, 6);
        const auto A = random_matrix(r, R, K);
        const unsigned m = static_cast<unsigned>(r.index(1, R - 1));
        const auto B = bigeo::build_B(A, m);
        ASSERT_EQ(B.rows(), R - m);
        for (std::size_t i = 1; i <= B.rows(); ++i)
            for (std::size_t k = 1; k <= K; ++k) ASSERT_NEAR(B(i, k).log_value(), b_reference(A, m, i, k), 1e-12);
    }
}

TEST(BuildB, Errors) {
    const auto A = geo_matrix::from_log_rows({{1}, {2}});
    EXPECT_THROW(bigeo::build_B(A, 2), bigeo::dimension_mismatch);
    EXPECT_THROW(bigeo::build_B(A, 0), bigeo::domain_error);
    EXPECT_NO_THROW(bigeo::build_B(A, 1));
}

TEST(TransformConsistency, RandomInstances) {
    bigeo::test::rng r(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t R = r.index(2, 10), K = r.index(1, 8);
        const auto A = random_matrix(r, R, K);
        const auto x = r.sequence(K);
        const unsigned m = static_cast<unsigned>(r.index(1, R - 1));
        const std::size_t i = r.index(1, R - m);
        const auto c = bigeo::transform_consistency(A, m, x, i);
        EXPECT_LT(c.log_gap(), 1e-10) << "R=" << R << " m=" << m << " i=" << i;
    }
}

TEST(TransformConsistency, Errors) {
    const auto A = geo_matrix::from_log_rows({{1, 2}, {3, 4}, {5, 6}});
    const auto x = geo_sequence::from_logs(std::vector<double>{1, 1});
    EXPECT_NO_THROW(bigeo::transform_consistency(A, 2, x, 1));
    EXPECT_THROW(bigeo::transform_consistency(A, 2, x, 2), bigeo::dimension_mismatch);
    EXPECT_THROW(bigeo::transform_consistency(A, 1, x, 0), bigeo::dimension_mismatch);
}

TEST(BuildBProperty, TelescopedSumOfRowDifferences) {
    // i (*) b_ik = G-sum_{n<=i} Delta_G^m a_nk along the row index
    bigeo::test::rng r(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t R = r.index(3, 10);
        const auto A = random_matrix(r, R, 3);
        const unsigned m = static_cast<unsigned>(r.index(1, R - 1));
        const auto B = bigeo::build_B(A, m);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto col = A.column(k).logs();
            const auto d = bigeo::test::repeated_difference(col, m);
            double run = 0;
            for (std::size_t i = 1; i <= B.rows(); ++i) {
                run += d[i - 1];
                ASSERT_NEAR(B(i, k).log_value() * static_cast<double>(i), run, 1e-11);
            }
        }
    }
}

TEST(BuildBProperty, LinearInTheMatrix) {
    bigeo::test::rng r(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t R = r.index(2, 8), K = r.index(1, 5);
        const auto A = random_matrix(r, R, K), C = random_matrix(r, R, K);
        const auto a = r.geo(-2, 2);
        geo_matrix S(R, K);
        for (std::size_t n = 1; n <= R; ++n)
            for (std::size_t k = 1; k <= K; ++k) S(n, k) = A(n, k) + a * C(n, k);
        const unsigned m = static_cast<unsigned>(r.index(1, R - 1));
        const auto BA = bigeo::build_B(A, m), BC = bigeo::build_B(C, m), BS = bigeo::build_B(S, m);
        for (std::size_t i = 1; i <= BS.rows(); ++i)
            for (std::size_t k = 1; k <= K; ++k)
                ASSERT_NEAR(BS(i, k).log_value(), (BA(i, k) + a * BC(i, k)).log_value(), 1e-11);
    }
}

TEST(RowAbsSum, MonotoneInTruncation) {
    bigeo::test::rng r(29);
    const auto A = random_matrix(r, 5, 9);
    for (std::size_t n = 1; n <= 5; ++n) {
        double prev = 0;
        for (std::size_t K = 0; K <= 9; ++K) {
            const double s = bigeo::row_abs_sum(A, n, K).log_value();
            EXPECT_GE(s, prev);
            prev = s;
        }
    }
    EXPECT_EQ(bigeo::row_abs_sum(A, 1, 0).log_value(), 0.0);
    EXPECT_THROW(bigeo::row_abs_sum(A, 1, 10), bigeo::dimension_mismatch);
    EXPECT_THROW(bigeo::row_abs_sum(A, 6, 2), bigeo::index_out_of_range);
}
