#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "bigeo/hermite.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using bigeo::geo_exp;
using bigeo::geo_real;
using bigeo::hermite_data;
using bigeo::hermite_node;

namespace {

const double e = std::numbers::e;

} // namespace

TEST(HermiteData, DerivativePrecedence) {
    std::vector<bigeo::node_record> rows{{2.0, 3.0, 1.5, {}}, {4.0, 5.0, {}, 1.25}, {8.0, 2.0, {}, {}}};
    const bigeo::real_function fallback{[](double x) { return x; }, {}};
    const auto data = hermite_data::from_records(rows, fallback);
    EXPECT_NEAR(data[0].dgf.log_value(), 2.0 * 1.5 / 3.0, 1e-15);
    EXPECT_EQ(data[1].dgf.to_positive(), 1.25);
    EXPECT_NEAR(data[2].dgf.log_value(), 1.0, 1e-9);  // D_G x = e
    EXPECT_THROW(hermite_data::from_records(rows), bigeo::domain_error);
}

TEST(HermiteData, RejectsDegenerateInput) {
    EXPECT_THROW(hermite_data(std::vector<hermite_node>{}), bigeo::degenerate_nodes);
    const hermite_node a{geo_exp(1.0), geo_exp(2.0), geo_exp(2.0)};
    EXPECT_THROW(hermite_data({a, a}), bigeo::degenerate_nodes);
    std::vector<bigeo::node_record> bad{{-1.0, 2.0, 1.0, {}}};
    EXPECT_THROW(hermite_data::from_records(bad), bigeo::domain_error);
}

TEST(LagrangeT, KroneckerAndMidpoint) {
    const auto data = bigeo::test::square_data();
    EXPECT_NEAR(bigeo::lagrange_T(data, 0, data[0].x).log_value(), 1.0, 1e-15);
    EXPECT_EQ(bigeo::lagrange_T(data, 0, data[1].x).log_value(), 0.0);
    EXPECT_NEAR(bigeo::lagrange_T(data, 0, geo_exp(1.5)).log_value(), 0.5, 1e-15);
    EXPECT_THROW(bigeo::lagrange_T(data, 2, geo_exp(1.5)), bigeo::index_out_of_range);
}

TEST(LagrangeT, DerivativeAtNodeMatchesNumeric) {
    bigeo::test::rng r(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto data = bigeo::test::random_hermite(r, r.index(2, 5));
        for (std::size_t i = 0; i < data.size(); ++i) {
            // T_i vanishes geometrically at the other nodes, so probe the log-domain slope directly.
            const double t = data[i].x.log_value(), h = 1e-6;
            const double up = bigeo::lagrange_T(data, i, geo_exp(t + h)).log_value();
            const double dn = bigeo::lagrange_T(data, i, geo_exp(t - h)).log_value();
            EXPECT_NEAR(bigeo::lagrange_T_derivative_at_node(data, i).log_value(), (up - dn) / (2 * h), 1e-6);
        }
    }
}

TEST(LagrangeH, CardinalityConditions) {
    bigeo::test::rng r(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto data = bigeo::test::random_hermite(r, r.index(2, 5));
        for (std::size_t i = 0; i < data.size(); ++i) {
            for (std::size_t j = 0; j < data.size(); ++j) {
                const auto [H, H_hat] = bigeo::lagrange_H(data, i, data[j].x);
                EXPECT_NEAR(H.log_value(), i == j ? 1.0 : 0.0, 1e-12);
                EXPECT_NEAR(H_hat.log_value(), 0.0, 1e-12);

                const bigeo::real_function Hf{
                    [&, i](double x) { return bigeo::lagrange_H(data, i, geo_real::from_positive(x)).first.to_positive(); },
                    {}};
                const bigeo::real_function Hhf{
                    [&, i](double x) { return bigeo::lagrange_H(data, i, geo_real::from_positive(x)).second.to_positive(); },
                    {}};
                const double xj = data[j].x.to_positive();
                EXPECT_NEAR(bigeo::dg_numeric(Hf, xj, 1e-6).log_value(), 0.0, 1e-6);
                EXPECT_NEAR(bigeo::dg_numeric(Hhf, xj, 1e-6).log_value(), i == j ? 1.0 : 0.0, 1e-6);
            }
        }
    }
}

TEST(DividedDifferences, SquareDataTable) {
    const auto data = bigeo::test::square_data();
    EXPECT_NEAR(data[0].dgf.log_value(), 2.0, 1e-14);
    EXPECT_NEAR(data[1].dgf.log_value(), 2.0, 1e-14);
    const auto table = bigeo::build_divided_diff_table(data);
    ASSERT_EQ(table.columns.size(), 4u);
    for (auto v : table.columns[1]) EXPECT_NEAR(v.log_value(), 2.0, 1e-14);
    for (auto v : table.columns[2]) EXPECT_NEAR(v.log_value(), 0.0, 1e-14);
    EXPECT_NEAR(table.columns[3][0].log_value(), 0.0, 1e-14);
}

TEST(DividedDifferences, LnDataAgainstFourDecimalTable) {
    const auto table = bigeo::build_divided_diff_table(bigeo::test::ln_data());
    const auto& ref4 = bigeo::test::ln_table_4dp();
    ASSERT_EQ(table.columns.size(), 8u);
    for (std::size_t c = 1; c <= 7; ++c) {
        ASSERT_EQ(table.columns[c].size(), ref4[c - 1].size());
        for (std::size_t j = 0; j < ref4[c - 1].size(); ++j)
            EXPECT_NEAR(table.columns[c][j].to_positive(), ref4[c - 1][j], 0.002) << "column " << c << " row " << j;
    }
}

TEST(DividedDifferences, EqualArgumentEntriesAreTheDerivativeData) {
    bigeo::test::rng r(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto data = bigeo::test::random_hermite(r, r.index(1, 6));
        const auto table = bigeo::build_divided_diff_table(data);
        for (std::size_t j = 0; j < data.size(); ++j)
            EXPECT_EQ(table.columns[1][2 * j].log_value(), data[j].dgf.log_value());
    }
}

TEST(DividedDifferences, FlatDataGivesGeometricZeros) {
    std::vector<hermite_node> nodes;
    for (double t : {0.2, 1.0, 2.5}) nodes.push_back({geo_exp(t), geo_exp(-0.7), geo_real::zero()});
    const auto table = bigeo::build_divided_diff_table(hermite_data(nodes));
    for (std::size_t c = 1; c < table.columns.size(); ++c)
        for (auto v : table.columns[c]) EXPECT_EQ(v.log_value(), 0.0);
}

TEST(Newton, SquareData) {
    const auto poly = bigeo::newton_coeffs(bigeo::build_divided_diff_table(bigeo::test::square_data()));
    ASSERT_EQ(poly.coeffs.size(), 4u);
    const double expected[4] = {2.0, 2.0, 0.0, 0.0};
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(poly.coeffs[k].log_value(), expected[k], 1e-14);
    EXPECT_EQ(poly.geometric_degree(), 1u);
    EXPECT_EQ(poly.trimmed().coeffs.size(), 2u);
    EXPECT_NEAR(bigeo::eval_newton(poly, geo_exp(1.5)).to_positive(), std::exp(3.0), 1e-12);
    EXPECT_NEAR(bigeo::eval_newton(poly.trimmed(), geo_exp(1.5)).to_positive(), 20.0855, 5e-5);
    EXPECT_EQ(bigeo::eval_newton(poly, poly.centers[0]).log_value(), poly.coeffs[0].log_value());
}

TEST(Newton, LnDataCoefficients) {
    const auto poly = bigeo::newton_coeffs(bigeo::build_divided_diff_table(bigeo::test::ln_data()));
    const double ref4[8] = {1.0986, 2.4849, 0.7445, 1.1257, 0.9613, 1.0139, 0.9959, 1.0014};
    ASSERT_EQ(poly.coeffs.size(), 8u);
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(poly.coeffs[k].to_positive(), ref4[k], 0.002);
    EXPECT_LE(poly.geometric_degree(), 7u);
}

TEST(Newton, SingleNode) {
    const hermite_node n{geo_exp(0.4), geo_exp(1.2), geo_exp(-0.3)};
    const hermite_data data({n});
    const auto poly = bigeo::newton_coeffs(bigeo::build_divided_diff_table(data));
    for (double t : {-1.0, 0.4, 2.0}) {
        const auto x = geo_exp(t);
        EXPECT_NEAR(bigeo::eval_newton(poly, x).log_value(), (n.f + n.dgf * (x - n.x)).log_value(), 1e-14);
    }
}

TEST(Lagrange, SquareDataIsSquare) {
    const auto data = bigeo::test::square_data();
    for (double t = 0.0; t <= 3.0; t += 0.125) {
        EXPECT_NEAR(bigeo::eval_lagrange(data, geo_exp(t)).log_value(), 2 * t, 1e-12);
        EXPECT_NEAR(bigeo::classical_hermite_oracle(data, geo_exp(t)).log_value(), 2 * t, 1e-12);
    }
}

TEST(HermiteProperty, AllFormsAgree) {
    bigeo::test::rng r(44);
    for (int trial = 0; trial < 50; ++trial) {
        const auto data = bigeo::test::random_hermite(r, r.index(1, 6));
        const auto poly = bigeo::newton_coeffs(bigeo::build_divided_diff_table(data));
        EXPECT_LE(poly.coeffs.size(), 2 * data.size());
        EXPECT_LE(poly.geometric_degree(), 2 * data.size() - 1);
        const double lo = data.nodes().front().x.log_value(), hi = data.nodes().back().x.log_value();
        for (int s = 0; s < 100; ++s) {
            const auto x = geo_exp(r.uniform(lo, hi));
            const double newton = bigeo::eval_newton(poly, x).log_value();
            EXPECT_NEAR(bigeo::eval_lagrange(data, x).log_value(), newton, 1e-9);
            EXPECT_NEAR(bigeo::classical_hermite_oracle(data, x).log_value(), newton, 1e-9);
            EXPECT_NEAR(bigeo::test::newton_expanded(poly, x).log_value(), newton, 1e-9);
        }
    }
}

TEST(HermiteProperty, Osculation) {
    bigeo::test::rng r(45);
    for (int trial = 0; trial < 30; ++trial) {
        const auto data = bigeo::test::random_hermite(r, r.index(1, 5));
        const auto p = bigeo::as_real_function(bigeo::newton_coeffs(bigeo::build_divided_diff_table(data)));
        for (const auto& node : data.nodes()) {
            EXPECT_NEAR(geo_real::from_positive(p.eval(node.x.to_positive())).log_value(), node.f.log_value(), 1e-9);
            EXPECT_NEAR(bigeo::dg_numeric(p, node.x.to_positive(), 1e-6).log_value(), node.dgf.log_value(), 1e-5);
        }
    }
}

TEST(HermiteProperty, ReproducesLowDegreeData) {
    // data sampled from a bigeometric polynomial of degree <= 2n+1 is reproduced exactly
    bigeo::test::rng r(46);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = r.index(1, 4);
        std::vector<double> c = r.logs(2 * n, -1, 1);
        auto q = [&](double t) {
            double acc = 0;
            for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
            return acc;
        };
        auto dq = [&](double t) {
            double acc = 0;
            for (std::size_t k = c.size(); k-- > 1;) acc = acc * t + double(k) * c[k];
            return acc;
        };
        std::vector<hermite_node> nodes;
        for (double t : bigeo::test::separated_logs(r, n, 0.1, 3.0, 0.2))
            nodes.push_back({geo_exp(t), geo_exp(q(t)), geo_exp(dq(t))});
        const auto poly = bigeo::newton_coeffs(bigeo::build_divided_diff_table(hermite_data(nodes)));
        for (double t : {0.0, 0.7, 1.9, 3.5}) EXPECT_NEAR(bigeo::eval_newton(poly, geo_exp(t)).log_value(), q(t), 1e-8);
    }
}
