#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dissoc/constructions.hpp"
#include "dissoc/error.hpp"
#include "dissoc/spectral.hpp"
#include "oracles.hpp"

using namespace dissoc;

TEST(Spectrum, CompleteGraph) {
    const Spectrum s = spectrum(complete_graph(6));
    EXPECT_NEAR(s.rho, 5.0, 1e-12);
    EXPECT_NEAR(s.lambda_min, -1.0, 1e-12);
    EXPECT_LT(s.residual, 1e-10);
}

TEST(Spectrum, CyclesAndPathsClosedForm) {
    for (int n = 3; n <= 20; ++n) {
        const Spectrum c = spectrum(cycle_graph(n));
        std::vector<double> expected;
        for (int k = 0; k < n; ++k) expected.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
        std::sort(expected.begin(), expected.end());
        std::vector<double> got = c.eigenvalues;
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got.size(), expected.size());
        for (int k = 0; k < n; ++k) EXPECT_NEAR(got[k], expected[k], 1e-9);
        EXPECT_NEAR(spectral_radius(path_graph(n)), 2.0 * std::cos(std::numbers::pi / (n + 1)), 1e-9);
    }
}

TEST(Spectrum, PowerIterationOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const Graph g = oracle::random_connected_graph(n, 0.3, rng);
        const Spectrum s = spectrum(g);
        EXPECT_NEAR(s.rho, oracle::power_iteration_rho(oracle::adjacency(g)), 1e-9);
        double positive = 0.0;
        for (double x : s.principal_vector) positive = std::max(positive, x);
        EXPECT_GT(positive, 0.0);
    }
}

TEST(Quotient, EquitableDetectionAndRowSums) {
    const Graph cp = cocktail_party(6);
    const VertexPartition pairs{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4, 5}};
    EXPECT_TRUE(is_equitable(cp, pairs));
    const QuotientMatrix q = quotient(cp, pairs);
    EXPECT_EQ(q.entries, (std::vector<std::vector<double>>{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}));
    EXPECT_NEAR(matrix_spectral_radius(q.entries), spectral_radius(cp), 1e-9);

    const Graph p4 = path_graph(4);
    const VertexPartition bad{VertexSet{0, 1}, VertexSet{2, 3}};
    EXPECT_FALSE(is_equitable(p4, bad));
    EXPECT_THROW(quotient(p4, bad), InvalidArgument);
    const QuotientMatrix lenient = quotient(p4, bad, true);
    EXPECT_FALSE(lenient.equitable);
    EXPECT_NEAR(lenient.entries[0][1], 0.5, 1e-12);
}

TEST(Quotient, RejectsBadPartitions) {
    const Graph g = path_graph(4);
    EXPECT_THROW(check_partition(g, {VertexSet{0, 1}, VertexSet{1, 2, 3}}), InvalidArgument);
    EXPECT_THROW(check_partition(g, {VertexSet{0, 1}, VertexSet{2}}), InvalidArgument);
}

TEST(CharPoly, MatchesFaddeevLeVerrier) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
        std::vector<std::vector<long long>> mm(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) mm[i][j] = m[i][j] = static_cast<std::int64_t>(rng() % 9) - 3;
        }
        const CharPoly p = char_poly(m);
        const auto expected = oracle::char_poly(mm);
        ASSERT_EQ(p.coefficients.size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(p.coefficients[k], expected[k]);
    }
}

TEST(CharPoly, RootOfCubic) {
    const std::vector<double> cubic{1, -1, -4, 2};
    const double root = largest_root(cubic);
    EXPECT_NEAR(static_cast<double>(evaluate_polynomial(cubic, root)), 0.0, 1e-10);
    EXPECT_NEAR(root, 2.342923083, 1e-9);
    const CharPoly p = char_poly(std::vector<std::vector<std::int64_t>>{{0, 0, 2}, {0, 1, 2}, {1, 1, 0}});
    EXPECT_EQ(p.coefficients, (std::vector<std::int64_t>{1, -1, -4, 2}));
    EXPECT_EQ(p.to_string(), "x^3 - x^2 - 4x + 2");
}

TEST(ClosedForms, CycleAndApex) {
    EXPECT_NEAR(cp_cycle_rho_closed_form(4), (1.0 + std::sqrt(17.0)) / 2.0, 1e-12);
    EXPECT_NEAR(cp_cycle_rho_closed_form(6), (3.0 + std::sqrt(33.0)) / 2.0, 1e-12);
    EXPECT_NEAR(cp_cycle_rho_bound(12, 3), 2.0 + 6.0 / 9.0, 1e-12);
    const double apex10 = apex_linked_rho_closed_form(10);
    const std::vector<int> sizes{5, 5};
    const std::vector<BlockLink> link{{0, 4, 1, 4}};
    EXPECT_NEAR(apex10, spectral_radius(linked_blocks(sizes, link).graph), 1e-9);
}

TEST(Interlacing, QuotientEigenvaluesLieInsideGraphSpectrum) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_connected_graph(8, 0.4, rng);
        const VertexPartition p{VertexSet{0, 1, 2}, VertexSet{3, 4}, VertexSet{5, 6, 7}};
        const QuotientMatrix q = quotient(g, p, true);
        const Spectrum s = spectrum(g);
        EXPECT_LE(matrix_spectral_radius(q.entries), s.rho + 1e-9);
    }
}
