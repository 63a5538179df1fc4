#include <gtest/gtest.h>

#include <set>

#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/error.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"
#include "oracles.hpp"

using namespace dissoc;

namespace {

int tau(const Graph& g) { return oracle::d_independence(oracle::adjacency(g), 1); }

// Edges of the tau = 2 minimizer on m vertices.
int block_edges(int m) { return m % 2 == 0 ? m * (m - 2) / 2 : (m - 1) * (m - 1) / 2; }

}  // namespace

TEST(Cocktail, DegreesAndTau) {
    for (int d = 2; d <= 12; d += 2) {
        const Graph g = cocktail_party(d);
        EXPECT_EQ(g.min_degree(), d - 2);
        EXPECT_EQ(g.max_degree(), d - 2);
        EXPECT_FALSE(g.adjacent(0, 1));
        EXPECT_EQ(tau(g), std::min(d, 2));
    }
    for (int d = 3; d <= 11; d += 2) {
        const Graph g = odd_cocktail_party(d);
        EXPECT_EQ(g.degree(d - 1), d - 1);
        EXPECT_EQ(g.size(), block_edges(d));
        EXPECT_EQ(tau(g), 2);
    }
    EXPECT_THROW(cocktail_party(5), InvalidArgument);
    EXPECT_THROW(odd_cocktail_party(4), InvalidArgument);
}

TEST(CompleteMultipartite, Size) {
    const Graph g = complete_multipartite({1, 2, 3});
    EXPECT_EQ(g.order(), 6);
    EXPECT_EQ(g.size(), 2 + 3 + 6);
    EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(PartSizes, ValidMultisets) {
    EXPECT_EQ(part_size_multisets(6, 2), (std::vector<std::vector<int>>{{2, 4}, {3, 3}}));
    EXPECT_EQ(part_size_multisets(9, 2), (std::vector<std::vector<int>>{{4, 5}}));
    EXPECT_TRUE(is_valid_part_sizes(std::vector<int>{4, 6}));
    EXPECT_FALSE(is_valid_part_sizes(std::vector<int>{3, 5}));
    for (int n = 4; n <= 14; ++n) {
        for (const auto& sizes : part_size_multisets(n, 2)) EXPECT_EQ(sizes[0] + sizes[1], n);
    }
}

TEST(TuranFamily, MembersHaveExtremalSizeAndComplementTau) {
    for (int k = 2; k <= 3; ++k) {
        for (int n = 2 * k + 1; n <= 12; ++n) {
            for (const Graph& g : turan_family(n, k)) {
                int best = 1 << 30;
                for (const auto& sizes : part_size_multisets(n, k)) {
                    int sum = 0;
                    for (int s : sizes) sum += block_edges(s);
                    best = std::min(best, sum);
                }
                EXPECT_EQ(g.size(), n * (n - 1) / 2 - best);
                EXPECT_FALSE(contains_complete_multipartite(g, odd_cocktail_sizes(k)));
            }
        }
    }
}

TEST(MinimizerFamily, MembersAreConnectedWithTauTwoK) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 2}, {9, 2}, {10, 2}, {9, 3}, {11, 3}}) {
        const auto family = minimizer_family(n, k);
        ASSERT_FALSE(family.empty());
        std::set<CanonicalForm> forms;
        for (const Graph& g : family) {
            EXPECT_TRUE(g.connected());
            EXPECT_EQ(dissociation_number(g).value, 2 * k);
            EXPECT_TRUE(forms.insert(canonical_form(g)).second);
        }
    }
    EXPECT_EQ(minimizer_family(6, 2).size(), 3u);
    EXPECT_EQ(minimizer_family(8, 2).size(), 1u);
    EXPECT_EQ(minimizer_family(9, 2).size(), 2u);
}

TEST(HatMinimizer, Landmarks) {
    for (int n = 8; n <= 16; ++n) {
        const Construction h = hat_minimizer_4(n);
        EXPECT_EQ(h.graph.order(), n);
        EXPECT_EQ(dissociation_number(h.graph).value, 4);
        const Vertex u = h.at("u");
        const Vertex v = h.at("v");
        EXPECT_TRUE(h.graph.adjacent(u, v));
        EXPECT_FALSE(h.graph.adjacent(u, h.at("u'")));
        EXPECT_FALSE(h.graph.adjacent(v, h.at("v'")));
        EXPECT_EQ(h.links.size(), 1u);
    }
    EXPECT_THROW(hat_minimizer_4(7), InvalidArgument);
}

TEST(CpCycle, StructureAndAlignment) {
    const Construction c = cp_cycle(3, 4, ConnectorSpec::aligned(3));
    EXPECT_EQ(c.graph.order(), 12);
    EXPECT_EQ(c.graph.size(), 3 * 4 + 3);
    EXPECT_TRUE(ConnectorSpec::aligned(3).is_aligned(4));
    ConnectorSpec other = ConnectorSpec::aligned(3);
    other.pairs[1] = {0, 2};
    EXPECT_FALSE(other.is_aligned(4));
    const Construction p = cp_path(3, 4, ConnectorSpec::aligned(3));
    EXPECT_EQ(p.graph.size(), 3 * 4 + 2);
    EXPECT_THROW(cp_cycle(1, 4, ConnectorSpec::aligned(1)), InvalidArgument);
}

TEST(Gadgets, PartitionsCoverVertices) {
    for (GadgetKind kind : {GadgetKind::TwoPairs, GadgetKind::SplitPair, GadgetKind::ThreeExternal}) {
        for (int m : {4, 6}) {
            const Construction g = connector_gadget(kind, m);
            EXPECT_EQ(g.graph.order(), 5 * m);
            EXPECT_EQ(g.graph.size(), 5 * m * (m - 2) / 2 + 4);
            EXPECT_NO_THROW(check_partition(g.graph, gadget_partition(g, kind)));
            EXPECT_EQ(parse_gadget_kind(gadget_kind_name(kind)), kind);
        }
    }
    EXPECT_THROW(parse_gadget_kind("fig10"), InvalidArgument);
}

TEST(ConnectorSwap, SizePreserved) {
    const Graph a = connector_swap_configuration(path_graph(3), 0, complete_graph(2), 1, 4, false);
    const Graph b = connector_swap_configuration(path_graph(3), 0, complete_graph(2), 1, 4, true);
    EXPECT_EQ(a.size(), b.size());
    EXPECT_EQ(a.order(), b.order());
}

TEST(SpectralMaximizer, HasRequestedIndependence) {
    for (int n = 5; n <= 9; ++n) {
        for (int d = 1; d <= 2; ++d) {
            for (int s = d + 1; s < n; ++s) {
                if ((s * d) % 2 != 0) continue;
                const Graph g = spectral_maximizer(n, s, d);
                EXPECT_EQ(oracle::d_independence(oracle::adjacency(g), d), s);
                EXPECT_TRUE(g.connected());
            }
        }
    }
    const Graph c = regular_circulant(7, 2);
    EXPECT_EQ(c.min_degree(), 2);
    EXPECT_EQ(c.max_degree(), 2);
}
