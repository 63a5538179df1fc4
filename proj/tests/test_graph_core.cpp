#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "dissoc/canonical.hpp"
#include "dissoc/enumerate.hpp"
#include "dissoc/error.hpp"
#include "dissoc/graph.hpp"
#include "dissoc/graph6.hpp"
#include "oracles.hpp"

using namespace dissoc;

TEST(Graph, BasicCounts) {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    EXPECT_EQ(g.order(), 5);
    EXPECT_EQ(g.size(), 4);
    EXPECT_TRUE(g.connected());
    EXPECT_EQ(g.max_degree(), 2);
    EXPECT_EQ(g.min_degree(), 1);
    g.remove_edge(2, 3);
    EXPECT_FALSE(g.connected());
    EXPECT_EQ(g.components().size(), 2u);
}

TEST(Graph, RejectsLoopsAndBadVertices) {
    Graph g(3);
    EXPECT_THROW(g.add_edge(1, 1), InvalidArgument);
    EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
}

TEST(Graph, ComplementAndJoin) {
    const Graph p4 = path_graph(4);
    const Graph c = complement(p4);
    EXPECT_EQ(c.size(), 6 - 3);
    EXPECT_TRUE(isomorphic(c, p4));  // P4 is self-complementary
    const Graph j = join(complete_graph(2), empty_graph(3));
    EXPECT_EQ(j.size(), 1 + 6);
    EXPECT_EQ(disjoint_union(p4, p4).size(), 6);
}

TEST(Graph, KelmansMovesNeighbours) {
    // star centre 0 with leaves 1..3, plus an isolated-from-0 vertex 4 joined to 3
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    const Graph h = kelmans(g, 3, 0);
    // neighbours 1 and 2 of 0 that are not neighbours of 3 move to 3; 0-3 stays
    EXPECT_EQ(h.size(), g.size());
    EXPECT_TRUE(h.adjacent(3, 1));
    EXPECT_TRUE(h.adjacent(3, 2));
    EXPECT_TRUE(h.adjacent(0, 3));
    EXPECT_FALSE(h.adjacent(0, 1));
}

TEST(Graph6, MatchesIndependentEncoder) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const std::string text = to_graph6(g);
        EXPECT_EQ(text, oracle::graph6(oracle::adjacency(g)));
        EXPECT_EQ(from_graph6(text), g);
    }
}

TEST(Graph6, KnownStrings) {
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(path_graph(5)), "DhC");
    EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(from_graph6(""), MalformedInput);
    EXPECT_THROW(from_graph6("C"), MalformedInput);
    EXPECT_THROW(from_graph6("C~~"), MalformedInput);
    EXPECT_THROW(from_graph6("C!"), MalformedInput);
}

TEST(Graph6, StreamRoundTrip) {
    std::vector<Graph> graphs{complete_graph(3), path_graph(6), cycle_graph(7)};
    std::stringstream buffer;
    write_graph6(buffer, graphs);
    EXPECT_EQ(read_graph6(buffer), graphs);
}

TEST(Canonical, AgreesWithPermutationOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph a = oracle::random_graph(n, 0.5, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph b = trial % 2 == 0 ? a.relabeled(perm) : oracle::random_graph(n, 0.5, rng);
        EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(oracle::adjacency(a), oracle::adjacency(b)));
        if (trial % 2 == 0) EXPECT_EQ(canonical_form(a), canonical_form(b));
    }
}

TEST(Canonical, CanonicalGraphIsFixedPoint) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(9, 0.5, rng);
        const Graph c = canonical_graph(g);
        EXPECT_TRUE(is_canonical(c));
        EXPECT_EQ(canonical_graph(c), c);
    }
}

// Orbit count over all labelled graphs, reduced by the permutation oracle.
TEST(Enumerate, MatchesLabelledOrbitCount) {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<int>> classes;
        std::set<std::vector<int>> connected_classes;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            oracle::Matrix a(n, std::vector<int>(n, 0));
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++bit) a[i][j] = a[j][i] = (mask >> bit) & 1;
            }
            const auto key = oracle::canonical_string(a);
            classes.insert(key);
            if (oracle::connected(a)) connected_classes.insert(key);
        }
        EXPECT_EQ(enumerate_graphs(n, false).size(), classes.size()) << n;
        EXPECT_EQ(enumerate_graphs(n, true).size(), connected_classes.size()) << n;
    }
}

TEST(Enumerate, KnownCounts) {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(enumerate_graphs(n, false).size(), all[n - 1]) << n;
        EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n - 1]) << n;
    }
}

TEST(Enumerate, ClassesArePairwiseNonIsomorphic) {
    const auto graphs = enumerate_graphs(6, false);
    std::set<std::vector<int>> seen;
    for (const Graph& g : graphs) EXPECT_TRUE(seen.insert(oracle::canonical_string(oracle::adjacency(g))).second);
}

TEST(Enumerate, EdgeWindowAndShards) {
    EnumerationOptions o;
    o.edge_min = 3;
    o.edge_max = 4;
    std::map<int, int> by_size;
    for (const Graph& g : enumerate_graphs(6, o)) ++by_size[g.size()];
    EXPECT_EQ(by_size.size(), 2u);
    long total = 0;
    for (const Graph& g : enumerate_graphs(6, false)) total += (g.size() == 3 || g.size() == 4) ? 1 : 0;
    EXPECT_EQ(by_size[3] + by_size[4], total);

    std::set<std::string> merged;
    for (int shard = 0; shard < 3; ++shard) {
        EnumerationOptions s;
        s.shard_index = shard;
        s.shard_count = 3;
        for (const Graph& g : enumerate_graphs(7, s)) EXPECT_TRUE(merged.insert(to_graph6(g)).second);
    }
    EXPECT_EQ(merged.size(), 1044u);
}

TEST(Enumerate, HereditaryForests) {
    EnumerationOptions o;
    o.connected_only = true;
    o.hereditary = is_forest;
    o.cap = 10;
    const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_graphs(n, o).size(), trees[n - 1]) << n;
}

TEST(Enumerate, CapIsEnforced) {
    EXPECT_THROW(enumerate_graphs(kHardEnumerationCap + 1, false, kHardEnumerationCap + 1), CapExceeded);
}
