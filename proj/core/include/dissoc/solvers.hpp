#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

inline constexpr int kSolverOrderCap = 40;
inline constexpr int kPartitionOrderCap = 16;

struct WitnessedValue {
    int value = 0;
    VertexSet witness;
};

/// True when G[s] has maximum degree at most d.
bool is_d_independent(const Graph& g, VertexSet s, int d);

/// i_d(G) with the lexicographically smallest optimal set as witness.
WitnessedValue d_independence_number(const Graph& g, int d, int max_order = kSolverOrderCap);
/// tau(G) = i_1(G).
WitnessedValue dissociation_number(const Graph& g, int max_order = kSolverOrderCap);
/// Value only; skips the witness refinement.
int d_independence_value(const Graph& g, int d, int max_order = kSolverOrderCap);

/// Disjoint sets S_1..S_m with |S_i| = sizes[i] and every cross pair
/// adjacent (not necessarily induced), in the order of `sizes`.
std::optional<std::vector<VertexSet>> find_complete_multipartite(const Graph& g,
                                                                 std::span<const int> sizes);
bool contains_complete_multipartite(const Graph& g, std::span<const int> sizes);

/// Sizes {1, 2, ..., 2} (k twos) of L_{2k+1}.
std::vector<int> odd_cocktail_sizes(int k);
/// Sizes {2, ..., 2} (k twos) of CP_{2k}.
std::vector<int> cocktail_sizes(int k);

/// For v(g) = 2k+1: g is L_{2k+1}-free exactly when delta(g) <= 2k-2.
bool is_L_free_by_degree(const Graph& g, int k);

/// g contains no member of H_{s+1,d}, i.e. i_d(complement(g)) <= s.
bool is_H_family_free(const Graph& g, int s, int d);

struct PartitionValue {
    int value = 0;
    VertexPartition partition;
};

/// Partition into q parts minimising the number of edges inside parts.
/// Parts may be empty unless require_nonempty is set.
PartitionValue q_good_partition(const Graph& g, int q, bool require_nonempty = false,
                                int max_order = kPartitionOrderCap);
/// Edges of g with both ends in the same part.
int internal_edges(const Graph& g, const VertexPartition& p);

struct Matching {
    int value = 0;
    std::vector<Edge> edges;
};

/// Maximum matching by Edmonds' blossom algorithm.
Matching max_matching(const Graph& g);

/// Injective map from pattern vertices to host vertices preserving edges.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern);
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace dissoc
