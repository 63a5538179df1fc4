#pragma once

#include <functional>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

inline constexpr int kDefaultEnumerationCap = 9;
inline constexpr int kHardEnumerationCap = 12;

struct EnumerationOptions {
    bool connected_only = false;
    /// Largest n accepted; raising it above kHardEnumerationCap throws.
    int cap = kDefaultEnumerationCap;
    int edge_min = 0;
    /// Negative means no upper limit.
    int edge_max = -1;
    /// Property closed under taking induced subgraphs (forest, bounded
    /// degree, ...). Partial graphs failing it are pruned with their subtree.
    std::function<bool(const Graph&)> hereditary;
    /// Graphs are split into shard_count disjoint streams; this run produces
    /// the shard_index-th one.
    int shard_index = 0;
    int shard_count = 1;
};

/// Calls visit once per isomorphism class of graphs on n vertices matching
/// the options. Each graph is its own canonical labelling and the visiting
/// order is deterministic for fixed options.
void enumerate_graphs(int n, const EnumerationOptions& options,
                      const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap = kDefaultEnumerationCap);
std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options);

/// Runs every shard on its own thread, hands graphs to visit from the
/// worker threads (visit must be thread-safe), and returns nothing; callers
/// that need a deterministic order collect and sort.
void enumerate_graphs_parallel(int n, EnumerationOptions options, int jobs,
                               const std::function<void(const Graph&)>& visit);

/// Induced-subgraph-closed predicates for EnumerationOptions::hereditary.
bool is_forest(const Graph& g);

}  // namespace dissoc
