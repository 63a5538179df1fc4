#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// Default order limit for canonical labelling; callers with structured
/// inputs (block graphs) may raise it explicitly.
inline constexpr int kCanonicalOrderCap = 12;

/// Canonical upper-triangle bit string of a graph.
///
/// The string lists the pairs (i, j), i < j, column by column (j = 1..n-1,
/// i = 0..j-1), which is the graph6 bit order. The canonical labelling is
/// the one whose string is lexicographically largest, so two graphs have
/// equal forms exactly when they are isomorphic. Bits are packed
/// most-significant first into `bytes`.
struct CanonicalForm {
    int n = 0;
    std::string bytes;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Vertex v of g goes to position labeling[v] in the canonical graph.
std::vector<Vertex> canonical_labeling(const Graph& g, int max_order = kCanonicalOrderCap);
CanonicalForm canonical_form(const Graph& g, int max_order = kCanonicalOrderCap);
/// g relabelled by canonical_labeling(g).
Graph canonical_graph(const Graph& g, int max_order = kCanonicalOrderCap);
/// True when g's own labelling already gives the lexicographically largest string.
bool is_canonical(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b, int max_order = kCanonicalOrderCap);

}  // namespace dissoc
