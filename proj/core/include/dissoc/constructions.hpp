#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// CP_d: K_d minus the perfect matching {2i, 2i+1}. Throws for odd d.
Graph cocktail_party(int d);
/// L_d = CP_{d-1} join K_1; the joined vertex is d-1. Throws for even d.
Graph odd_cocktail_party(int d);
/// CP_d for even d, L_d for odd d. In both cases 2i and 2i+1 are the
/// non-adjacent pairs and, for odd d, vertex d-1 has degree d-1.
Graph cocktail_block(int d);
/// Parts occupy consecutive label ranges in the given order.
Graph complete_multipartite(std::span<const int> sizes);
Graph complete_multipartite(std::initializer_list<int> sizes);

/// Sorted part sizes; |n_i - n_j| <= 2 with equality only for two even sizes.
bool is_valid_part_sizes(std::span<const int> sizes);
/// Every valid sorted multiset of k positive sizes summing to n.
std::vector<std::vector<int>> part_size_multisets(int n, int k);

/// Complete multipartite graph on `sizes` plus a maximum matching in each
/// part; an odd part leaves its last vertex unmatched.
Graph turan_member(std::span<const int> sizes);
/// G_{n,2k}: one member per valid multiset, in multiset order.
std::vector<Graph> turan_family(int n, int k);

/// Vertex landmarks of a graph assembled from cocktail-party blocks.
struct Construction {
    Graph graph;
    std::vector<VertexSet> blocks;
    /// Degree n_i - 1 vertex of each odd block, in block order.
    std::vector<Vertex> v_delta;
    /// Edges joining different blocks.
    std::vector<Edge> links;
    /// Named vertices (connectors, non-neighbours, gadget attachments).
    std::vector<std::pair<std::string, Vertex>> named;

    Vertex at(const std::string& name) const;
};

/// Edge from vertex local_a of block block_a to local_b of block block_b.
struct BlockLink {
    int block_a;
    Vertex local_a;
    int block_b;
    Vertex local_b;
};

/// Disjoint cocktail blocks of the given sizes (consecutive labels) plus links.
Construction linked_blocks(std::span<const int> sizes, std::span<const BlockLink> links);

enum class MinimizerMode { Automatic, Full, Representative };

/// T_{n,2k}: complements of G_{n,2k} members with k components reconnected
/// by k-1 edges in every possible way, one graph per isomorphism class.
/// Full mode is limited to k <= 4; Representative returns only the aligned
/// path member for each multiset; Automatic picks Full when k <= 4.
std::vector<Graph> minimizer_family(int n, int k, MinimizerMode mode = MinimizerMode::Automatic);
/// Aligned path-shaped member of T_{n,2k} for the given multiset, built
/// with good connecting edges.
Construction minimizer_representative(std::span<const int> sizes);

/// \hat T_{n,4}, n >= 8. Named vertices: "u", "u'" in the first block, "v",
/// "v'" in the second, where uv is the good connecting edge and u', v' are
/// the non-neighbours of u, v inside their blocks.
Construction hat_minimizer_4(int n);

/// Per-block ordered connector pair (u_i, v_i), as local labels in CP_m.
struct ConnectorSpec {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    /// (0, 1) in every block; 0 and 1 are non-adjacent in CP_m.
    static ConnectorSpec aligned(int l);
    bool is_aligned(int m) const;
};

/// l blocks CP_m with links v_i u_{i+1}; names "u<i>", "v<i>" for i = 1..l.
Construction cp_path(int l, int m, const ConnectorSpec& spec);
/// cp_path plus the link v_l u_1; needs l >= 2.
Construction cp_cycle(int l, int m, const ConnectorSpec& spec);

enum class GadgetKind { TwoPairs, SplitPair, ThreeExternal };

/// Five CP_m blocks: C_1 central, then C_2..C_5 carrying a, b, c, d with
/// non-neighbours a', b', c', d'. In C_1, u1 = 0, v1 = 1, u2 = 2, v2 = 3.
///   TwoPairs:      a-u1, b-v1, c-v2, d-u2
///   SplitPair:     a-u1, d-u1, b-v1, c-v1
///   ThreeExternal: a-u1, b-v1, c-v1, d-v1
Construction connector_gadget(GadgetKind kind, int m);
/// The five-part partition {a,b,c,d}, {a',b',c',d'}, rest of C_2..C_5,
/// the used connectors of C_1, rest of C_1 (empty parts are dropped).
VertexPartition gadget_partition(const Construction& gadget, GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);
std::string gadget_kind_name(GadgetKind kind);

/// Two-block configuration of the non-adjacent-connector lemma: CP_m with
/// outer graphs g1, g2, g1's vertex a linked to u1 and g2's vertex b linked
/// to v1. With swapped = false, u1 = 0, v1 = 1 are non-adjacent; swapped
/// applies G + u1v1 + u2v2 - u1v2 - u2v1 with u2 = 2, v2 = 3.
Graph connector_swap_configuration(const Graph& g1, Vertex a, const Graph& g2, Vertex b, int m,
                                   bool swapped);

/// A d-regular circulant on s vertices joined with K_{n-s}.
Graph spectral_maximizer(int n, int s, int d);
Graph regular_circulant(int s, int d);

}  // namespace dissoc
