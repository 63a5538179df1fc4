#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dissoc {

using Vertex = int;

/// Set of vertices of a graph on at most 64 vertices, one bit per vertex.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest element; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Ordered list of disjoint vertex sets meant to cover V.
using VertexPartition = std::vector<VertexSet>;

/// Simple undirected graph on 1..64 vertices stored as adjacency bit rows.
///
/// Rows are kept symmetric and loop-free and bits at positions >= order()
/// are always zero. The type is a plain value: copying is cheap and no
/// operation allocates.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    /// Edgeless graph on n vertices; throws InvalidArgument unless 1 <= n <= 64.
    explicit Graph(int n = 1);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int size() const;

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
    std::uint64_t row(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    /// Number of neighbours of v inside s.
    int degree_in(Vertex v, VertexSet s) const { return std::popcount(rows_[v] & s.bits()); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }
    std::vector<Edge> edges() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool connected() const;
    /// Connected components, each as a vertex set, ordered by smallest vertex.
    std::vector<VertexSet> components() const;
    /// Vertex set of the component containing v.
    VertexSet component_of(Vertex v) const;

    /// Subgraph induced by s, relabelled 0..|s|-1 in increasing vertex order.
    Graph induced(VertexSet s) const;
    /// Maximum degree of the subgraph induced by s.
    int max_degree_in(VertexSet s) const;

    /// Copy with one extra vertex n adjacent to nbrs; throws CapExceeded at 64.
    Graph with_vertex(VertexSet nbrs) const;

    /// Relabel: vertex v of *this becomes vertex perm[v] of the result.
    Graph relabeled(std::span<const Vertex> perm) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(Vertex v) const;

    int n_;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph complement(const Graph& g);
/// Disjoint union plus every edge between the two sides; g2 is relabelled
/// to start at v(g1).
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Kelmans operation H_{v->u}: every neighbour x of v outside N[u] is moved
/// from v to u. Adjacency between u and v is left as it was.
Graph kelmans(const Graph& g, Vertex u, Vertex v);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);

}  // namespace dissoc
