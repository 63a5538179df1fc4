#include "dissoc/graph.hpp"

#include <algorithm>
#include <string>

#include "dissoc/error.hpp"

namespace dissoc {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder) {
        throw InvalidArgument("graph order must be in [1, 64], got " + std::to_string(n));
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
    }
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v) {
        for (Vertex u : VertexSet(rows_[v] & ((std::uint64_t{1} << v) - 1))) out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("loops are not allowed (vertex " + std::to_string(u) + ")");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

VertexSet Graph::component_of(Vertex v) const {
    check_vertex(v);
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (Vertex x : VertexSet(frontier)) next |= rows_[x];
        frontier = next & ~seen;
        seen |= next;
    }
    return VertexSet(seen);
}

bool Graph::connected() const { return component_of(0) == vertices(); }

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet rest = vertices();
    while (!rest.empty()) {
        VertexSet c = component_of(rest.front());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

Graph Graph::induced(VertexSet s) const {
    if (s.empty()) throw InvalidArgument("induced subgraph on an empty vertex set");
    std::array<int, kMaxOrder> index{};
    int k = 0;
    for (Vertex v : s) index[v] = k++;
    Graph out(k);
    for (Vertex v : s) {
        std::uint64_t r = 0;
        for (Vertex u : VertexSet(rows_[v] & s.bits())) r |= std::uint64_t{1} << index[u];
        out.rows_[index[v]] = r;
    }
    return out;
}

int Graph::max_degree_in(VertexSet s) const {
    int best = 0;
    for (Vertex v : s) best = std::max(best, degree_in(v, s));
    return best;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
    if (n_ == kMaxOrder) throw CapExceeded("graph already has 64 vertices");
    if (!nbrs.is_subset_of(vertices())) throw InvalidArgument("neighbour outside the graph");
    Graph out = *this;
    out.n_ = n_ + 1;
    out.rows_[n_] = nbrs.bits();
    for (Vertex u : nbrs) out.rows_[u] |= std::uint64_t{1} << n_;
    return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation has wrong length");
    std::uint64_t seen = 0;
    for (Vertex p : perm) {
        check_vertex(p);
        seen |= std::uint64_t{1} << p;
    }
    if (seen != vertices().bits()) throw InvalidArgument("not a permutation");
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t r = 0;
        for (Vertex u : neighbors(v)) r |= std::uint64_t{1} << perm[u];
        out.rows_[perm[v]] = r;
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    const std::uint64_t all = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) {
        for (Vertex u : VertexSet(all & ~g.row(v) & ~(std::uint64_t{1} << v))) {
            if (u > v) out.add_edge(u, v);
        }
    }
    return out;
}

namespace {

Graph union_impl(const Graph& g1, const Graph& g2, bool cross) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    if (n1 + n2 > Graph::kMaxOrder) {
        throw CapExceeded("combined order " + std::to_string(n1 + n2) + " exceeds 64");
    }
    Graph out(n1 + n2);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
    if (cross) {
        for (int u = 0; u < n1; ++u) {
            for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
        }
    }
    return out;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) { return union_impl(g1, g2, true); }

Graph disjoint_union(const Graph& g1, const Graph& g2) { return union_impl(g1, g2, false); }

Graph kelmans(const Graph& g, Vertex u, Vertex v) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgument("kelmans: vertex out of range");
    if (u == v) throw InvalidArgument("kelmans: u and v must differ");
    Graph out = g;
    VertexSet movable = g.neighbors(v) - g.neighbors(u) - VertexSet::single(u);
    for (Vertex x : movable) {
        out.remove_edge(v, x);
        out.add_edge(u, x);
    }
    return out;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

}  // namespace dissoc
