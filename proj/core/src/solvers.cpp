#include "dissoc/solvers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "dissoc/error.hpp"

namespace dissoc {
namespace {

using Bits = std::uint64_t;

inline Bits bit(Vertex v) { return Bits{1} << v; }

void check_order(const Graph& g, int max_order, const char* what) {
    if (g.order() > max_order) {
        throw CapExceeded(std::string(what) + " is limited to " + std::to_string(max_order) +
                          " vertices, got " + std::to_string(g.order()));
    }
}

// Branch and bound for the largest vertex set inducing maximum degree <= d.
// Candidates are always kept feasible: adding any single one keeps the
// degree condition.
class IndependenceSearch {
public:
    IndependenceSearch(const Graph& g, int d) : g_(g), d_(d) {}

    // Best size reachable from (s, candidates); stops once `stop_at` is hit.
    int solve(Bits s, Bits candidates, int floor, int stop_at) {
        best_ = floor;
        stop_at_ = stop_at;
        best_set_ = 0;
        found_ = false;
        search(s, feasible(s, candidates));
        return best_;
    }

    Bits best_set() const { return best_set_; }
    bool found() const { return found_; }

    Bits feasible(Bits s, Bits candidates) const {
        Bits saturated = 0;
        for (Vertex w : VertexSet(s)) {
            if (std::popcount(g_.row(w) & s) >= d_) saturated |= bit(w);
        }
        Bits out = 0;
        for (Vertex c : VertexSet(candidates & ~s)) {
            if ((g_.row(c) & saturated) != 0) continue;
            if (std::popcount(g_.row(c) & s) > d_) continue;
            out |= bit(c);
        }
        return out;
    }

private:
    // Any clique contributes at most d+1 vertices to a feasible set.
    int clique_cover_bound(Bits candidates) const {
        int bound = 0;
        Bits rest = candidates;
        while (rest != 0) {
            const Vertex v = std::countr_zero(rest);
            Bits clique = bit(v);
            Bits pool = rest & g_.row(v);
            while (pool != 0) {
                const Vertex w = std::countr_zero(pool);
                clique |= bit(w);
                pool &= g_.row(w);
            }
            rest &= ~clique;
            bound += std::min(std::popcount(clique), d_ + 1);
        }
        return bound;
    }

    void search(Bits s, Bits candidates) {
        if (stopped()) return;
        const int size = std::popcount(s);
        if (size > best_) {
            best_ = size;
            best_set_ = s;
            found_ = true;
            if (stopped()) return;
        }
        if (candidates == 0) return;
        if (size + std::popcount(candidates) <= best_) return;
        if (size + clique_cover_bound(candidates) <= best_) return;

        const Bits live = candidates | s;
        Vertex pick = -1;
        int pick_degree = -1;
        for (Vertex c : VertexSet(candidates)) {
            const int deg = std::popcount(g_.row(c) & live);
            if (deg > pick_degree) {
                pick_degree = deg;
                pick = c;
            }
        }
        if (pick_degree == 0 || (pick_degree <= d_ && degree_bounded(live))) {
            // Every live vertex can be taken at once.
            const Bits all = s | candidates;
            if (std::popcount(all) > best_) {
                best_ = std::popcount(all);
                best_set_ = all;
                found_ = true;
            }
            return;
        }
        const Bits with = s | bit(pick);
        search(with, feasible(with, candidates & ~bit(pick)));
        search(s, candidates & ~bit(pick));
    }

    bool degree_bounded(Bits live) const {
        for (Vertex v : VertexSet(live)) {
            if (std::popcount(g_.row(v) & live) > d_) return false;
        }
        return true;
    }

    bool stopped() const { return best_ >= stop_at_; }

    const Graph& g_;
    int d_;
    int best_ = 0;
    int stop_at_ = 0;
    Bits best_set_ = 0;
    bool found_ = false;
};

}  // namespace

bool is_d_independent(const Graph& g, VertexSet s, int d) {
    for (Vertex v : s) {
        if (g.degree_in(v, s) > d) return false;
    }
    return true;
}

int d_independence_value(const Graph& g, int d, int max_order) {
    if (d < 0) throw InvalidArgument("d must be non-negative");
    check_order(g, max_order, "d-independence solver");
    IndependenceSearch search(g, d);
    return search.solve(0, g.vertices().bits(), 0, g.order());
}

WitnessedValue d_independence_number(const Graph& g, int d, int max_order) {
    const int opt = d_independence_value(g, d, max_order);
    IndependenceSearch search(g, d);
    // Decide vertices in increasing order, keeping each one whenever an
    // optimal set through the current choices still exists.
    Bits chosen = 0;
    Bits excluded = 0;
    for (Vertex v = 0; v < g.order() && std::popcount(chosen) < opt; ++v) {
        const Bits trial = chosen | bit(v);
        if (is_d_independent(g, VertexSet(trial), d)) {
            const Bits rest = g.vertices().bits() & ~trial & ~excluded & ~((bit(v) << 1) - 1);
            if (search.solve(trial, rest, opt - 1, opt) >= opt) {
                chosen = trial;
                continue;
            }
        }
        excluded |= bit(v);
    }
    return {opt, VertexSet(chosen)};
}

WitnessedValue dissociation_number(const Graph& g, int max_order) {
    return d_independence_number(g, 1, max_order);
}

std::optional<std::vector<VertexSet>> find_complete_multipartite(const Graph& g,
                                                                 std::span<const int> sizes) {
    const int m = static_cast<int>(sizes.size());
    if (m == 0) return std::vector<VertexSet>{};
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw InvalidArgument("part sizes must be positive");
        total += s;
    }
    if (total > g.order()) return std::nullopt;

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
    std::vector<int> sorted(m);
    for (int i = 0; i < m; ++i) sorted[i] = sizes[order[i]];
    std::vector<int> after(m + 1, 0);
    for (int i = m - 1; i >= 0; --i) after[i] = after[i + 1] + sorted[i];

    std::vector<Bits> parts(m, 0);
    std::vector<Bits> min_degree_ok(m, 0);
    for (int i = 0; i < m; ++i) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) >= total - sorted[i]) min_degree_ok[i] |= bit(v);
        }
    }

    // Fill part i from `pool`; vertices of part i are chosen in increasing
    // order and equal-size parts are ordered by their smallest vertex.
    auto rec = [&](auto&& self, int i, Bits pool, Bits part, Bits common, Vertex next) -> bool {
        if (std::popcount(part) == sorted[i]) {
            parts[i] = part;
            if (i + 1 == m) return true;
            return self(self, i + 1, common, 0, common, 0);
        }
        Bits options = next >= 64 ? 0 : pool & min_degree_ok[i] & ~(bit(next) - 1);
        if (part == 0 && i > 0 && sorted[i] == sorted[i - 1]) {
            const Vertex prev_min = std::countr_zero(parts[i - 1]);
            options &= ~((bit(prev_min) << 1) - 1);
        }
        const int need = sorted[i] - std::popcount(part);
        for (Vertex v : VertexSet(options)) {
            if (std::popcount(options & ~(bit(v) - 1)) < need) break;
            const Bits new_common = common & g.row(v);
            if (std::popcount(new_common) < after[i + 1]) continue;
            if (self(self, i, pool, part | bit(v), new_common, v + 1)) return true;
        }
        return false;
    };
    const Bits all = g.vertices().bits();
    if (!rec(rec, 0, all, 0, all, 0)) return std::nullopt;

    std::vector<VertexSet> out(m);
    for (int i = 0; i < m; ++i) out[order[i]] = VertexSet(parts[i]);
    return out;
}

bool contains_complete_multipartite(const Graph& g, std::span<const int> sizes) {
    return find_complete_multipartite(g, sizes).has_value();
}

std::vector<int> odd_cocktail_sizes(int k) {
    std::vector<int> sizes(k + 1, 2);
    sizes[0] = 1;
    return sizes;
}

std::vector<int> cocktail_sizes(int k) { return std::vector<int>(k, 2); }

bool is_L_free_by_degree(const Graph& g, int k) {
    if (k < 2) throw InvalidArgument("degree criterion needs k >= 2");
    if (g.order() != 2 * k + 1) {
        throw InvalidArgument("degree criterion needs exactly 2k+1 = " + std::to_string(2 * k + 1) +
                              " vertices, got " + std::to_string(g.order()));
    }
    return g.min_degree() <= 2 * k - 2;
}

bool is_H_family_free(const Graph& g, int s, int d) {
    if (d < 0 || s <= d) throw InvalidArgument("H-family needs s > d >= 0");
    const Graph comp = complement(g);
    IndependenceSearch search(comp, d);
    return search.solve(0, comp.vertices().bits(), 0, s + 1) <= s;
}

int internal_edges(const Graph& g, const VertexPartition& p) {
    int count = 0;
    for (VertexSet part : p) {
        for (Vertex v : part) count += g.degree_in(v, part);
    }
    return count / 2;
}

PartitionValue q_good_partition(const Graph& g, int q, bool require_nonempty, int max_order) {
    if (q < 2) throw InvalidArgument("q-good partitions need q >= 2");
    check_order(g, max_order, "q-good partition search");
    const int n = g.order();
    if (require_nonempty && q > n) throw InvalidArgument("more nonempty parts than vertices");

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<Bits> parts(q, 0);
    std::vector<Bits> best_parts;
    int best = g.size() + 1;

    auto rec = [&](auto&& self, int idx, int used, int cost, Bits assigned) -> void {
        if (cost >= best) return;
        if (require_nonempty && q - used > n - idx) return;
        if (idx == n) {
            best = cost;
            best_parts = parts;
            return;
        }
        int lower = cost;
        for (Vertex u : VertexSet(g.vertices().bits() & ~assigned)) {
            int least = n;
            for (int p = 0; p < used; ++p) least = std::min(least, std::popcount(g.row(u) & parts[p]));
            if (used < q) least = 0;
            lower += least;
        }
        if (lower >= best) return;
        const Vertex v = order[idx];
        const int limit = std::min(q, used + 1);
        for (int p = 0; p < limit; ++p) {
            const int added = std::popcount(g.row(v) & parts[p]);
            parts[p] |= bit(v);
            self(self, idx + 1, std::max(used, p + 1), cost + added, assigned | bit(v));
            parts[p] &= ~bit(v);
        }
    };
    rec(rec, 0, 0, 0, 0);

    PartitionValue out;
    out.value = best;
    for (Bits b : best_parts) out.partition.push_back(VertexSet(b));
    return out;
}

Matching max_matching(const Graph& g) {
    const int n = g.order();
    std::vector<int> match(n, -1), parent(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        while (true) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (Vertex to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return static_cast<int>(to);
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_path(v);
        while (u != -1) {
            const int pv = parent[u];
            const int next = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = next;
        }
    }

    Matching out;
    for (int v = 0; v < n; ++v) {
        if (match[v] > v) out.edges.emplace_back(v, match[v]);
    }
    out.value = static_cast<int>(out.edges.size());
    return out;
}

std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern) {
    const int p = pattern.order();
    if (p > host.order() || pattern.size() > host.size()) return std::nullopt;
    // Place pattern vertices so that each one after the first in its
    // component has an already placed neighbour.
    std::vector<Vertex> order;
    Bits placed = 0;
    while (static_cast<int>(order.size()) < p) {
        Vertex pick = -1;
        int score = -1;
        for (Vertex v = 0; v < p; ++v) {
            if (placed & bit(v)) continue;
            const int s = std::popcount(pattern.row(v) & placed) * 64 + pattern.degree(v);
            if (s > score) {
                score = s;
                pick = v;
            }
        }
        order.push_back(pick);
        placed |= bit(pick);
    }

    std::vector<Vertex> image(p, -1);
    auto rec = [&](auto&& self, int idx, Bits used) -> bool {
        if (idx == p) return true;
        const Vertex v = order[idx];
        Bits options = host.vertices().bits() & ~used;
        for (Vertex w : pattern.neighbors(v)) {
            if (image[w] >= 0) options &= host.row(image[w]);
        }
        for (Vertex h : VertexSet(options)) {
            if (host.degree(h) < pattern.degree(v)) continue;
            image[v] = h;
            if (self(self, idx + 1, used | bit(h))) return true;
        }
        image[v] = -1;
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    return image;
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    return find_subgraph(host, pattern).has_value();
}

}  // namespace dissoc
