#include "dissoc/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "dissoc/canonical.hpp"
#include "dissoc/error.hpp"

namespace dissoc {

Graph cocktail_party(int d) {
    if (d < 2 || d % 2 != 0 || d > Graph::kMaxOrder) {
        throw InvalidArgument("cocktail party graph needs even d in [2, 64], got " + std::to_string(d));
    }
    Graph g = complete_graph(d);
    for (int i = 0; i < d; i += 2) g.remove_edge(i, i + 1);
    return g;
}

Graph odd_cocktail_party(int d) {
    if (d < 3 || d % 2 == 0 || d > Graph::kMaxOrder) {
        throw InvalidArgument("odd cocktail party graph needs odd d in [3, 63], got " + std::to_string(d));
    }
    return join(cocktail_party(d - 1), Graph(1));
}

Graph cocktail_block(int d) {
    if (d == 1) return Graph(1);
    return d % 2 == 0 ? cocktail_party(d) : odd_cocktail_party(d);
}

Graph complete_multipartite(std::span<const int> sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw InvalidArgument("part sizes must be positive");
        n += s;
    }
    if (n > Graph::kMaxOrder) throw CapExceeded("complete multipartite graph exceeds 64 vertices");
    if (n == 0) throw InvalidArgument("complete multipartite graph needs at least one part");
    Graph g(n);
    std::vector<int> part(n);
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        for (int j = 0; j < sizes[i]; ++j) part[v++] = static_cast<int>(i);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (part[a] != part[b]) g.add_edge(a, b);
        }
    }
    return g;
}

Graph complete_multipartite(std::initializer_list<int> sizes) {
    return complete_multipartite(std::span<const int>(sizes.begin(), sizes.size()));
}

bool is_valid_part_sizes(std::span<const int> sizes) {
    if (sizes.empty()) return false;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) return false;
        if (i > 0 && sizes[i] < sizes[i - 1]) return false;
        for (std::size_t j = 0; j < i; ++j) {
            const int diff = sizes[i] - sizes[j];
            if (diff > 2) return false;
            if (diff == 2 && (sizes[i] % 2 != 0 || sizes[j] % 2 != 0)) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> part_size_multisets(int n, int k) {
    if (k < 1 || n < k) throw InvalidArgument("part sizes need 1 <= k <= n");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const int lo = std::max(1, n / k - 2);
    const int hi = (n + k - 1) / k + 2;
    std::function<void(int, int)> rec = [&](int remaining, int min_size) {
        if (static_cast<int>(cur.size()) == k) {
            if (remaining == 0 && is_valid_part_sizes(cur)) out.push_back(cur);
            return;
        }
        for (int s = std::max(min_size, lo); s <= hi && s <= remaining; ++s) {
            cur.push_back(s);
            rec(remaining - s, s);
            cur.pop_back();
        }
    };
    rec(n, 1);
    return out;
}

Graph turan_member(std::span<const int> sizes) {
    Graph g = complete_multipartite(sizes);
    int start = 0;
    for (int s : sizes) {
        for (int i = 0; i + 1 < s; i += 2) g.add_edge(start + i, start + i + 1);
        start += s;
    }
    return g;
}

std::vector<Graph> turan_family(int n, int k) {
    auto multisets = part_size_multisets(n, k);
    if (multisets.empty()) {
        throw InvalidArgument("no valid part sizes for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    std::vector<Graph> out;
    for (const auto& sizes : multisets) out.push_back(turan_member(sizes));
    return out;
}

Vertex Construction::at(const std::string& name) const {
    for (const auto& [key, v] : named) {
        if (key == name) return v;
    }
    throw InvalidArgument("construction has no landmark named '" + name + "'");
}

Construction linked_blocks(std::span<const int> sizes, std::span<const BlockLink> links) {
    int n = 0;
    for (int s : sizes) n += s;
    if (n > Graph::kMaxOrder) throw CapExceeded("block graph exceeds 64 vertices");
    if (sizes.empty()) throw InvalidArgument("block graph needs at least one block");

    Construction c;
    c.graph = Graph(n);
    std::vector<int> offset;
    int start = 0;
    for (int s : sizes) {
        if (s < 1) throw InvalidArgument("block sizes must be positive");
        offset.push_back(start);
        Graph block = cocktail_block(s);
        for (auto [a, b] : block.edges()) c.graph.add_edge(start + a, start + b);
        VertexSet set;
        for (int i = 0; i < s; ++i) set.insert(start + i);
        c.blocks.push_back(set);
        if (s % 2 == 1) c.v_delta.push_back(start + s - 1);
        start += s;
    }
    const int nb = static_cast<int>(sizes.size());
    for (const BlockLink& link : links) {
        if (link.block_a < 0 || link.block_a >= nb || link.block_b < 0 || link.block_b >= nb) {
            throw InvalidArgument("link refers to a missing block");
        }
        if (link.local_a < 0 || link.local_a >= sizes[link.block_a] || link.local_b < 0 ||
            link.local_b >= sizes[link.block_b]) {
            throw InvalidArgument("link endpoint outside its block");
        }
        const Vertex x = offset[link.block_a] + link.local_a;
        const Vertex y = offset[link.block_b] + link.local_b;
        if (x == y) throw InvalidArgument("link endpoints coincide");
        c.graph.add_edge(x, y);
        c.links.emplace_back(std::min(x, y), std::max(x, y));
    }
    return c;
}

namespace {

// All labelled trees on k nodes, decoded from Pruefer sequences.
std::vector<std::vector<Edge>> labelled_trees(int k) {
    std::vector<std::vector<Edge>> out;
    if (k == 1) {
        out.emplace_back();
        return out;
    }
    if (k == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(k - 2, 0);
    while (true) {
        std::vector<int> degree(k, 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> edges;
        for (int x : seq) {
            for (int leaf = 0; leaf < k; ++leaf) {
                if (degree[leaf] == 1) {
                    edges.emplace_back(leaf, x);
                    --degree[leaf];
                    --degree[x];
                    break;
                }
            }
        }
        int a = -1;
        for (int v = 0; v < k; ++v) {
            if (degree[v] == 1) {
                if (a < 0) {
                    a = v;
                } else {
                    edges.emplace_back(a, v);
                }
            }
        }
        out.push_back(edges);
        int pos = k - 3;
        while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

constexpr long kMinimizerCombinationLimit = 2'000'000;

}  // namespace

Construction minimizer_representative(std::span<const int> sizes) {
    std::vector<BlockLink> links;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        links.push_back({static_cast<int>(i), 1, static_cast<int>(i + 1), 0});
    }
    return linked_blocks(sizes, links);
}

std::vector<Graph> minimizer_family(int n, int k, MinimizerMode mode) {
    if (k < 1) throw InvalidArgument("minimizer family needs k >= 1");
    if (n < 3 * k) {
        throw InvalidArgument("minimizer family needs n >= 3k, got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    }
    if (mode == MinimizerMode::Automatic) mode = k <= 4 ? MinimizerMode::Full : MinimizerMode::Representative;
    if (mode == MinimizerMode::Full && k > 4) {
        throw CapExceeded("full minimizer enumeration is limited to k <= 4");
    }

    std::vector<std::vector<int>> multisets;
    for (auto& sizes : part_size_multisets(n, k)) {
        if (sizes.front() >= 3) multisets.push_back(sizes);
    }
    if (multisets.empty()) throw InvalidArgument("no member of G_{n,2k} has k components");

    std::vector<Graph> out;
    if (mode == MinimizerMode::Representative) {
        for (const auto& sizes : multisets) out.push_back(minimizer_representative(sizes).graph);
        return out;
    }

    std::set<CanonicalForm> seen;
    const auto trees = labelled_trees(k);
    for (const auto& sizes : multisets) {
        for (const auto& tree : trees) {
            long combos = 1;
            for (auto [i, j] : tree) combos *= static_cast<long>(sizes[i]) * sizes[j];
            if (combos > kMinimizerCombinationLimit) {
                throw CapExceeded("too many connector choices for full minimizer enumeration");
            }
            std::vector<BlockLink> links(tree.size());
            for (long code = 0; code < combos; ++code) {
                long rest = code;
                for (std::size_t e = 0; e < tree.size(); ++e) {
                    auto [i, j] = tree[e];
                    links[e] = {i, static_cast<Vertex>(rest % sizes[i]), j,
                                static_cast<Vertex>((rest / sizes[i]) % sizes[j])};
                    rest /= static_cast<long>(sizes[i]) * sizes[j];
                }
                Graph g = linked_blocks(sizes, links).graph;
                if (seen.insert(canonical_form(g, Graph::kMaxOrder)).second) out.push_back(g);
            }
        }
    }
    return out;
}

Construction hat_minimizer_4(int n) {
    if (n < 8) throw InvalidArgument("hat minimizer needs n >= 8, got " + std::to_string(n));
    int first = 0;
    switch (n % 4) {
        case 0: first = n / 2; break;
        case 1: first = (n - 1) / 2; break;
        case 2: first = n / 2; break;
        default: first = (n + 1) / 2; break;
    }
    const int sizes[] = {first, n - first};
    const BlockLink link{0, 0, 1, 0};
    Construction c = linked_blocks(sizes, std::span<const BlockLink>(&link, 1));
    c.named = {{"u", 0}, {"u'", 1}, {"v", first}, {"v'", first + 1}};
    return c;
}

ConnectorSpec ConnectorSpec::aligned(int l) {
    ConnectorSpec spec;
    spec.pairs.assign(l, {0, 1});
    return spec;
}

bool ConnectorSpec::is_aligned(int m) const {
    const Graph cp = cocktail_party(m);
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](auto p) { return p.first != p.second && !cp.adjacent(p.first, p.second); });
}

namespace {

Construction cp_chain(int l, int m, const ConnectorSpec& spec, bool closed) {
    if (m < 2 || m % 2 != 0) throw InvalidArgument("CP blocks need even m >= 2");
    if (l < 1 || (closed && l < 2)) throw InvalidArgument(closed ? "CP-cycle needs l >= 2" : "CP-path needs l >= 1");
    if (static_cast<long>(l) * m > Graph::kMaxOrder) throw CapExceeded("CP chain exceeds 64 vertices");
    if (static_cast<int>(spec.pairs.size()) != l) throw InvalidArgument("connector spec needs one pair per block");
    for (auto [u, v] : spec.pairs) {
        if (u < 0 || u >= m || v < 0 || v >= m || u == v) throw InvalidArgument("invalid connector pair");
    }
    std::vector<int> sizes(l, m);
    std::vector<BlockLink> links;
    for (int i = 0; i + 1 < l; ++i) links.push_back({i, spec.pairs[i].second, i + 1, spec.pairs[i + 1].first});
    if (closed) links.push_back({l - 1, spec.pairs[l - 1].second, 0, spec.pairs[0].first});
    Construction c = linked_blocks(sizes, links);
    for (int i = 0; i < l; ++i) {
        c.named.emplace_back("u" + std::to_string(i + 1), i * m + spec.pairs[i].first);
        c.named.emplace_back("v" + std::to_string(i + 1), i * m + spec.pairs[i].second);
    }
    return c;
}

}  // namespace

Construction cp_path(int l, int m, const ConnectorSpec& spec) { return cp_chain(l, m, spec, false); }

Construction cp_cycle(int l, int m, const ConnectorSpec& spec) { return cp_chain(l, m, spec, true); }

Construction connector_gadget(GadgetKind kind, int m) {
    if (m < 4 || m % 2 != 0) throw InvalidArgument("gadget needs even m >= 4");
    const std::vector<int> sizes(5, m);
    // Central block locals: u1 = 0, v1 = 1, u2 = 2, v2 = 3.
    std::vector<BlockLink> links;
    switch (kind) {
        case GadgetKind::TwoPairs:
            links = {{1, 0, 0, 0}, {2, 0, 0, 1}, {3, 0, 0, 3}, {4, 0, 0, 2}};
            break;
        case GadgetKind::SplitPair:
            links = {{1, 0, 0, 0}, {4, 0, 0, 0}, {2, 0, 0, 1}, {3, 0, 0, 1}};
            break;
        case GadgetKind::ThreeExternal:
            links = {{1, 0, 0, 0}, {2, 0, 0, 1}, {3, 0, 0, 1}, {4, 0, 0, 1}};
            break;
    }
    Construction c = linked_blocks(sizes, links);
    c.named = {{"u1", 0}, {"v1", 1}};
    if (kind == GadgetKind::TwoPairs) {
        c.named.emplace_back("u2", 2);
        c.named.emplace_back("v2", 3);
    }
    const char* outer[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        c.named.emplace_back(outer[i], (i + 1) * m);
        c.named.emplace_back(std::string(outer[i]) + "'", (i + 1) * m + 1);
    }
    return c;
}

VertexPartition gadget_partition(const Construction& gadget, GadgetKind kind) {
    VertexSet attach{gadget.at("a"), gadget.at("b"), gadget.at("c"), gadget.at("d")};
    VertexSet partners{gadget.at("a'"), gadget.at("b'"), gadget.at("c'"), gadget.at("d'")};
    VertexSet outer;
    for (int i = 1; i < 5; ++i) outer |= gadget.blocks[i];
    VertexSet connectors{gadget.at("u1"), gadget.at("v1")};
    if (kind == GadgetKind::TwoPairs) connectors |= VertexSet{gadget.at("u2"), gadget.at("v2")};
    VertexPartition p = {attach, partners, outer - attach - partners, connectors,
                         gadget.blocks[0] - connectors};
    std::erase_if(p, [](VertexSet s) { return s.empty(); });
    return p;
}

GadgetKind parse_gadget_kind(const std::string& name) {
    if (name == "fig7" || name == "two-pairs") return GadgetKind::TwoPairs;
    if (name == "fig8" || name == "split-pair") return GadgetKind::SplitPair;
    if (name == "fig9" || name == "three-external") return GadgetKind::ThreeExternal;
    throw InvalidArgument("unknown gadget kind '" + name + "' (expected fig7, fig8 or fig9)");
}

std::string gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::TwoPairs: return "fig7";
        case GadgetKind::SplitPair: return "fig8";
        case GadgetKind::ThreeExternal: return "fig9";
    }
    return "fig7";
}

Graph connector_swap_configuration(const Graph& g1, Vertex a, const Graph& g2, Vertex b, int m,
                                   bool swapped) {
    if (m < 4 || m % 2 != 0) throw InvalidArgument("configuration needs even m >= 4");
    if (a < 0 || a >= g1.order() || b < 0 || b >= g2.order()) throw InvalidArgument("attachment outside its graph");
    Graph g = disjoint_union(disjoint_union(g1, cocktail_party(m)), g2);
    const int base = g1.order();
    const Vertex u1 = base, v1 = base + 1, u2 = base + 2, v2 = base + 3;
    g.add_edge(a, u1);
    g.add_edge(base + m + b, v1);
    if (swapped) {
        g.add_edge(u1, v1);
        g.add_edge(u2, v2);
        g.remove_edge(u1, v2);
        g.remove_edge(u2, v1);
    }
    return g;
}

Graph regular_circulant(int s, int d) {
    if (s < 1 || s > Graph::kMaxOrder) throw InvalidArgument("circulant order must be in [1, 64]");
    if (d < 0 || d >= s) throw InvalidArgument("need 0 <= d < s for a d-regular graph on s vertices");
    if ((d * s) % 2 != 0) throw InvalidArgument("d-regular graph on s vertices needs d*s even");
    Graph g(s);
    for (int v = 0; v < s; ++v) {
        for (int off = 1; off <= d / 2; ++off) g.add_edge(v, (v + off) % s);
        if (d % 2 == 1) g.add_edge(v, (v + s / 2) % s);
    }
    return g;
}

Graph spectral_maximizer(int n, int s, int d) {
    if (s > n) throw InvalidArgument("spectral maximizer needs s <= n");
    Graph base = regular_circulant(s, d);
    return n == s ? base : join(base, complete_graph(n - s));
}

}  // namespace dissoc
