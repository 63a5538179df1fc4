#include "dissoc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "dissoc/enumerate.hpp"
#include "dissoc/error.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"

namespace dissoc {

FamilySpec FamilySpec::complete_multipartite(std::vector<int> sizes) {
    if (sizes.empty()) throw InvalidArgument("complete multipartite family needs at least one part");
    for (int s : sizes) {
        if (s < 1) throw InvalidArgument("part sizes must be positive");
    }
    std::sort(sizes.begin(), sizes.end());
    FamilySpec f;
    f.kind = FamilyKind::CompleteMultipartite;
    f.sizes = std::move(sizes);
    return f;
}

FamilySpec FamilySpec::odd_cocktail(int d) {
    if (d < 3 || d % 2 == 0) throw InvalidArgument("L_d needs odd d >= 3");
    FamilySpec f;
    f.kind = FamilyKind::OddCocktail;
    f.d = d;
    f.sizes = odd_cocktail_sizes((d - 1) / 2);
    return f;
}

FamilySpec FamilySpec::cocktail(int d) {
    if (d < 2 || d % 2 != 0) throw InvalidArgument("CP_d needs even d >= 2");
    FamilySpec f;
    f.kind = FamilyKind::Cocktail;
    f.d = d;
    f.sizes = cocktail_sizes(d / 2);
    return f;
}

FamilySpec FamilySpec::h_family(int s, int d) {
    if (d < 0 || s <= d) throw InvalidArgument("H_{s+1,d} needs s > d >= 0");
    FamilySpec f;
    f.kind = FamilyKind::HFamily;
    f.s = s;
    f.d = d;
    return f;
}

FamilySpec FamilySpec::explicit_set(std::vector<Graph> graphs) {
    if (graphs.empty()) throw InvalidArgument("explicit family needs at least one graph");
    FamilySpec f;
    f.kind = FamilyKind::ExplicitSet;
    f.graphs = std::move(graphs);
    return f;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split(text, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("expected an integer, got '" + item + "'");
        }
    }
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidArgument("family must look like KIND:ARGS, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (kind == "K") return complete_multipartite(parse_ints(args));
    if (kind == "L" || kind == "CP" || kind == "H") {
        auto values = parse_ints(args);
        if (kind == "H") {
            if (values.size() != 2) throw InvalidArgument("H family needs H:s,d");
            return h_family(values[0], values[1]);
        }
        if (values.size() != 1) throw InvalidArgument(kind + " family needs one order");
        return kind == "L" ? odd_cocktail(values[0]) : cocktail(values[0]);
    }
    if (kind == "G6") {
        std::vector<Graph> graphs;
        for (const auto& item : split(args, ',')) graphs.push_back(from_graph6(item));
        return explicit_set(std::move(graphs));
    }
    throw InvalidArgument("unknown family kind '" + kind + "' (expected K, L, CP, H or G6)");
}

bool FamilySpec::is_free(const Graph& g) const {
    switch (kind) {
        case FamilyKind::CompleteMultipartite:
        case FamilyKind::OddCocktail:
        case FamilyKind::Cocktail:
            return !contains_complete_multipartite(g, sizes);
        case FamilyKind::HFamily:
            return is_H_family_free(g, s, d);
        case FamilyKind::ExplicitSet:
            return std::none_of(graphs.begin(), graphs.end(),
                                [&](const Graph& p) { return contains_subgraph(g, p); });
    }
    return true;
}

std::string FamilySpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case FamilyKind::CompleteMultipartite:
            out << "K(";
            for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
            out << ")";
            break;
        case FamilyKind::OddCocktail: out << "L_" << d; break;
        case FamilyKind::Cocktail: out << "CP_" << d; break;
        case FamilyKind::HFamily: out << "H_{" << s + 1 << "," << d << "}"; break;
        case FamilyKind::ExplicitSet:
            out << "{";
            for (std::size_t i = 0; i < graphs.size(); ++i) out << (i ? "," : "") << to_graph6(graphs[i]);
            out << "}";
            break;
    }
    return out.str();
}

std::string mode_name(SearchMode mode) {
    switch (mode) {
        case SearchMode::Ex: return "ex";
        case SearchMode::ExCc: return "ex_cc";
        case SearchMode::Emin: return "emin";
        case SearchMode::RhoMin: return "rhomin";
    }
    return "ex";
}

namespace {

int effective_cap(const SearchOptions& options, int fallback) { return options.cap > 0 ? options.cap : fallback; }

void check_cap(int n, int cap) {
    if (n < 1) throw InvalidArgument("search needs n >= 1");
    if (n > cap) {
        throw CapExceeded("search order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

void sort_by_graph6(std::vector<Graph>& graphs) {
    std::sort(graphs.begin(), graphs.end(),
              [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
}

}  // namespace

ExtremalResult ex_bruteforce(int n, const FamilySpec& family, bool connected_complement,
                             const SearchOptions& options) {
    const int cap = effective_cap(options, kEdgeSearchCap);
    check_cap(n, cap);
    ExtremalResult r;
    r.n = n;
    r.mode = connected_complement ? SearchMode::ExCc : SearchMode::Ex;
    r.family = family;

    // Freeness survives deleting vertices, so partial graphs that already
    // contain a member are pruned together with all their extensions.
    EnumerationOptions eo;
    eo.cap = std::max(cap, n);
    eo.hereditary = [&family](const Graph& g) { return family.is_free(g); };
    long best = -1;
    std::mutex lock;
    enumerate_graphs_parallel(n, eo, options.jobs, [&](const Graph& g) {
        const long e = g.size();
        {
            std::lock_guard<std::mutex> guard(lock);
            ++r.examined;
            if (e < best) return;
        }
        if (connected_complement && !complement(g).connected()) return;
        std::lock_guard<std::mutex> guard(lock);
        if (e > best) {
            best = e;
            r.witnesses.clear();
        }
        if (e == best) r.witnesses.push_back(g);
    });
    if (best < 0) {
        throw InvalidArgument("no " + family.describe() + "-free graph on " + std::to_string(n) +
                              " vertices" + (connected_complement ? " with connected complement" : ""));
    }
    r.value = best;
    sort_by_graph6(r.witnesses);
    return r;
}

int ex_L5_closed_form(int n) {
    if (n < 4) throw InvalidArgument("closed form for ex(n, L_5) needs n >= 4");
    const int base = (n * n + 2 * n) / 4;
    return n % 4 == 2 ? base - 1 : base;
}

ExtremalResult emin_search(int n, int tau, const SearchOptions& options) {
    const int cap = effective_cap(options, kEdgeSearchCap);
    check_cap(n, cap);
    if (tau < 1 || tau > n) throw InvalidArgument("dissociation number must be in [1, n]");
    ExtremalResult r;
    r.n = n;
    r.mode = SearchMode::Emin;
    r.tau = tau;

    EnumerationOptions eo;
    eo.cap = std::max(cap, n);
    eo.connected_only = true;
    // tau never drops when vertices are added.
    eo.hereditary = [tau](const Graph& g) { return d_independence_value(g, 1) <= tau; };
    std::mutex lock;
    const int max_edges = n * (n - 1) / 2;
    for (int e = n - 1; e <= max_edges && r.witnesses.empty(); ++e) {
        eo.edge_min = e;
        eo.edge_max = e;
        enumerate_graphs_parallel(n, eo, options.jobs, [&](const Graph& g) {
            const bool hit = d_independence_value(g, 1) == tau;
            std::lock_guard<std::mutex> guard(lock);
            ++r.examined;
            if (hit) r.witnesses.push_back(g);
        });
        r.value = e;
    }
    if (r.witnesses.empty() && n > 1) {
        throw InvalidArgument("no connected graph on " + std::to_string(n) + " vertices has tau = " +
                              std::to_string(tau));
    }
    if (n == 1) {
        if (tau != 1) throw InvalidArgument("the one-vertex graph has tau = 1");
        r.value = 0;
        r.witnesses = {Graph(1)};
    }
    sort_by_graph6(r.witnesses);
    return r;
}

ExtremalResult rhomin_search(int n, int tau, const SearchOptions& options) {
    const int cap = effective_cap(options, kSpectralSearchCap);
    check_cap(n, cap);
    if (tau < 1 || tau > n) throw InvalidArgument("dissociation number must be in [1, n]");
    ExtremalResult r;
    r.n = n;
    r.mode = SearchMode::RhoMin;
    r.tau = tau;

    EnumerationOptions eo;
    eo.cap = std::max(cap, n);
    eo.connected_only = true;
    eo.hereditary = [tau](const Graph& g) { return d_independence_value(g, 1) <= tau; };
    std::vector<std::pair<double, Graph>> found;
    std::mutex lock;
    enumerate_graphs_parallel(n, eo, options.jobs, [&](const Graph& g) {
        if (d_independence_value(g, 1) != tau) {
            std::lock_guard<std::mutex> guard(lock);
            ++r.examined;
            return;
        }
        const double rho = spectral_radius(g);
        std::lock_guard<std::mutex> guard(lock);
        ++r.examined;
        found.emplace_back(rho, g);
    });
    if (found.empty()) {
        throw InvalidArgument("no connected graph on " + std::to_string(n) + " vertices has tau = " +
                              std::to_string(tau));
    }
    double best = found.front().first;
    for (const auto& [rho, g] : found) best = std::min(best, rho);
    std::vector<std::pair<std::string, std::pair<double, Graph>>> close;
    for (const auto& [rho, g] : found) {
        if (rho <= best + kStrictMargin) close.push_back({to_graph6(g), {rho, g}});
    }
    std::sort(close.begin(), close.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    r.rho = best;
    for (const auto& item : close) {
        r.witness_rho.push_back(item.second.first);
        r.witnesses.push_back(item.second.second);
    }
    r.value = r.witnesses.front().size();
    r.tie = r.witnesses.size() > 1;
    return r;
}

int zarankiewicz_bipartite(int a, int b, int s, int t) {
    if (a < 1 || b < 1 || a > 7 || b > 7) throw CapExceeded("Zarankiewicz search needs 1 <= a, b <= 7");
    if (s < 1 || t < 1) throw InvalidArgument("K_{s,t} needs s, t >= 1");
    if (s > a || t > b) return a * b;

    // Rows are column masks listed by non-increasing weight (row symmetry);
    // the first row uses the lowest columns (column symmetry).
    std::vector<std::vector<std::uint32_t>> by_weight(b + 1);
    for (std::uint32_t mask = 0; mask < (1U << b); ++mask) by_weight[std::popcount(mask)].push_back(mask);

    std::vector<std::uint32_t> rows;
    int best = 0;

    auto creates_forbidden = [&](std::uint32_t row) {
        if (std::popcount(row) < t) return false;
        if (s == 1) return true;
        // Every (s-1)-subset of earlier rows together with the new row.
        const int m = static_cast<int>(rows.size());
        std::vector<int> pick(s - 1);
        auto rec = [&](auto&& self, int depth, int start, std::uint32_t common) -> bool {
            if (std::popcount(common) < t) return false;
            if (depth == s - 1) return true;
            for (int i = start; i <= m - (s - 1 - depth); ++i) {
                if (self(self, depth + 1, i + 1, common & rows[i])) return true;
            }
            return false;
        };
        return rec(rec, 0, 0, row);
    };

    auto search = [&](auto&& self, int edges, int max_weight, std::size_t index_in_weight) -> void {
        const int remaining = a - static_cast<int>(rows.size());
        if (remaining == 0) {
            best = std::max(best, edges);
            return;
        }
        if (edges + remaining * max_weight <= best) return;
        for (int w = max_weight; w >= 0; --w) {
            if (edges + remaining * w <= best) return;
            const auto& masks = by_weight[w];
            const std::size_t start = (w == max_weight) ? index_in_weight : 0;
            for (std::size_t i = start; i < masks.size(); ++i) {
                if (rows.empty() && masks[i] != (1U << w) - 1) continue;
                if (creates_forbidden(masks[i])) continue;
                rows.push_back(masks[i]);
                self(self, edges + w, w, i);
                rows.pop_back();
            }
        }
    };
    search(search, 0, b, 0);
    return best;
}

double zarankiewicz_lemma_bound(int a, int b, int s, int t) {
    return std::pow(static_cast<double>(t - 1), 1.0 / s) * std::pow(static_cast<double>(a + b), 2.0 - 1.0 / s);
}

double kst_bound(int n, int s, int t) {
    if (s < 2 || s > t) throw InvalidArgument("KST bound needs 2 <= s <= t");
    return std::pow(static_cast<double>(t - 1), 1.0 / s) / 2.0 * std::pow(static_cast<double>(n), 2.0 - 1.0 / s);
}

long predicted_join_edges(const std::vector<int>& part_sizes, int r1, int r2, const SearchOptions& options) {
    if (part_sizes.empty()) throw InvalidArgument("need at least one part");
    if (r1 < 1 || r1 > r2) throw InvalidArgument("need 1 <= r1 <= r2");
    long cross = 0;
    int seen = 0;
    for (int s : part_sizes) {
        if (s < 1) throw InvalidArgument("part sizes must be positive");
        cross += static_cast<long>(seen) * s;
        seen += s;
    }
    std::map<std::pair<int, int>, long> cache;
    auto ex_of = [&](int n, int first) {
        auto key = std::make_pair(n, first);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const long v = ex_bruteforce(n, FamilySpec::complete_multipartite({first, r2}), false, options).value;
        cache[key] = v;
        return v;
    };
    long total = cross + ex_of(part_sizes[0], r1);
    for (std::size_t i = 1; i < part_sizes.size(); ++i) total += ex_of(part_sizes[i], 1);
    return total;
}

}  // namespace dissoc
