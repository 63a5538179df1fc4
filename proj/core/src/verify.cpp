#include "dissoc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "dissoc/bounds.hpp"
#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/enumerate.hpp"
#include "dissoc/error.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"

namespace dissoc {

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Warn: return "WARN";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "SKIPPED";
}

Manifest Manifest::parse(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("manifest_version") || !doc["manifest_version"].is_string() ||
        !doc.contains("theorems") || !doc["theorems"].is_object()) {
        throw MalformedInput("manifest needs a string manifest_version and a theorems object");
    }
    Manifest m;
    m.version_ = doc["manifest_version"].get<std::string>();
    m.theorems_ = doc["theorems"];
    return m;
}

Manifest Manifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open manifest " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string Manifest::default_path() {
    return DISSOC_DEFAULT_MANIFEST;
}

Manifest Manifest::load_default() { return load(default_path()); }

bool Manifest::has(const std::string& id) const { return theorems_.contains(id); }

std::string Manifest::title(const std::string& id) const {
    if (!has(id)) return {};
    return theorems_[id].value("title", std::string());
}

std::optional<Json> Manifest::expected(const std::string& id, const std::string& check) const {
    if (!has(id) || !theorems_[id].contains("expected")) return std::nullopt;
    const Json& root = theorems_[id]["expected"];
    try {
        const Json::json_pointer ptr(check);
        if (!root.contains(ptr)) return std::nullopt;
        return std::optional<Json>(std::in_place, root.at(ptr));
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

bool json_matches(const Json& expected, const Json& observed) {
    if (expected.is_number() && observed.is_number()) {
        if (expected.is_number_float() || observed.is_number_float()) {
            const double e = expected.get<double>();
            const double o = observed.get<double>();
            return std::abs(e - o) <= kCompareTolerance * (1.0 + std::abs(e));
        }
        return expected.get<long long>() == observed.get<long long>();
    }
    if (expected.is_array() && observed.is_array()) {
        if (expected.size() != observed.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!json_matches(expected[i], observed[i])) return false;
        }
        return true;
    }
    if (expected.is_object() && observed.is_object()) {
        if (expected.size() != observed.size()) return false;
        for (const auto& [key, value] : expected.items()) {
            if (!observed.contains(key) || !json_matches(value, observed[key])) return false;
        }
        return true;
    }
    return expected == observed;
}

Json Report::to_json() const {
    Json out;
    out["id"] = id;
    out["title"] = title;
    out["verdict"] = verdict_name(verdict);
    out["params"] = params;
    Json expected = Json::object();
    Json observed = Json::object();
    Json failed = Json::array();
    for (const CheckRecord& c : checks) {
        expected[c.check] = c.expected;
        observed[c.check] = c.observed;
        if (!c.ok) failed.push_back(c.check);
    }
    out["expected"] = expected;
    out["observed"] = observed;
    out["failed"] = failed;
    out["details"] = details;
    out["notes"] = notes;
    out["elapsed_ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
    return out;
}

namespace {

class Checker {
public:
    Checker(const Manifest& manifest, Report& report) : manifest_(manifest), report_(report) {}

    void expect(const std::string& check, Json observed, bool soft = false) {
        CheckRecord rec;
        rec.check = check;
        rec.observed = std::move(observed);
        rec.soft = soft;
        if (auto e = manifest_.expected(report_.id, check)) {
            rec.expected = *e;
            rec.ok = json_matches(rec.expected, rec.observed);
        } else {
            report_.notes.push_back("manifest has no expected value for " + check);
        }
        report_.checks.push_back(std::move(rec));
    }

    void detail(const std::string& pointer, Json value) {
        Json* node = &report_.details;
        std::size_t start = 1;
        while (true) {
            const std::size_t end = pointer.find('/', start);
            node = &(*node)[pointer.substr(start, end == std::string::npos ? std::string::npos : end - start)];
            if (end == std::string::npos) break;
            start = end + 1;
        }
        *node = std::move(value);
    }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

private:
    const Manifest& manifest_;
    Report& report_;
};

using Check = std::function<void(const VerifyParams&, Checker&)>;

bool order_selected(const VerifyParams& p, int n) { return n <= p.max_n && (!p.n || *p.n == n); }
bool construction_selected(const VerifyParams& p, int n) { return !p.n || *p.n == n; }
bool k_selected(const VerifyParams& p, int k) { return !p.k || *p.k == k; }
bool m_selected(const VerifyParams& p, int m) { return !p.m || *p.m == m; }

std::string key(std::initializer_list<int> parts) {
    std::string out;
    for (int v : parts) {
        if (!out.empty()) out += "_";
        out += std::to_string(v);
    }
    return out;
}

SearchOptions search_options(const VerifyParams& p) {
    SearchOptions o;
    o.jobs = p.jobs;
    o.cap = std::max(p.max_n, kEdgeSearchCap);
    return o;
}

std::vector<Graph> all_graphs(int n, bool connected) {
    EnumerationOptions o;
    o.connected_only = connected;
    o.cap = kHardEnumerationCap;
    return enumerate_graphs(n, o);
}

/// Number of graphs for which bad(g) holds, spread over `jobs` threads.
long count_bad(const std::vector<Graph>& graphs, int jobs, const std::function<bool(const Graph&)>& bad) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    if (workers <= 1) {
        long count = 0;
        for (const Graph& g : graphs) count += bad(g) ? 1 : 0;
        return count;
    }
    std::atomic<long> count{0};
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            long local = 0;
            for (std::size_t i = w; i < graphs.size(); i += workers) local += bad(graphs[i]) ? 1 : 0;
            count += local;
        });
    }
    for (auto& t : threads) t.join();
    return count.load();
}

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
    std::set<CanonicalForm> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g, Graph::kMaxOrder));
    return out;
}

int tau(const Graph& g) { return dissociation_number(g).value; }
int ceil_two_thirds(int n) { return (2 * n + 2) / 3; }

Json matrix_json(const std::vector<std::vector<double>>& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (double v : row) {
            if (std::abs(v - std::round(v)) <= kCompareTolerance) {
                r.push_back(static_cast<long long>(std::llround(v)));
            } else {
                r.push_back(v);
            }
        }
        out.push_back(r);
    }
    return out;
}

Json poly_json(const CharPoly& p) { return Json(p.coefficients); }

// Per-order table of the connected graphs with their tau, size and rho.
struct GraphRow {
    Graph g;
    int tau = 0;
    int edges = 0;
    double rho = 0.0;
};

std::vector<GraphRow> connected_rows(int n) {
    std::vector<GraphRow> rows;
    for (const Graph& g : all_graphs(n, true)) rows.push_back({g, tau(g), g.size(), spectral_radius(g)});
    return rows;
}

// -- section 2 ---------------------------------------------------------------

void check_complement_lemma(const VerifyParams& p, Checker& c, bool odd) {
    long violations = 0;
    long applicable = 0;
    long examined = 0;
    const std::vector<int> ds = odd ? std::vector<int>{5, 7} : std::vector<int>{4, 6};
    for (int n = 1; n <= std::min(p.max_n, 7); ++n) {
        if (!order_selected(p, n)) continue;
        const auto graphs = all_graphs(n, false);
        for (int d : ds) {
            std::atomic<long> hits{0};
            violations += count_bad(graphs, p.jobs, [&](const Graph& g) {
                const BoundResult b = complement_free_upper(g, d);
                if (!b.applicable) return false;
                ++hits;
                return tau(g) > d - 1;
            });
            applicable += hits.load();
            examined += static_cast<long>(graphs.size());
        }
    }
    if (examined == 0) return;
    c.expect("/violations", violations);
    c.detail("/examined", examined);
    c.detail("/applicable", applicable);
}

void check_L2_1(const VerifyParams& p, Checker& c) { check_complement_lemma(p, c, false); }
void check_L2_2(const VerifyParams& p, Checker& c) { check_complement_lemma(p, c, true); }

void check_T2_3(const VerifyParams& p, Checker& c) {
    for (int d : {4, 5}) {
        const FamilySpec family = d % 2 == 1 ? FamilySpec::odd_cocktail(d) : FamilySpec::cocktail(d);
        std::set<int> values;
        long witnesses = 0;
        // Below n = d - 1 the complement has fewer than d - 1 vertices.
        for (int n = d - 1; n <= std::min(p.max_n, 7); ++n) {
            if (!order_selected(p, n)) continue;
            const ExtremalResult r = ex_bruteforce(n, family, false, search_options(p));
            for (const Graph& h : r.witnesses) values.insert(tau(complement(h)));
            witnesses += static_cast<long>(r.witnesses.size());
        }
        if (witnesses == 0) continue;
        const std::string name = (d % 2 == 1 ? "L_" : "CP_") + std::to_string(d);
        c.expect("/tau_complement/" + name, Json(std::vector<int>(values.begin(), values.end())));
        c.detail("/witnesses/" + name, witnesses);
    }
}

// -- section 3 ---------------------------------------------------------------

void check_L3_2(const VerifyParams& p, Checker& c) {
    for (int k : {2, 3}) {
        const int n = 2 * k + 1;
        if (!order_selected(p, n) || !k_selected(p, k)) continue;
        const auto graphs = all_graphs(n, false);
        const auto sizes = odd_cocktail_sizes(k);
        const long disagreements = count_bad(graphs, p.jobs, [&](const Graph& g) {
            return is_L_free_by_degree(g, k) == contains_complete_multipartite(g, sizes);
        });
        c.expect("/classes/" + std::to_string(k), static_cast<long>(graphs.size()));
        c.expect("/disagreements/" + std::to_string(k), disagreements);
    }
}

void check_T3_3(const VerifyParams& p, Checker& c) {
    bool all_members_extremal = true;
    bool any = false;
    for (int k : {2, 3}) {
        if (!k_selected(p, k)) continue;
        const std::string name = "L_" + std::to_string(2 * k + 1);
        for (int n = 2 * k + 1; n <= p.max_n; ++n) {
            if (!order_selected(p, n)) continue;
            any = true;
            const ExtremalResult r = ex_bruteforce(n, FamilySpec::odd_cocktail(2 * k + 1), false, search_options(p));
            c.expect("/ex/" + name + "/" + std::to_string(n), r.value);
            const auto witnesses = forms_of(r.witnesses);
            for (const Graph& member : turan_family(n, k)) {
                if (member.size() != r.value || !witnesses.count(canonical_form(member, Graph::kMaxOrder))) {
                    all_members_extremal = false;
                }
            }
            c.detail("/witnesses/" + name + "/" + std::to_string(n), static_cast<long>(r.witnesses.size()));
        }
    }
    if (any) c.expect("/members_extremal", all_members_extremal);
}

// -- section 4 ---------------------------------------------------------------

void check_P4_1(const VerifyParams& p, Checker& c) {
    bool unique_cocktail = true;
    bool any = false;
    for (int n = 3; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        any = true;
        const ExtremalResult r = emin_search(n, 2, search_options(p));
        c.expect("/emin/" + std::to_string(n), r.value);
        const Graph expected = n % 2 == 0 ? cocktail_party(n) : odd_cocktail_party(n);
        if (r.witnesses.size() != 1 || !isomorphic(r.witnesses.front(), expected)) unique_cocktail = false;
    }
    if (any) c.expect("/unique_cocktail_witness", unique_cocktail);
}

void check_L4_2c(const VerifyParams& p, Checker& c) {
    long violations = 0;
    bool any = false;
    for (int n = 2; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        any = true;
        std::map<int, int> emin;
        for (const Graph& g : all_graphs(n, true)) {
            const int t = tau(g);
            auto it = emin.find(t);
            if (it == emin.end() || g.size() < it->second) emin[t] = g.size();
        }
        Json table = Json::object();
        int previous = -1;
        for (auto [t, e] : emin) {
            table[std::to_string(t)] = e;
            if (previous >= 0 && e > previous) ++violations;
            previous = e;
        }
        c.detail("/emin/" + std::to_string(n), table);
    }
    if (any) c.expect("/violations", violations);
}

void check_T4_3(const VerifyParams& p, Checker& c) {
    long non_tree_emin = 0;
    long non_tree_rhomin = 0;
    long instances = 0;
    for (int n = 2; n <= std::min(p.max_n, kSpectralSearchCap); ++n) {
        if (!order_selected(p, n)) continue;
        const auto rows = connected_rows(n);
        std::map<int, std::vector<const GraphRow*>> by_tau;
        for (const GraphRow& row : rows) by_tau[row.tau].push_back(&row);
        for (const auto& [t, members] : by_tau) {
            if (t < ceil_two_thirds(n)) continue;
            ++instances;
            int emin = members.front()->edges;
            double rho = members.front()->rho;
            for (const GraphRow* row : members) {
                emin = std::min(emin, row->edges);
                rho = std::min(rho, row->rho);
            }
            if (emin != n - 1) ++non_tree_emin;
            for (const GraphRow* row : members) {
                if (row->rho <= rho + kStrictMargin && row->edges != n - 1) ++non_tree_rhomin;
            }
        }
    }
    if (instances == 0) return;
    c.expect("/non_tree_emin", non_tree_emin);
    c.expect("/non_tree_rhomin", non_tree_rhomin);
    c.detail("/instances", instances);
}

void check_P4_4(const VerifyParams& p, Checker& c) {
    const int limit = std::max(10, std::min(p.max_n, kHardEnumerationCap));
    long violations = 0;
    bool any = false;
    for (int n = 1; n <= limit; ++n) {
        if (p.n && *p.n != n) continue;
        any = true;
        EnumerationOptions o;
        o.connected_only = true;
        o.cap = kHardEnumerationCap;
        o.hereditary = is_forest;
        const auto trees = enumerate_graphs(n, o);
        violations += count_bad(trees, p.jobs, [&](const Graph& t) { return tau(t) < ceil_two_thirds(n); });
        c.expect("/trees/" + std::to_string(n), static_cast<long>(trees.size()));
    }
    if (any) c.expect("/violations", violations);
}

void check_L4_6(const VerifyParams& p, Checker& c) {
    for (int k = 1; k <= 4; ++k) {
        if (!k_selected(p, k) || !construction_selected(p, 3 * k)) continue;
        const auto family = minimizer_family(3 * k, k, MinimizerMode::Full);
        std::set<int> values;
        bool trees = true;
        for (const Graph& g : family) {
            values.insert(tau(g));
            if (!g.connected() || g.size() != 3 * k - 1) trees = false;
        }
        c.expect("/tau/" + std::to_string(k), Json(std::vector<int>(values.begin(), values.end())));
        c.expect("/all_trees/" + std::to_string(k), trees);
        c.detail("/classes/" + std::to_string(k), static_cast<long>(family.size()));
        if (k == 2) c.expect("/classes/2", static_cast<long>(family.size()));
    }
}

long binomial2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void check_T4_5(const VerifyParams& p, Checker& c) {
    bool formula = true;
    bool members_minimal = true;
    bool any_search = false;
    for (int k : {2, 3}) {
        if (!k_selected(p, k)) continue;
        for (int n = 3 * k; n <= p.max_n; ++n) {
            if (!order_selected(p, n)) continue;
            any_search = true;
            const ExtremalResult r = emin_search(n, 2 * k, search_options(p));
            c.expect("/emin/" + key({n, k}), r.value);
            long predicted = 0;
            if (k == 2) {
                predicted = binomial2(n) - ex_L5_closed_form(n) + 1;
            } else {
                predicted = binomial2(n) - turan_family(n, k).front().size() + k - 1;
            }
            if (predicted != r.value) formula = false;
            const auto minimizers = forms_of(r.witnesses);
            for (const Graph& g : minimizer_family(n, k)) {
                if (!minimizers.count(canonical_form(g, Graph::kMaxOrder))) members_minimal = false;
            }
        }
    }
    if (any_search) {
        c.expect("/formula_matches_search", formula);
        c.expect("/members_are_minimizers", members_minimal);
    }
    // Larger members are checked against the formula directly.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{9, 3}, {12, 3}, {12, 4}, {10, 2}, {12, 2}}) {
        if (!construction_selected(p, n) || !k_selected(p, k)) continue;
        const auto family = minimizer_family(n, k);
        std::set<int> sizes;
        std::set<int> taus;
        for (const Graph& g : family) {
            sizes.insert(g.size());
            taus.insert(tau(g));
        }
        c.expect("/member_size/" + key({n, k}), Json(std::vector<int>(sizes.begin(), sizes.end())));
        c.expect("/member_tau/" + key({n, k}), Json(std::vector<int>(taus.begin(), taus.end())));
    }
}

// -- section 5 ---------------------------------------------------------------

/// Pairs of block-graph configurations (connector at v_delta, connector at
/// a good vertex) built from T_{n,2k} path members.
struct ApexPair {
    Graph with_apex;
    Graph with_good;
    Vertex apex;
    Vertex good;
};

std::vector<ApexPair> apex_pairs(int n, int k) {
    std::vector<ApexPair> out;
    for (const auto& sizes : part_size_multisets(n, k)) {
        if (*std::min_element(sizes.begin(), sizes.end()) < k) continue;
        std::vector<BlockLink> base;
        for (int i = 0; i + 1 < k; ++i) base.push_back({i, 1, i + 1, 0});
        for (std::size_t li = 0; li < base.size(); ++li) {
            for (int side = 0; side < 2; ++side) {
                const int block = side == 0 ? base[li].block_a : base[li].block_b;
                const int size = sizes[block];
                if (size % 2 == 0) continue;
                std::vector<BlockLink> apex_links = base;
                (side == 0 ? apex_links[li].local_a : apex_links[li].local_b) = size - 1;
                std::set<Vertex> used;
                for (const BlockLink& l : apex_links) {
                    if (l.block_a == block) used.insert(l.local_a);
                    if (l.block_b == block) used.insert(l.local_b);
                }
                Vertex good = 0;
                while (used.count(good)) ++good;
                if (good >= size - 1) continue;
                std::vector<BlockLink> good_links = apex_links;
                (side == 0 ? good_links[li].local_a : good_links[li].local_b) = good;
                const Construction a = linked_blocks(sizes, apex_links);
                const Construction b = linked_blocks(sizes, good_links);
                int offset = 0;
                for (int i = 0; i < block; ++i) offset += sizes[i];
                out.push_back({a.graph, b.graph, offset + size - 1, offset + good});
            }
        }
    }
    return out;
}

void check_L5_1(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long kelmans_mismatches = 0;
    long instances = 0;
    for (auto [k, lo, hi] : std::vector<std::tuple<int, int, int>>{{2, 9, 16}, {3, 9, 15}}) {
        if (!k_selected(p, k)) continue;
        for (int n = lo; n <= hi; ++n) {
            if (!construction_selected(p, n)) continue;
            for (const ApexPair& pair : apex_pairs(n, k)) {
                ++instances;
                if (spectral_radius(pair.with_apex) <= spectral_radius(pair.with_good) + kStrictMargin) ++violations;
                if (!isomorphic(kelmans(pair.with_good, pair.apex, pair.good), pair.with_apex, Graph::kMaxOrder)) {
                    ++kelmans_mismatches;
                }
            }
        }
    }
    if (instances == 0) return;
    c.expect("/violations", violations);
    c.expect("/kelmans_mismatches", kelmans_mismatches);
    c.detail("/instances", instances);
}

void check_P5_3(const VerifyParams& p, Checker& c) {
    bool turan = true;
    bool any_ex = false;
    for (int n = 5; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        any_ex = true;
        const ExtremalResult r = ex_bruteforce(n, FamilySpec::odd_cocktail(5), false, search_options(p));
        c.expect("/ex_witnesses/" + std::to_string(n), static_cast<long>(r.witnesses.size()));
        if (forms_of(r.witnesses) != forms_of(turan_family(n, 2))) turan = false;
    }
    if (any_ex) c.expect("/ex_witnesses_are_turan_family", turan);
    for (int n = 8; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        const ExtremalResult r = emin_search(n, 4, search_options(p));
        c.expect("/emin_minimizers_equal_T/" + std::to_string(n),
                 forms_of(r.witnesses) == forms_of(minimizer_family(n, 2, MinimizerMode::Full)));
    }
}

VertexPartition hat_partition(const Construction& h, bool with_apex) {
    VertexSet outer{h.at("u'"), h.at("v'")};
    VertexSet inner{h.at("u"), h.at("v")};
    VertexPartition p{outer, inner};
    VertexSet rest = h.graph.vertices() - outer - inner;
    if (with_apex) {
        VertexSet apex;
        for (Vertex v : h.v_delta) apex.insert(v);
        p.push_back(apex);
        rest -= apex;
    }
    p.push_back(rest);
    return p;
}

void check_quotient_instance(Checker& c, const std::string& tag, int n, const Graph& g, const VertexPartition& part) {
    const std::string suffix = tag + std::to_string(n);
    const bool equitable = is_equitable(g, part);
    c.expect("/equitable/" + suffix, equitable);
    if (!equitable) return;
    const QuotientMatrix q = quotient(g, part);
    c.expect("/quotient/" + suffix, matrix_json(q.entries));
    const CharPoly poly = char_poly(q);
    c.expect("/polynomial/" + suffix, poly_json(poly));
    c.expect("/rho_agreement/" + suffix, std::abs(largest_root(poly) - spectral_radius(g)) <= kCompareTolerance);
}

/// Hat graph is the only rho-minimiser of minimizer_family(n, 2).
bool hat_minimizes_family(int n) {
    const Graph hat = hat_minimizer_4(n).graph;
    const double rho_hat = spectral_radius(hat);
    bool ok = true;
    for (const Graph& g : minimizer_family(n, 2, MinimizerMode::Full)) {
        if (isomorphic(g, hat, Graph::kMaxOrder)) continue;
        if (spectral_radius(g) <= rho_hat + kStrictMargin) ok = false;
    }
    return ok;
}

void check_T5_4(const VerifyParams& p, Checker& c) {
    for (int n : {8, 12, 16}) {
        if (!construction_selected(p, n)) continue;
        const Construction h = hat_minimizer_4(n);
        check_quotient_instance(c, "", n, h.graph, hat_partition(h, false));
        c.expect("/hat_minimizes_T/" + std::to_string(n), hat_minimizes_family(n));
    }
    if (order_selected(p, 8)) {
        const ExtremalResult r = rhomin_search(8, 4, search_options(p));
        const Graph hat = hat_minimizer_4(8).graph;
        c.expect("/rhomin_unique_hat/8", r.witnesses.size() == 1 && !r.tie && isomorphic(r.witnesses.front(), hat));
        const CharPoly poly = char_poly(quotient(hat, hat_partition(hat_minimizer_4(8), false)));
        c.expect("/root_matches_rhomin/8", std::abs(largest_root(poly) - r.rho) <= kCompareTolerance);
        c.detail("/rhomin/8", r.rho);
    }
}

std::vector<double> poly_multiply(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// (1/2)(2x^2 + (4-n)x - 4) q(x) + r(x), leading coefficient first.
std::vector<double> six_part_decomposition(double n) {
    const std::vector<double> lead{1.0, (4.0 - n) / 2.0, -2.0};
    const std::vector<double> q{1.0, 6.0 - n / 2.0, 12.0 - 2.0 * n, 8.0 - 2.0 * n, 1.0 + n - n * n / 4.0};
    std::vector<double> out = poly_multiply(lead, q);
    out[out.size() - 2] += -(n * n * n / 8.0 - (n * n + n) / 2.0);
    out[out.size() - 1] += -3.0 * n * n / 4.0 + 4.0 * n - 1.0;
    return out;
}

void check_T5_5(const VerifyParams& p, Checker& c) {
    for (int n : {10, 14}) {
        if (!construction_selected(p, n)) continue;
        const Construction h = hat_minimizer_4(n);
        check_quotient_instance(c, "", n, h.graph, hat_partition(h, true));

        const int half = n / 2;
        const std::vector<int> odd{half, half};
        const BlockLink apex_good{0, half - 1, 1, 0};
        const BlockLink apex_apex{0, half - 1, 1, half - 1};
        const double rho_hat = spectral_radius(h.graph);
        const double rho_apex = spectral_radius(linked_blocks(odd, std::vector<BlockLink>{apex_good}).graph);
        const double rho_both = spectral_radius(linked_blocks(odd, std::vector<BlockLink>{apex_apex}).graph);
        const std::vector<int> even{half - 1, half + 1};
        const Construction cp = linked_blocks(even, std::vector<BlockLink>{{0, 0, 1, 0}});
        const double rho_cp = spectral_radius(cp.graph);
        c.expect("/ordering/" + std::to_string(n), rho_hat + kStrictMargin < rho_apex &&
                                                        rho_apex + kStrictMargin < rho_both &&
                                                        rho_both + kStrictMargin < rho_cp);
        c.expect("/apex_closed_form/" + std::to_string(n),
                 std::abs(rho_both - apex_linked_rho_closed_form(n)) <= kCompareTolerance);
        c.detail("/rho/" + std::to_string(n), Json{{"hat", rho_hat}, {"apex", rho_apex}, {"apex_apex", rho_both}, {"cp_cp", rho_cp}});

        // Six parts {u1},{w1},{u2},{w2}, rest of C1, rest of C2; bridge u2 w2.
        const int first = half - 1;
        const Vertex u2 = 0;
        const Vertex u1 = 1;
        const Vertex w2 = first;
        const Vertex w1 = first + 1;
        VertexPartition six{VertexSet::single(u1), VertexSet::single(w1), VertexSet::single(u2), VertexSet::single(w2),
                            cp.blocks[0] - VertexSet{u1, u2}, cp.blocks[1] - VertexSet{w1, w2}};
        const bool equitable = is_equitable(cp.graph, six);
        c.expect("/six_part_equitable/" + std::to_string(n), equitable);
        if (equitable) {
            const QuotientMatrix q = quotient(cp.graph, six);
            c.expect("/six_part_quotient/" + std::to_string(n), matrix_json(q.entries));
            const CharPoly poly = char_poly(q);
            const auto decomposed = six_part_decomposition(n);
            bool same = decomposed.size() == poly.coefficients.size();
            for (std::size_t i = 0; same && i < decomposed.size(); ++i) {
                same = std::abs(decomposed[i] - static_cast<double>(poly.coefficients[i])) <= kCompareTolerance;
            }
            c.expect("/six_part_decomposition/" + std::to_string(n), same);
            c.expect("/six_part_rho/" + std::to_string(n), std::abs(largest_root(poly) - rho_cp) <= kCompareTolerance);
        }
    }
    for (int n : {9, 10, 11, 13, 14, 15}) {
        if (!construction_selected(p, n)) continue;
        c.expect("/hat_minimizes_T/" + std::to_string(n), hat_minimizes_family(n));
    }
}

// -- section 6 ---------------------------------------------------------------

/// Random maximal graph on n vertices avoiding `bad`, built by adding edges
/// in a shuffled order.
Graph random_maximal(int n, std::mt19937& rng, const std::function<bool(const Graph&)>& bad) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    Graph g(n);
    for (auto [u, v] : pairs) {
        g.add_edge(u, v);
        if (bad(g)) g.remove_edge(u, v);
    }
    return g;
}

void check_L6_1(const VerifyParams& p, Checker& c) {
    if (p.n) return;
    std::mt19937 rng(61);
    long containments = 0;
    const int trials = 50;
    for (int trial = 0; trial < trials; ++trial) {
        const int q = 2 + static_cast<int>(rng() % 2);
        const int r1 = 1 + static_cast<int>(rng() % 2);
        const int r2 = std::max(r1, 2) + static_cast<int>(rng() % 2);
        std::vector<int> pattern{r1, r2};
        for (int i = 2; i <= q; ++i) pattern.push_back(r2 + static_cast<int>(rng() % 2));
        const std::vector<int> first_sizes{r1, r2};
        Graph joined = random_maximal(3 + static_cast<int>(rng() % 3), rng, [&](const Graph& g) {
            return contains_complete_multipartite(g, first_sizes);
        });
        const Graph triangle = complete_graph(3);
        const Graph square = cycle_graph(4);
        for (int i = 2; i <= q; ++i) {
            Graph part = random_maximal(3 + static_cast<int>(rng() % 3), rng, [&](const Graph& g) {
                return g.max_degree() >= r2 || contains_subgraph(g, square) || contains_subgraph(g, triangle);
            });
            joined = join(joined, part);
        }
        if (contains_complete_multipartite(joined, pattern)) ++containments;
    }
    c.expect("/containments", containments);
    c.detail("/joins", trials);
}

void check_L6_6(const VerifyParams& p, Checker& c) {
    if (p.n) return;
    long violations = 0;
    long instances = 0;
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int s = 1; s <= 3; ++s) {
                for (int t = s; t <= 3; ++t) {
                    ++instances;
                    const int z = zarankiewicz_bipartite(a, b, s, t);
                    if (z > zarankiewicz_lemma_bound(a, b, s, t) + kCompareTolerance) ++violations;
                }
            }
        }
    }
    c.expect("/violations", violations);
    c.expect("/z/3_3_2_2", zarankiewicz_bipartite(3, 3, 2, 2));
    c.detail("/instances", instances);
}

void check_T6_5c(const VerifyParams& p, Checker& c) {
    for (int n : {8, 9}) {
        if (!order_selected(p, n)) continue;
        const FamilySpec family = FamilySpec::odd_cocktail(5);
        const ExtremalResult ex = ex_bruteforce(n, family, false, search_options(p));
        const ExtremalResult cc = ex_bruteforce(n, family, true, search_options(p));
        const std::string tag = std::to_string(n);
        c.expect("/ex_cc/" + tag, cc.value);
        c.expect("/drop/" + tag, ex.value - cc.value, true);
        // q - 1 = 1 deleted edge for L_5 = K_3(1,2,2).
        std::set<CanonicalForm> deletions;
        long cross = 0;
        long internal = 0;
        for (const Graph& g : ex.witnesses) {
            const auto parts = complement(g).components();
            for (auto [u, v] : g.edges()) {
                Graph h = g;
                h.remove_edge(u, v);
                if (!complement(h).connected()) continue;
                deletions.insert(canonical_form(h));
                bool same_part = false;
                for (VertexSet part : parts) same_part = same_part || (part.contains(u) && part.contains(v));
                (same_part ? internal : cross) += 1;
            }
        }
        c.expect("/ex_cc_equals_deletions/" + tag, deletions == forms_of(cc.witnesses), true);
        std::vector<Graph> complements;
        for (const Graph& g : cc.witnesses) complements.push_back(complement(g));
        c.expect("/complements_in_T/" + tag,
                 forms_of(complements) == forms_of(minimizer_family(n, 2, MinimizerMode::Full)), true);
        c.detail("/successful_deletions/" + tag, Json{{"cross", cross}, {"internal", internal}});
    }
    for (auto [n, parts, expected_n] : std::vector<std::tuple<int, std::vector<int>, int>>{{6, {3, 3}, 6}, {8, {4, 4}, 8}}) {
        if (!order_selected(p, expected_n)) continue;
        const long predicted = predicted_join_edges(parts, 1, 2, search_options(p));
        c.expect("/predicted_join_edges/" + std::to_string(n), predicted);
    }
}

// -- section 7 ---------------------------------------------------------------

void check_T7_1(const VerifyParams& p, Checker& c) {
    bool path_below = true;
    bool below_bound = true;
    bool any = false;
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {3, 6}, {4, 4}, {5, 4}, {2, 6}}) {
        if (!k_selected(p, k) || !m_selected(p, m) || !construction_selected(p, k * m)) continue;
        any = true;
        const Construction cycle = cp_cycle(k, m, ConnectorSpec::aligned(k));
        const Construction path = cp_path(k, m, ConnectorSpec::aligned(k));
        const double rho_cycle = spectral_radius(cycle.graph);
        c.expect("/rho_cycle/" + key({k, m}), rho_cycle);
        c.expect("/closed_form/" + key({k, m}), std::abs(rho_cycle - cp_cycle_rho_closed_form(m)) <= kCompareTolerance);
        if (spectral_radius(path.graph) + kStrictMargin >= rho_cycle) path_below = false;
        if (rho_cycle + kStrictMargin >= cp_cycle_rho_bound(k * m, k)) below_bound = false;
        VertexSet connectors;
        for (int i = 1; i <= k; ++i) {
            connectors.insert(cycle.at("u" + std::to_string(i)));
            connectors.insert(cycle.at("v" + std::to_string(i)));
        }
        const VertexPartition part{connectors, cycle.graph.vertices() - connectors};
        const bool equitable = is_equitable(cycle.graph, part);
        c.expect("/connector_quotient/" + key({k, m}),
                 equitable ? matrix_json(quotient(cycle.graph, part).entries) : Json("not equitable"));
    }
    if (any) {
        c.expect("/path_below_cycle", path_below);
        c.expect("/cycle_below_bound", below_bound);
    }
    if (order_selected(p, 8) && k_selected(p, 2)) {
        const ExtremalResult rho = rhomin_search(8, 4, search_options(p));
        const ExtremalResult edges = emin_search(8, 4, search_options(p));
        const auto minimizers = forms_of(edges.witnesses);
        bool inside = !rho.witnesses.empty();
        for (const Graph& g : rho.witnesses) inside = inside && minimizers.count(canonical_form(g));
        c.expect("/spectral_minimizer_is_edge_minimizer/8", inside);
    }
}

std::vector<std::pair<Graph, Vertex>> outer_graphs() {
    std::vector<std::pair<Graph, Vertex>> out;
    const std::vector<Graph> bases{complete_graph(1), complete_graph(2), path_graph(3),     cycle_graph(4),
                                   complete_graph(4), cycle_graph(5),    odd_cocktail_party(5)};
    for (const Graph& g : bases) {
        for (Vertex v = 0; v < g.order(); ++v) out.emplace_back(g, v);
    }
    return out;
}

void check_L7_2(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long instances = 0;
    const auto outer = outer_graphs();
    for (int m : {4, 6}) {
        if (!m_selected(p, m) || p.n) continue;
        for (const auto& [g1, a] : outer) {
            for (const auto& [g2, b] : outer) {
                ++instances;
                const double before = spectral_radius(connector_swap_configuration(g1, a, g2, b, m, false));
                const double after = spectral_radius(connector_swap_configuration(g1, a, g2, b, m, true));
                if (after <= before + kStrictMargin) ++violations;
            }
        }
    }
    if (instances == 0) return;
    c.expect("/violations", violations);
    c.detail("/instances", instances);
}

void check_L7_4(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long instances = 0;
    for (int m : {4, 6}) {
        if (!m_selected(p, m) || p.n) continue;
        std::vector<std::pair<Vertex, Vertex>> choices;
        for (Vertex u = 0; u < m; ++u) {
            for (Vertex v = 0; v < m; ++v) {
                if (u != v) choices.emplace_back(u, v);
            }
        }
        const double aligned = spectral_radius(cp_cycle(2, m, ConnectorSpec::aligned(2)).graph);
        for (int l : {2, 3}) {
            if (!k_selected(p, l)) continue;
            const double rho_aligned = spectral_radius(cp_cycle(l, m, ConnectorSpec::aligned(l)).graph);
            if (std::abs(rho_aligned - aligned) > kCompareTolerance) ++violations;
            std::vector<std::size_t> index(l, 0);
            while (true) {
                ConnectorSpec spec;
                for (int i = 0; i < l; ++i) spec.pairs.push_back(choices[index[i]]);
                ++instances;
                const double rho = spectral_radius(cp_cycle(l, m, spec).graph);
                if (spec.is_aligned(m)) {
                    if (std::abs(rho - rho_aligned) > kCompareTolerance) ++violations;
                } else if (rho <= rho_aligned + kStrictMargin) {
                    ++violations;
                }
                int pos = 0;
                while (pos < l && ++index[pos] == choices.size()) index[pos++] = 0;
                if (pos == l) break;
            }
        }
    }
    if (instances == 0) return;
    c.expect("/violations", violations);
    c.detail("/instances", instances);
}

void check_T7_5c(const VerifyParams& p, Checker& c) {
    if (!order_selected(p, 8) || !k_selected(p, 2)) return;
    const auto family = forms_of(minimizer_family(8, 2, MinimizerMode::Full));
    EnumerationOptions o;
    o.connected_only = true;
    o.hereditary = [](const Graph& g) { return d_independence_value(g, 1) <= 4; };
    double best = 0.0;
    std::vector<Graph> best_graphs;
    enumerate_graphs(8, o, [&](const Graph& g) {
        if (tau(g) != 4 || family.count(canonical_form(g))) return;
        const double rho = spectral_radius(g);
        if (best_graphs.empty() || rho < best - kStrictMargin) {
            best = rho;
            best_graphs = {g};
        } else if (rho <= best + kStrictMargin) {
            best_graphs.push_back(g);
        }
    });
    const Graph cycle = cp_cycle(2, 4, ConnectorSpec::aligned(2)).graph;
    c.expect("/minimizer_outside_T_is_cycle/8", best_graphs.size() == 1 && isomorphic(best_graphs.front(), cycle), true);
    c.detail("/rho/8", best);
}

void check_P7_7(const VerifyParams& p, Checker& c) {
    for (int m : {4, 6}) {
        if (!m_selected(p, m) || p.n) continue;
        const double closed = cp_cycle_rho_closed_form(m);
        for (GadgetKind kind : {GadgetKind::TwoPairs, GadgetKind::SplitPair, GadgetKind::ThreeExternal}) {
            const Construction gadget = connector_gadget(kind, m);
            const VertexPartition part = gadget_partition(gadget, kind);
            const std::string tag = gadget_kind_name(kind) + "/" + std::to_string(m);
            const double rho = spectral_radius(gadget.graph);
            c.expect("/exceeds_cycle/" + tag, rho > closed + kStrictMargin);
            const QuotientMatrix q = quotient(gadget.graph, part, true);
            c.expect("/equitable/" + tag, q.equitable);
            c.expect("/quotient/" + tag, matrix_json(q.entries));
            c.expect("/interlacing/" + tag, rho >= matrix_spectral_radius(q.entries) - kCompareTolerance);
            c.detail("/rho/" + tag, rho);
        }
    }
}

// -- section 8 ---------------------------------------------------------------

void check_L8_1(const VerifyParams& p, Checker& c) {
    long ex_mismatches = 0;
    long cc_mismatches = 0;
    long cc_tree_mismatches = 0;
    long witnesses = 0;
    Json examples = Json::array();
    for (int n = 3; n <= std::min(p.max_n, 7); ++n) {
        if (!order_selected(p, n)) continue;
        for (int d = 0; d <= 2; ++d) {
            for (int s = d + 1; s < n; ++s) {
                const FamilySpec family = FamilySpec::h_family(s, d);
                for (bool cc : {false, true}) {
                    const ExtremalResult r = ex_bruteforce(n, family, cc, search_options(p));
                    for (const Graph& h : r.witnesses) {
                        ++witnesses;
                        const Graph co = complement(h);
                        const int value = d_independence_value(co, d);
                        if (value == s) continue;
                        if (!cc) {
                            ++ex_mismatches;
                        } else if (co.size() == n - 1) {
                            // A tree complement admits no edge addition keeping it connected.
                            ++cc_tree_mismatches;
                            if (examples.size() < 8) {
                                examples.push_back(Json{{"n", n}, {"d", d}, {"s", s}, {"complement", to_graph6(co)}, {"i_d", value}});
                            }
                        } else {
                            ++cc_mismatches;
                        }
                    }
                }
            }
        }
    }
    if (witnesses == 0) return;
    c.expect("/mismatches/ex", ex_mismatches);
    c.expect("/mismatches/ex_cc_non_tree", cc_mismatches);
    c.expect("/mismatches/ex_cc_tree_complement", cc_tree_mismatches, true);
    c.detail("/witnesses", witnesses);
    c.detail("/tree_complement_examples", examples);
}

void check_P8_3(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long instances = 0;
    for (int n = 5; n <= std::min(p.max_n, kSpectralSearchCap); ++n) {
        if (!order_selected(p, n)) continue;
        const auto graphs = all_graphs(n, true);
        std::vector<double> rho;
        for (const Graph& g : graphs) rho.push_back(spectral_radius(g));
        for (auto [s, d] : std::vector<std::pair<int, int>>{{4, 1}, {3, 0}, {4, 2}, {3, 1}}) {
            if (s >= n) continue;
            double min_rho = -1.0;
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (d_independence_value(graphs[i], d) != s) continue;
                if (min_rho < 0 || rho[i] < min_rho) min_rho = rho[i];
            }
            if (min_rho < 0) continue;
            ++instances;
            const SpectralLowerDetail bound = spectral_lower_from_excc(n, s, d, search_options(p));
            if (min_rho < bound.result.value - kCompareTolerance) ++violations;
            if (bound.bound_h < bound.bound_multipartite - kCompareTolerance) ++violations;
            c.detail("/bound/" + key({n, s, d}), Json{{"bound", bound.result.value}, {"min_rho", min_rho}});
            if (n == 8 && s == 4 && d == 1) c.expect("/bound/8_4_1", bound.result.value);
        }
    }
    if (instances == 0) return;
    c.expect("/violations", violations);
    c.detail("/instances", instances);
}

// -- section 9 ---------------------------------------------------------------

void check_P9_1(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long instances = 0;
    for (int n = 3; n <= std::min(p.max_n, 7); ++n) {
        if (!order_selected(p, n)) continue;
        const auto graphs = all_graphs(n, true);
        for (int d : {1, 2}) {
            std::map<int, double> max_rho;
            for (const Graph& g : graphs) {
                const int s = d_independence_value(g, d);
                const double r = spectral_radius(g);
                if (!max_rho.count(s) || r > max_rho[s]) max_rho[s] = r;
            }
            for (int s = d + 1; s < n; ++s) {
                if ((d * s) % 2 != 0 || !max_rho.count(s)) continue;
                ++instances;
                const Graph g = spectral_maximizer(n, s, d);
                if (!g.connected() || d_independence_value(g, d) != s) ++violations;
                if (spectral_radius(g) < max_rho[s] - kCompareTolerance) ++violations;
            }
        }
    }
    if (instances > 0) {
        c.expect("/violations", violations);
        c.detail("/instances", instances);
    }
    if (construction_selected(p, 8)) c.expect("/i2/8_5_2", d_independence_value(spectral_maximizer(8, 5, 2), 2));
}

void check_P9_2(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long regular = 0;
    bool tight = true;
    bool any = false;
    for (int n = 2; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        any = true;
        std::vector<Graph> graphs;
        for (const Graph& g : all_graphs(n, true)) {
            if (g.is_regular()) graphs.push_back(g);
        }
        regular += static_cast<long>(graphs.size());
        violations += count_bad(graphs, p.jobs, [](const Graph& g) {
            const BoundResult b = hoffman_type_upper(g);
            return !b.applicable || tau(g) > b.value + kCompareTolerance;
        });
        const BoundResult kb = hoffman_type_upper(complete_graph(n));
        if (std::abs(kb.value - tau(complete_graph(n))) > kCompareTolerance) tight = false;
    }
    if (!any) return;
    c.expect("/violations", violations);
    c.expect("/tight_on_complete", tight);
    c.detail("/regular_graphs", regular);
}

void check_P9_3(const VerifyParams& p, Checker& c) {
    long violations = 0;
    long examined = 0;
    for (int n = 2; n <= p.max_n; ++n) {
        if (!order_selected(p, n)) continue;
        const auto graphs = all_graphs(n, true);
        examined += static_cast<long>(graphs.size());
        violations += count_bad(graphs, p.jobs, [](const Graph& g) { return tau(g) < probabilistic_lower_exact(g); });
    }
    if (examined == 0) return;
    c.expect("/violations", violations);
    c.detail("/examined", examined);
}

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> table{
        {"L2.1", check_L2_1},   {"L2.2", check_L2_2},   {"T2.3", check_T2_3}, {"L3.2", check_L3_2},
        {"T3.3", check_T3_3},   {"P4.1", check_P4_1},   {"L4.2c", check_L4_2c}, {"T4.3", check_T4_3},
        {"P4.4", check_P4_4},   {"L4.6", check_L4_6},   {"T4.5", check_T4_5}, {"L5.1", check_L5_1},
        {"P5.3", check_P5_3},   {"T5.4", check_T5_4},   {"T5.5", check_T5_5}, {"L6.1", check_L6_1},
        {"L6.6", check_L6_6},   {"T6.5c", check_T6_5c}, {"T7.1", check_T7_1}, {"L7.2", check_L7_2},
        {"L7.4", check_L7_4},   {"T7.5c", check_T7_5c}, {"P7.7", check_P7_7}, {"L8.1", check_L8_1},
        {"P8.3", check_P8_3},   {"P9.1", check_P9_1},   {"P9.2", check_P9_2}, {"P9.3", check_P9_3},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& registered_theorems() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.push_back(entry.first);
        return out;
    }();
    return ids;
}

bool is_registered(const std::string& id) {
    const auto& ids = registered_theorems();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report verify(const std::string& id, const VerifyParams& params, const Manifest& manifest) {
    const auto& table = registry();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == id; });
    if (it == table.end()) throw InvalidArgument("unknown theorem id " + id);
    if (params.max_n < 1) throw InvalidArgument("max_n must be positive");
    if (params.max_n > kEdgeSearchCap) {
        throw CapExceeded("max_n " + std::to_string(params.max_n) + " exceeds the search cap " +
                          std::to_string(kEdgeSearchCap));
    }
    if (params.jobs < 1) throw InvalidArgument("jobs must be positive");
    if (params.n && (*params.n < 1 || *params.n > Graph::kMaxOrder)) throw InvalidArgument("n out of range");

    Report report;
    report.id = id;
    report.title = manifest.title(id);
    report.params = Json{{"max_n", params.max_n}, {"jobs", params.jobs}};
    if (params.n) report.params["n"] = *params.n;
    if (params.k) report.params["k"] = *params.k;
    if (params.m) report.params["m"] = *params.m;

    const auto start = std::chrono::steady_clock::now();
    Checker checker(manifest, report);
    it->second(params, checker);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    bool hard_fail = false;
    bool soft_fail = false;
    for (const CheckRecord& c : report.checks) {
        if (c.ok) continue;
        (c.soft ? soft_fail : hard_fail) = true;
    }
    if (report.checks.empty()) {
        report.verdict = Verdict::Skipped;
        report.notes.push_back("no instance within the requested parameters");
    } else if (hard_fail) {
        report.verdict = Verdict::Fail;
    } else if (soft_fail) {
        report.verdict = Verdict::Warn;
    } else {
        report.verdict = Verdict::Pass;
    }
    return report;
}

}  // namespace dissoc
