// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "dissoc/bounds.hpp"
#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/enumerate.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"
#include "dissoc/verify.hpp"

using namespace dissoc;

namespace {

class Criterion {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    bool passed() const { return failures_.empty(); }
    std::string summary() const {
        std::string out;
        for (const auto& f : failures_) out += " [failed: " + f + "]";
        for (const auto& n : notes_) out += " [" + n + "]";
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::set<CanonicalForm> forms(const std::vector<Graph>& graphs) {
    std::set<CanonicalForm> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g, Graph::kMaxOrder));
    return out;
}

long choose2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

int tau(const Graph& g) { return dissociation_number(g).value; }

SearchOptions four_workers(int cap = 0) {
    SearchOptions o;
    o.jobs = 4;
    o.cap = cap;
    return o;
}

void turan_values(Criterion& c) {
    const auto start = Clock::now();
    const std::vector<long> expected{8, 11, 15, 20};
    const std::vector<std::size_t> classes{1, 2, 1, 1};
    for (int n = 5; n <= 8; ++n) {
        const ExtremalResult r = ex_bruteforce(n, FamilySpec::odd_cocktail(5), false, four_workers());
        const std::string tag = "n=" + std::to_string(n);
        c.require(r.value == expected[n - 5], "ex " + tag);
        c.require(r.witnesses.size() == classes[n - 5], "witness count " + tag);
        c.require(forms(r.witnesses) == forms(turan_family(n, 2)), "witnesses equal turan_family " + tag);
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed <= 300.0, "runtime");
    c.note("elapsed " + std::to_string(elapsed) + " s");
}

void edge_minimizers(Criterion& c) {
    const std::vector<long> printed{5, 7, 9};
    for (int n = 6; n <= 9; ++n) {
        const SearchOptions o = four_workers(kEdgeSearchCap);
        const long ex = ex_bruteforce(n, FamilySpec::odd_cocktail(5), false, o).value;
        const ExtremalResult r = emin_search(n, 4, o);
        const std::string tag = "n=" + std::to_string(n);
        c.require(r.value == choose2(n) - ex + 1, "formula " + tag);
        if (n <= 8) c.require(r.value == printed[n - 6], "printed value " + tag);
        if (n >= 8) {
            c.require(forms(r.witnesses) == forms(minimizer_family(n, 2, MinimizerMode::Full)),
                      "minimizer set equals T " + tag);
        }
        if (n == 9) c.note("emin(9,4) = " + std::to_string(r.value) + " = C(9,2) - ex(9,L5) + 1 with ex(9,L5) = " +
                           std::to_string(ex));
    }
}

void spectral_minimizers(Criterion& c) {
    const std::vector<std::pair<Graph, double>> expected{
        {path_graph(5), std::sqrt(3.0)},
        {path_graph(6), 2.0 * std::cos(std::numbers::pi / 7.0)},
        {cycle_graph(7), 2.0},
        {hat_minimizer_4(8).graph, largest_root(std::vector<double>{1, -1, -4, 2})},
    };
    for (int n = 5; n <= 8; ++n) {
        const ExtremalResult r = rhomin_search(n, 4, four_workers());
        const std::string tag = "n=" + std::to_string(n);
        c.require(r.witnesses.size() == 1 && !r.tie, "unique " + tag);
        if (!r.witnesses.empty()) c.require(isomorphic(r.witnesses.front(), expected[n - 5].first), "identity " + tag);
        c.require(std::abs(r.rho - expected[n - 5].second) <= 1e-9, "rho " + tag);
    }
}

VertexPartition hat_partition(const Construction& h, bool apex) {
    VertexSet outer{h.at("u'"), h.at("v'")};
    VertexSet inner{h.at("u"), h.at("v")};
    VertexSet rest = h.graph.vertices() - outer - inner;
    VertexPartition p{outer, inner};
    if (apex) {
        VertexSet a;
        for (Vertex v : h.v_delta) a.insert(v);
        p.push_back(a);
        rest = rest - a;
    }
    p.push_back(rest);
    return p;
}

void quotient_machinery(Criterion& c) {
    for (int n : {8, 12, 16, 10, 14}) {
        const bool apex = n % 4 == 2;
        const Construction h = hat_minimizer_4(n);
        const VertexPartition p = hat_partition(h, apex);
        const std::string tag = "n=" + std::to_string(n);
        c.require(is_equitable(h.graph, p), "equitable " + tag);
        if (!is_equitable(h.graph, p)) continue;
        const CharPoly poly = char_poly(quotient(h.graph, p));
        const std::int64_t half = n / 2;
        const std::vector<std::int64_t> printed =
            apex ? std::vector<std::int64_t>{1, 4 - half, 2 - n, -3, half - 1}
                 : std::vector<std::int64_t>{1, 3 - half, -half, half - 2};
        c.require(poly.coefficients == printed, "polynomial " + tag);
        c.require(std::abs(largest_root(poly) - spectral_radius(h.graph)) <= 1e-9, "rho " + tag);
    }
}

void cycle_closed_form(Criterion& c) {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 6}, {4, 4}, {5, 4}}) {
        const double rho = spectral_radius(cp_cycle(k, m, ConnectorSpec::aligned(k)).graph);
        const double closed = (m - 3 + std::sqrt((m - 1.0) * (m - 1.0) + 8.0)) / 2.0;
        const int n = k * m;
        const std::string tag = "(k,m)=(" + std::to_string(k) + "," + std::to_string(m) + ")";
        c.require(std::abs(rho - closed) <= 1e-9, "closed form " + tag);
        c.require(rho < m - 2.0 + 2.0 * k / (n - k) - 1e-7, "upper bound " + tag);
    }
}

void lemma_gadget_suite(Criterion& c, const Manifest& manifest) {
    long disagreements = 0;
    const auto five = enumerate_graphs(5, false);
    for (const Graph& g : five) {
        if (is_L_free_by_degree(g, 2) == contains_complete_multipartite(g, odd_cocktail_sizes(2))) ++disagreements;
    }
    c.require(five.size() == 34 && disagreements == 0, "degree criterion on 34 graphs");
    VerifyParams p;
    for (const char* id : {"L7.2", "L7.4"}) {
        const Report r = verify(id, p, manifest);
        c.require(r.verdict == Verdict::Pass, id);
    }
    for (int m : {4, 6}) {
        const double closed = cp_cycle_rho_closed_form(m);
        for (GadgetKind kind : {GadgetKind::TwoPairs, GadgetKind::SplitPair, GadgetKind::ThreeExternal}) {
            const double rho = spectral_radius(connector_gadget(kind, m).graph);
            c.require(rho > closed + 1e-7, gadget_kind_name(kind) + " m=" + std::to_string(m));
        }
    }
}

void bounds_suite(Criterion& c) {
    long hoffman = 0;
    long probabilistic = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            const int t = tau(g);
            if (g.is_regular()) {
                const BoundResult b = hoffman_type_upper(g);
                if (!b.applicable || t > b.value + 1e-9) ++hoffman;
            }
            if (t < probabilistic_lower_exact(g)) ++probabilistic;
        }
        const BoundResult k = hoffman_type_upper(complete_graph(n));
        c.require(std::abs(k.value - tau(complete_graph(n))) <= 1e-9, "tight on K_" + std::to_string(n));
    }
    c.require(hoffman == 0, "regular-graph upper bound");
    c.require(probabilistic == 0, "probabilistic lower bound");

    long complement = 0;
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n, false)) {
            for (int d : {4, 5}) {
                const BoundResult b = complement_free_upper(g, d);
                if (b.applicable && tau(g) > d - 1) ++complement;
            }
        }
    }
    c.require(complement == 0, "complement-free upper bounds");

    EnumerationOptions trees;
    trees.connected_only = true;
    trees.hereditary = is_forest;
    trees.cap = 10;
    long short_trees = 0;
    for (int n = 1; n <= 10; ++n) {
        for (const Graph& t : enumerate_graphs(n, trees)) short_trees += tau(t) < (2 * n + 2) / 3 ? 1 : 0;
    }
    c.require(short_trees == 0, "trees reach ceil(2n/3)");
}

void kelmans_property(Criterion& c) {
    std::mt19937_64 rng(2024);
    long violations = 0;
    const int triples = 10000;
    for (int i = 0; i < triples; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        std::bernoulli_distribution coin(0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0);
        Graph g(n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (coin(rng)) g.add_edge(a, b);
            }
        }
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        const Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (v == u) v = (v + 1) % n;
        if (spectral_radius(kelmans(g, u, v)) < spectral_radius(g) - 1e-9) ++violations;
    }
    c.require(violations == 0, "rho never decreases");
    c.note(std::to_string(triples) + " triples");
}

void finite_consistency(Criterion& c, const Manifest& manifest) {
    for (int n : {8, 9}) {
        const SearchOptions o = four_workers(kEdgeSearchCap);
        const ExtremalResult ex = ex_bruteforce(n, FamilySpec::odd_cocktail(5), false, o);
        const ExtremalResult cc = ex_bruteforce(n, FamilySpec::odd_cocktail(5), true, o);
        const std::string tag = "n=" + std::to_string(n);
        c.require(cc.value == ex.value - 1, "ex_cc = ex - 1 " + tag);
        std::vector<Graph> complements;
        for (const Graph& g : cc.witnesses) {
            complements.push_back(complement(g));
            c.require(complements.back().connected(), "connected complement " + tag);
        }
        const auto family = forms(minimizer_family(n, 2, MinimizerMode::Full));
        bool inside = true;
        for (const auto& f : forms(complements)) inside = inside && family.count(f) > 0;
        c.require(inside, "complements in T " + tag);
    }
    VerifyParams p;
    c.require(verify("L6.1", p, manifest).verdict == Verdict::Pass, "join freeness on 50 joins");
    long violations = 0;
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int s = 1; s <= 3; ++s) {
                for (int t = s; t <= 3; ++t) {
                    if (zarankiewicz_bipartite(a, b, s, t) > zarankiewicz_lemma_bound(a, b, s, t) + 1e-9) ++violations;
                }
            }
        }
    }
    c.require(violations == 0, "bipartite bound");
    c.require(predicted_join_edges({3, 3}, 1, 2) == ex_L5_closed_form(6), "predicted join n=6");
    c.require(predicted_join_edges({4, 4}, 1, 2) == ex_L5_closed_form(8), "predicted join n=8");
}

void verify_all(Criterion& c) {
    const auto start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"dissoc", "verify", "all", "--max-n", "8"}, out, err);
    const double elapsed = seconds_since(start);
    c.require(code == 0, "exit code " + std::to_string(code));
    c.require(elapsed <= 1800.0, "runtime");
    std::istringstream lines(out.str());
    std::string line;
    int warned = 0;
    int reports = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        if (j["params"]["theorem"] == "all") continue;
        ++reports;
        if (j["results"]["verdict"] == "WARN") ++warned;
    }
    c.require(reports == static_cast<int>(registered_theorems().size()), "one report per theorem");
    c.note(std::to_string(reports) + " reports, " + std::to_string(warned) + " WARN, elapsed " +
           std::to_string(elapsed) + " s");
}

}  // namespace

int main() {
    const Manifest manifest = Manifest::load_default();
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"Turan values of L5 and witness sets", turan_values},
        {"edge minimizers with dissociation number four", edge_minimizers},
        {"unique spectral minimizers for n = 5..8", spectral_minimizers},
        {"quotient partitions and characteristic polynomials", quotient_machinery},
        {"aligned cycle closed form and upper bound", cycle_closed_form},
        {"lemma and gadget suite", [&](Criterion& c) { lemma_gadget_suite(c, manifest); }},
        {"bounds suite", bounds_suite},
        {"Kelmans operation never lowers rho", kelmans_property},
        {"finite consistency of the connected-complement results", [&](Criterion& c) { finite_consistency(c, manifest); }},
        {"verify all --max-n 8", verify_all},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        failed += c.passed() ? 0 : 1;
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
                  << c.summary() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
