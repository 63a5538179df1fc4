#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dissoc/bounds.hpp"
#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/enumerate.hpp"
#include "dissoc/error.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"
#include "dissoc/verify.hpp"

namespace dissoc::cli {
namespace {

using Clock = std::chrono::steady_clock;

int default_jobs() {
    if (const char* env = std::getenv("DISSOC_JOBS"); env != nullptr && *env != '\0') {
        try {
            const int jobs = std::stoi(env);
            if (jobs >= 1) return jobs;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct Options {
    std::vector<std::string> graph6;
    std::string input;
    std::string out;
    std::string manifest;
    int jobs = default_jobs();

    // construct
    std::string kind;
    int n = 0;
    int k = 0;
    int m = 0;
    int l = 0;
    int d = 1;
    int s = 0;
    std::vector<int> sizes;
    std::string gadget = "fig7";
    std::string connectors;

    // quotient, free, qgood, bounds
    std::string partition;
    bool lenient = false;
    std::string family;
    int q = 2;
    bool nonempty = false;
    std::vector<int> complement_d{4, 5};

    // search
    std::string mode = "ex";
    int tau = 0;
    int cap = 0;

    // verify
    std::string theorem;
    int max_n = 8;
    std::optional<int> only_n;
    std::optional<int> only_k;
    std::optional<int> only_m;

    // enumerate
    bool connected = false;
    int edge_min = 0;
    int edge_max = -1;
    int shard_index = 0;
    int shard_count = 1;
};

class Session {
public:
    Session(const Options& options, std::ostream& out) : options_(options), out_(out) {}

    void emit(const std::string& command, Json params, Json results, Clock::time_point start) {
        Json line;
        line["command"] = command;
        params["tolerance"] = kCompareTolerance;
        params["strict_margin"] = kStrictMargin;
        line["params"] = std::move(params);
        line["results"] = std::move(results);
        line["elapsed_ms"] =
            std::round(std::chrono::duration<double, std::milli>(Clock::now() - start).count() * 1000.0) / 1000.0;
        line["tool_version"] = DISSOC_VERSION;
        line["manifest_version"] = manifest_version();
        out_ << line.dump() << '\n';
    }

    const Manifest& manifest() {
        if (!manifest_) {
            manifest_ = options_.manifest.empty() ? Manifest::load_default() : Manifest::load(options_.manifest);
        }
        return *manifest_;
    }

    Json manifest_version() {
        try {
            return manifest().version();
        } catch (const Error&) {
            return nullptr;
        }
    }

    std::vector<Graph> input_graphs() {
        std::vector<Graph> graphs;
        for (const std::string& text : options_.graph6) graphs.push_back(from_graph6(text));
        if (!options_.input.empty()) {
            std::ifstream in(options_.input);
            if (!in) throw MalformedInput("cannot open " + options_.input);
            for (Graph& g : read_graph6(in)) graphs.push_back(std::move(g));
        } else if (options_.graph6.empty()) {
            for (Graph& g : read_graph6(std::cin)) graphs.push_back(std::move(g));
        }
        if (graphs.empty()) throw InvalidArgument("no input graphs");
        return graphs;
    }

    void write_graphs(const std::vector<Graph>& graphs) {
        if (options_.out.empty()) return;
        std::ofstream file(options_.out);
        if (!file) throw InvalidArgument("cannot write " + options_.out);
        write_graph6(file, graphs);
    }

    const Options& options() const { return options_; }

private:
    const Options& options_;
    std::ostream& out_;
    std::optional<Manifest> manifest_;
};

Json set_json(VertexSet s) { return Json(s.to_vector()); }

Json partition_json(const VertexPartition& p) {
    Json out = Json::array();
    for (VertexSet part : p) out.push_back(set_json(part));
    return out;
}

VertexPartition parse_partition(const std::string& text) {
    VertexPartition p;
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ':')) {
        VertexSet set;
        std::stringstream vertices(part);
        std::string v;
        while (std::getline(vertices, v, ',')) {
            if (v.empty()) continue;
            try {
                std::size_t used = 0;
                const int value = std::stoi(v, &used);
                if (used != v.size() || value < 0 || value >= Graph::kMaxOrder) throw InvalidArgument(v);
                set.insert(value);
            } catch (const std::exception&) {
                throw MalformedInput("bad vertex '" + v + "' in partition");
            }
        }
        p.push_back(set);
    }
    if (p.empty()) throw MalformedInput("empty partition");
    return p;
}

ConnectorSpec parse_connectors(const std::string& text, int l) {
    if (text.empty()) return ConnectorSpec::aligned(l);
    ConnectorSpec spec;
    std::stringstream pairs(text);
    std::string pair;
    while (std::getline(pairs, pair, ':')) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos) throw MalformedInput("connector pair needs 'u,v': " + pair);
        try {
            spec.pairs.emplace_back(std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1)));
        } catch (const std::exception&) {
            throw MalformedInput("bad connector pair " + pair);
        }
    }
    if (static_cast<int>(spec.pairs.size()) != l) throw InvalidArgument("need one connector pair per block");
    return spec;
}

Json construction_json(const Construction& c) {
    Json out;
    out["graph6"] = to_graph6(c.graph);
    out["order"] = c.graph.order();
    out["size"] = c.graph.size();
    Json blocks = Json::array();
    for (VertexSet b : c.blocks) blocks.push_back(set_json(b));
    out["blocks"] = blocks;
    out["v_delta"] = c.v_delta;
    Json links = Json::array();
    for (auto [u, v] : c.links) links.push_back({u, v});
    out["links"] = links;
    Json named = Json::object();
    for (const auto& [name, v] : c.named) named[name] = v;
    out["named"] = named;
    return out;
}

Construction plain(Graph g) {
    Construction c;
    c.graph = std::move(g);
    return c;
}

int cmd_construct(Session& session) {
    const auto start = Clock::now();
    const Options& o = session.options();
    std::vector<Construction> built;
    if (o.kind == "cocktail") {
        built.push_back(plain(cocktail_party(o.n)));
    } else if (o.kind == "odd-cocktail") {
        built.push_back(plain(odd_cocktail_party(o.n)));
    } else if (o.kind == "complete-multipartite") {
        built.push_back(plain(complete_multipartite(o.sizes)));
    } else if (o.kind == "turan-member") {
        built.push_back(plain(turan_member(o.sizes)));
    } else if (o.kind == "turan-family") {
        for (Graph& g : turan_family(o.n, o.k)) built.push_back(plain(std::move(g)));
    } else if (o.kind == "minimizer-family") {
        for (Graph& g : minimizer_family(o.n, o.k)) built.push_back(plain(std::move(g)));
    } else if (o.kind == "minimizer") {
        built.push_back(minimizer_representative(o.sizes));
    } else if (o.kind == "hat") {
        built.push_back(hat_minimizer_4(o.n));
    } else if (o.kind == "cp-path") {
        built.push_back(cp_path(o.l, o.m, parse_connectors(o.connectors, o.l)));
    } else if (o.kind == "cp-cycle") {
        built.push_back(cp_cycle(o.l, o.m, parse_connectors(o.connectors, o.l)));
    } else if (o.kind == "gadget") {
        built.push_back(connector_gadget(parse_gadget_kind(o.gadget), o.m));
    } else if (o.kind == "spectral-maximizer") {
        built.push_back(plain(spectral_maximizer(o.n, o.s, o.d)));
    } else if (o.kind == "path") {
        built.push_back(plain(path_graph(o.n)));
    } else if (o.kind == "cycle") {
        built.push_back(plain(cycle_graph(o.n)));
    } else if (o.kind == "complete") {
        built.push_back(plain(complete_graph(o.n)));
    } else {
        throw InvalidArgument("unknown construction '" + o.kind + "'");
    }

    std::vector<Graph> graphs;
    Json results = Json::array();
    for (const Construction& c : built) {
        graphs.push_back(c.graph);
        results.push_back(construction_json(c));
    }
    session.write_graphs(graphs);
    if (!o.out.empty()) {
        std::ofstream sidecar(o.out + ".json");
        if (!sidecar) throw InvalidArgument("cannot write " + o.out + ".json");
        sidecar << results.dump(2) << '\n';
    }
    Json params{{"kind", o.kind}, {"n", o.n}, {"k", o.k}, {"m", o.m}, {"l", o.l}, {"d", o.d}, {"s", o.s},
                {"sizes", o.sizes}};
    if (o.kind == "gadget") params["gadget"] = o.gadget;
    session.emit("construct", params, results, start);
    return kExitOk;
}

/// Emits one report per input graph with results from `compute`.
template <typename F>
int per_graph(Session& session, const std::string& command, Json params, F compute) {
    for (const Graph& g : session.input_graphs()) {
        const auto start = Clock::now();
        Json results = compute(g);
        Json p = params;
        p["graph6"] = to_graph6(g);
        session.emit(command, p, results, start);
    }
    return kExitOk;
}

int cmd_tau(Session& session) {
    return per_graph(session, "tau", Json::object(), [](const Graph& g) {
        const WitnessedValue v = dissociation_number(g);
        return Json{{"value", v.value}, {"witness", set_json(v.witness)}};
    });
}

int cmd_idnum(Session& session) {
    const int d = session.options().d;
    return per_graph(session, "idnum", Json{{"d", d}}, [d](const Graph& g) {
        const WitnessedValue v = d_independence_number(g, d);
        return Json{{"value", v.value}, {"witness", set_json(v.witness)}};
    });
}

int cmd_rho(Session& session) {
    return per_graph(session, "rho", Json::object(), [](const Graph& g) {
        const Spectrum s = spectrum(g);
        return Json{{"rho", s.rho}, {"lambda_min", s.lambda_min}, {"residual", s.residual}};
    });
}

int cmd_quotient(Session& session) {
    const Options& o = session.options();
    const VertexPartition p = parse_partition(o.partition);
    return per_graph(session, "quotient", Json{{"partition", o.partition}, {"lenient", o.lenient}},
                     [&](const Graph& g) {
                         const QuotientMatrix q = quotient(g, p, o.lenient);
                         Json out{{"equitable", q.equitable}, {"matrix", q.entries}};
                         if (q.is_integral()) {
                             const CharPoly poly = char_poly(q);
                             out["char_poly"] = poly.coefficients;
                             out["char_poly_text"] = poly.to_string();
                             out["largest_root"] = largest_root(poly);
                         }
                         out["rho_quotient"] = matrix_spectral_radius(q.entries);
                         out["rho_graph"] = spectral_radius(g);
                         return out;
                     });
}

int cmd_free(Session& session) {
    const FamilySpec family = FamilySpec::parse(session.options().family);
    return per_graph(session, "free", Json{{"family", family.describe()}}, [&](const Graph& g) {
        Json out{{"free", family.is_free(g)}};
        if (family.kind == FamilyKind::CompleteMultipartite) {
            if (auto parts = find_complete_multipartite(g, family.sizes)) out["witness"] = partition_json(*parts);
        }
        return out;
    });
}

int cmd_qgood(Session& session) {
    const Options& o = session.options();
    return per_graph(session, "qgood", Json{{"q", o.q}, {"nonempty", o.nonempty}}, [&](const Graph& g) {
        const PartitionValue v = q_good_partition(g, o.q, o.nonempty);
        return Json{{"internal_edges", v.value}, {"partition", partition_json(v.partition)}};
    });
}

Json bound_json(const BoundResult& b) {
    Json out{{"name", b.name}, {"applicable", b.applicable}, {"hypothesis", b.hypothesis_note}};
    if (b.applicable) out["value"] = b.value;
    return out;
}

int cmd_bounds(Session& session) {
    const Options& o = session.options();
    return per_graph(session, "bounds", Json{{"complement_d", o.complement_d}}, [&](const Graph& g) {
        Json list = Json::array();
        list.push_back(bound_json(hoffman_type_upper(g)));
        if (g.size() > 0) list.push_back(bound_json(probabilistic_lower(g)));
        for (int d : o.complement_d) {
            Json b = bound_json(complement_free_upper(g, d));
            b["d"] = d;
            list.push_back(b);
        }
        return Json{{"tau", dissociation_number(g).value}, {"bounds", list}};
    });
}

int cmd_search(Session& session) {
    const auto start = Clock::now();
    const Options& o = session.options();
    SearchOptions so;
    so.jobs = o.jobs;
    so.cap = o.cap;
    ExtremalResult r;
    Json params{{"mode", o.mode}, {"n", o.n}, {"jobs", o.jobs}, {"cap", o.cap}};
    if (o.mode == "ex" || o.mode == "ex_cc") {
        if (o.family.empty()) throw InvalidArgument("--family is required for ex searches");
        const FamilySpec family = FamilySpec::parse(o.family);
        params["family"] = family.describe();
        r = ex_bruteforce(o.n, family, o.mode == "ex_cc", so);
    } else if (o.mode == "emin" || o.mode == "rhomin") {
        params["tau"] = o.tau;
        r = o.mode == "emin" ? emin_search(o.n, o.tau, so) : rhomin_search(o.n, o.tau, so);
    } else {
        throw InvalidArgument("unknown search mode '" + o.mode + "'");
    }
    Json witnesses = Json::array();
    for (const Graph& g : r.witnesses) witnesses.push_back(to_graph6(g));
    Json results{{"mode", mode_name(r.mode)}, {"value", r.value}, {"witnesses", witnesses},
                 {"witness_count", r.witnesses.size()}, {"examined", r.examined}};
    if (r.mode == SearchMode::RhoMin) {
        results["rho"] = r.rho;
        results["witness_rho"] = r.witness_rho;
        results["tie"] = r.tie;
    }
    session.write_graphs(r.witnesses);
    session.emit("search", params, results, start);
    return kExitOk;
}

int cmd_verify(Session& session) {
    const Options& o = session.options();
    VerifyParams params;
    params.max_n = o.max_n;
    params.jobs = o.jobs;
    params.n = o.only_n;
    params.k = o.only_k;
    params.m = o.only_m;
    std::vector<std::string> ids;
    if (o.theorem == "all") {
        ids = registered_theorems();
    } else if (is_registered(o.theorem)) {
        ids.push_back(o.theorem);
    } else {
        throw InvalidArgument("unknown theorem id '" + o.theorem + "'");
    }
    const Manifest& manifest = session.manifest();
    bool failed = false;
    Json summary = Json::object();
    const auto all_start = Clock::now();
    for (const std::string& id : ids) {
        const auto start = Clock::now();
        const Report report = verify(id, params, manifest);
        failed = failed || report.verdict == Verdict::Fail;
        summary[id] = verdict_name(report.verdict);
        session.emit("verify", Json{{"theorem", id}, {"max_n", o.max_n}, {"jobs", o.jobs}}, report.to_json(), start);
    }
    if (ids.size() > 1) {
        session.emit("verify", Json{{"theorem", "all"}, {"max_n", o.max_n}, {"jobs", o.jobs}},
                     Json{{"verdict", failed ? "FAIL" : "PASS"}, {"summary", summary}}, all_start);
    }
    return failed ? kExitFail : kExitOk;
}

int cmd_enumerate(Session& session, std::ostream& out) {
    const auto start = Clock::now();
    const Options& o = session.options();
    EnumerationOptions eo;
    eo.connected_only = o.connected;
    eo.edge_min = o.edge_min;
    eo.edge_max = o.edge_max;
    eo.shard_index = o.shard_index;
    eo.shard_count = o.shard_count;
    eo.cap = o.cap > 0 ? o.cap : kDefaultEnumerationCap;
    if (o.out == "-") {
        enumerate_graphs(o.n, eo, [&](const Graph& g) { out << to_graph6(g) << '\n'; });
        return kExitOk;
    }
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw InvalidArgument("cannot write " + o.out);
    }
    long count = 0;
    enumerate_graphs(o.n, eo, [&](const Graph& g) {
        ++count;
        if (file.is_open()) file << to_graph6(g) << '\n';
    });
    session.emit("enumerate",
                 Json{{"n", o.n}, {"connected", o.connected}, {"edge_min", o.edge_min}, {"edge_max", o.edge_max},
                      {"shard", std::to_string(o.shard_index) + "/" + std::to_string(o.shard_count)}},
                 Json{{"count", count}}, start);
    return kExitOk;
}

void add_graph_input(CLI::App* sub, Options& o) {
    sub->add_option("-g,--graph6", o.graph6, "Input graph(s) in graph6; default reads stdin");
    sub->add_option("-i,--input", o.input, "File with one graph6 per line");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Dissociation number, Turan and spectral extremal toolkit", "dissoc"};
    app.require_subcommand(1);
    app.add_option("--manifest", o.manifest, "Expected-values manifest (JSON)");
    app.add_option("-o,--out", o.out, "Write graph6 payloads to this file");
    app.add_option("-j,--jobs", o.jobs, "Worker threads (default $DISSOC_JOBS or 1)")->check(CLI::PositiveNumber);
    app.set_version_flag("--version", DISSOC_VERSION);
    app.fallthrough();

    auto* construct = app.add_subcommand("construct", "Build a named graph and its landmarks");
    construct->add_option("kind", o.kind,
                          "cocktail | odd-cocktail | complete-multipartite | turan-member | turan-family | "
                          "minimizer-family | minimizer | hat | cp-path | cp-cycle | gadget | "
                          "spectral-maximizer | path | cycle | complete")
        ->required();
    construct->add_option("-n", o.n, "Order");
    construct->add_option("-k", o.k, "Number of blocks");
    construct->add_option("-m", o.m, "Block size");
    construct->add_option("-l", o.l, "Blocks in a path or cycle");
    construct->add_option("-d", o.d, "Degree bound");
    construct->add_option("-s", o.s, "d-independence number");
    construct->add_option("--sizes", o.sizes, "Part sizes")->delimiter(',');
    construct->add_option("--gadget", o.gadget, "fig7 | fig8 | fig9");
    construct->add_option("--connectors", o.connectors, "Per-block pairs 'u,v:u,v:...'");

    auto* tau = app.add_subcommand("tau", "Dissociation number with a witness set");
    add_graph_input(tau, o);
    auto* idnum = app.add_subcommand("idnum", "d-independence number with a witness set");
    add_graph_input(idnum, o);
    idnum->add_option("-d", o.d, "Maximum degree inside the set")->check(CLI::NonNegativeNumber);
    auto* rho = app.add_subcommand("rho", "Spectral radius and smallest eigenvalue");
    add_graph_input(rho, o);
    auto* quot = app.add_subcommand("quotient", "Quotient matrix of a vertex partition");
    add_graph_input(quot, o);
    quot->add_option("-p,--partition", o.partition, "Parts as '0,1:2,3:...'")->required();
    quot->add_flag("--lenient", o.lenient, "Average row sums when the partition is not equitable");
    auto* free = app.add_subcommand("free", "Test freeness from a forbidden family");
    add_graph_input(free, o);
    free->add_option("-f,--family", o.family, "K:1,2,2 | L:5 | CP:4 | H:s,d | G6:<g6>,...")->required();
    auto* qgood = app.add_subcommand("qgood", "Partition into q parts with fewest internal edges");
    add_graph_input(qgood, o);
    qgood->add_option("-q", o.q, "Number of parts")->check(CLI::PositiveNumber);
    qgood->add_flag("--nonempty", o.nonempty, "Require every part to be non-empty");
    auto* bounds = app.add_subcommand("bounds", "Evaluate the dissociation number bounds");
    add_graph_input(bounds, o);
    bounds->add_option("--complement-d", o.complement_d, "d values for the complement bound")->delimiter(',');

    auto* search = app.add_subcommand("search", "Exhaustive extremal search");
    search->add_option("--mode", o.mode, "ex | ex_cc | emin | rhomin");
    search->add_option("-n", o.n, "Order")->required();
    search->add_option("-f,--family", o.family, "Forbidden family for ex modes");
    search->add_option("--tau", o.tau, "Dissociation number for min modes");
    search->add_option("--cap", o.cap, "Largest accepted n (0 keeps the default)");

    auto* ver = app.add_subcommand("verify", "Replay the registered finite checks");
    ver->add_option("theorem", o.theorem, "Registered id or 'all'")->required();
    ver->add_option("--max-n", o.max_n, "Largest order for exhaustive enumeration");
    ver->add_option("--n", o.only_n, "Only instances of this order");
    ver->add_option("--k", o.only_k, "Only instances with this k");
    ver->add_option("--m", o.only_m, "Only instances with this block size");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate isomorphism classes");
    enumerate->add_option("-n", o.n, "Order")->required();
    enumerate->add_flag("--connected", o.connected, "Connected graphs only");
    enumerate->add_option("--edge-min", o.edge_min, "Minimum size");
    enumerate->add_option("--edge-max", o.edge_max, "Maximum size (-1 for none)");
    enumerate->add_option("--shard", o.shard_index, "Shard index");
    enumerate->add_option("--shards", o.shard_count, "Shard count")->check(CLI::PositiveNumber);
    enumerate->add_option("--cap", o.cap, "Largest accepted n (0 keeps the default)");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Session session(o, out);
    try {
        if (*construct) return cmd_construct(session);
        if (*tau) return cmd_tau(session);
        if (*idnum) return cmd_idnum(session);
        if (*rho) return cmd_rho(session);
        if (*quot) return cmd_quotient(session);
        if (*free) return cmd_free(session);
        if (*qgood) return cmd_qgood(session);
        if (*bounds) return cmd_bounds(session);
        if (*search) return cmd_search(session);
        if (*ver) return cmd_verify(session);
        if (*enumerate) return cmd_enumerate(session, out);
    } catch (const MalformedInput& e) {
        err << "dissoc: malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "dissoc: cap exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "dissoc: invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "dissoc: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dissoc::cli
