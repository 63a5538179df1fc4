#include "dissoc/enumerate.hpp"

#include <string>
#include <thread>

#include "dissoc/canonical.hpp"
#include "dissoc/error.hpp"

namespace dissoc {
namespace {

// Orderly generation: a graph is kept iff its own labelling is canonical.
// Deleting the last vertex of a canonical graph leaves a canonical graph, so
// every class is reached exactly once by extending canonical parents.
class Generator {
public:
    Generator(int n, const EnumerationOptions& options, const std::function<void(const Graph&)>& visit)
        : n_(n), options_(options), visit_(visit) {
        split_level_ = n_ >= 3 ? n_ - 2 : n_;
        int remaining = 0;
        for (int p = n_ - 1; p >= 0; --p) {
            remaining_after_[p] = remaining;
            remaining += p;
        }
    }

    void run() {
        Graph root(1);
        if (!admissible(root, 1)) return;
        extend(root);
    }

private:
    // remaining_after_[p]: most edges still addable once p+1 vertices exist.
    bool admissible(const Graph& g, int edges) {
        const int p = g.order();
        if (options_.edge_max >= 0 && edges > options_.edge_max) return false;
        if (edges + remaining_after_[p - 1] < options_.edge_min) return false;
        if (options_.hereditary && !options_.hereditary(g)) return false;
        if (p == split_level_ && options_.shard_count > 1) {
            const long index = split_counter_++;
            if (index % options_.shard_count != options_.shard_index) return false;
        }
        return true;
    }

    void extend(const Graph& g) {
        const int p = g.order();
        if (p == n_) {
            if (!options_.connected_only || g.connected()) visit_(g);
            return;
        }
        const int edges = g.size();
        const std::uint64_t masks = std::uint64_t{1} << p;
        for (std::uint64_t s = 0; s < masks; ++s) {
            Graph child = g.with_vertex(VertexSet(s));
            if (!is_canonical(child)) continue;
            if (!admissible(child, edges + std::popcount(s))) continue;
            extend(child);
        }
    }

    int n_;
    const EnumerationOptions& options_;
    const std::function<void(const Graph&)>& visit_;
    int split_level_ = 0;
    long split_counter_ = 0;
    std::array<int, Graph::kMaxOrder> remaining_after_{};
};

void check_options(int n, const EnumerationOptions& options) {
    if (options.cap > kHardEnumerationCap) {
        throw CapExceeded("enumeration cap may not exceed " + std::to_string(kHardEnumerationCap));
    }
    if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
    if (n > options.cap) {
        throw CapExceeded("enumeration of order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(options.cap));
    }
    if (options.shard_count < 1 || options.shard_index < 0 ||
        options.shard_index >= options.shard_count) {
        throw InvalidArgument("invalid shard selection");
    }
}

}  // namespace

void enumerate_graphs(int n, const EnumerationOptions& options,
                      const std::function<void(const Graph&)>& visit) {
    check_options(n, options);
    Generator(n, options, visit).run();
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options) {
    std::vector<Graph> out;
    enumerate_graphs(n, options, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap) {
    EnumerationOptions options;
    options.connected_only = connected_only;
    options.cap = cap;
    return enumerate_graphs(n, options);
}

void enumerate_graphs_parallel(int n, EnumerationOptions options, int jobs,
                               const std::function<void(const Graph&)>& visit) {
    check_options(n, options);
    if (jobs <= 1) {
        Generator(n, options, visit).run();
        return;
    }
    options.shard_count = jobs;
    std::vector<std::thread> workers;
    std::vector<EnumerationOptions> shards(jobs, options);
    for (int j = 0; j < jobs; ++j) {
        shards[j].shard_index = j;
        workers.emplace_back([&, j] { Generator(n, shards[j], visit).run(); });
    }
    for (auto& w : workers) w.join();
}

bool is_forest(const Graph& g) {
    return g.size() + static_cast<int>(g.components().size()) == g.order();
}

}  // namespace dissoc
