#include "dissoc/canonical.hpp"

#include <array>
#include <string>

#include "dissoc/error.hpp"

namespace dissoc {
namespace {

using Columns = std::array<std::uint64_t, Graph::kMaxOrder>;

// Column j of the bit string read as a j-bit number, row 0 most significant.
Columns identity_columns(const Graph& g) {
    Columns cols{};
    for (int j = 1; j < g.order(); ++j) {
        std::uint64_t key = 0;
        for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(i, j) ? 1U : 0U);
        cols[j] = key;
    }
    return cols;
}

bool twins(const Graph& g, Vertex v, Vertex w) {
    const std::uint64_t bv = std::uint64_t{1} << v;
    const std::uint64_t bw = std::uint64_t{1} << w;
    return (g.row(v) & ~bw) == (g.row(w) & ~bv);
}

// Depth-first search over vertex orderings that keeps, at every position,
// only the vertices maximising the next column. Vertices that are twins of
// an already explored sibling are skipped: swapping them is an automorphism
// fixing everything placed so far.
class LabelSearch {
public:
    LabelSearch(const Graph& g, bool test_mode) : g_(g), n_(g.order()), test_mode_(test_mode) {
        if (test_mode_) {
            best_ = identity_columns(g);
            have_best_ = true;
        }
    }

    void run() {
        Columns keys{};
        search(0, 0, keys);
    }

    bool found_greater() const { return found_greater_; }
    const Columns& best_columns() const { return best_; }
    const std::array<Vertex, Graph::kMaxOrder>& best_order() const { return best_order_; }

private:
    int compare_prefix(int p) const {
        for (int j = 1; j < p; ++j) {
            if (cur_[j] != best_[j]) return cur_[j] < best_[j] ? -1 : 1;
        }
        return 0;
    }

    void search(int p, std::uint64_t placed, const Columns& keys) {
        if (found_greater_) return;
        if (p == n_) {
            if (!have_best_ || compare_prefix(n_) > 0) {
                best_ = cur_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        const std::uint64_t unplaced = VertexSet::full(n_).bits() & ~placed;
        std::uint64_t max_key = 0;
        for (Vertex v : VertexSet(unplaced)) max_key = std::max(max_key, keys[v]);

        if (have_best_ && p > 0) {
            const int cmp = compare_prefix(p);
            if (cmp < 0) return;
            if (cmp == 0) {
                if (max_key < best_[p]) return;
                if (max_key > best_[p] && test_mode_) {
                    found_greater_ = true;
                    return;
                }
            }
        }

        std::array<Vertex, Graph::kMaxOrder> tried{};
        int n_tried = 0;
        for (Vertex v : VertexSet(unplaced)) {
            if (keys[v] != max_key) continue;
            bool skip = false;
            for (int t = 0; t < n_tried && !skip; ++t) skip = twins(g_, v, tried[t]);
            if (skip) continue;
            tried[n_tried++] = v;

            order_[p] = v;
            cur_[p] = max_key;
            Columns next{};
            const std::uint64_t rest = unplaced & ~(std::uint64_t{1} << v);
            for (Vertex u : VertexSet(rest)) next[u] = (keys[u] << 1) | (g_.adjacent(v, u) ? 1U : 0U);
            search(p + 1, placed | (std::uint64_t{1} << v), next);
            if (found_greater_) return;
        }
    }

    const Graph& g_;
    int n_;
    bool test_mode_;
    bool have_best_ = false;
    bool found_greater_ = false;
    Columns cur_{};
    Columns best_{};
    std::array<Vertex, Graph::kMaxOrder> order_{};
    std::array<Vertex, Graph::kMaxOrder> best_order_{};
};

void check_cap(const Graph& g, int max_order) {
    if (g.order() > max_order) {
        throw CapExceeded("canonical labelling limited to " + std::to_string(max_order) +
                          " vertices, got " + std::to_string(g.order()));
    }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, int max_order) {
    check_cap(g, max_order);
    LabelSearch search(g, false);
    search.run();
    std::vector<Vertex> labeling(g.order());
    for (int pos = 0; pos < g.order(); ++pos) labeling[search.best_order()[pos]] = pos;
    return labeling;
}

CanonicalForm canonical_form(const Graph& g, int max_order) {
    check_cap(g, max_order);
    LabelSearch search(g, false);
    search.run();
    const Columns& cols = search.best_columns();
    CanonicalForm form;
    form.n = g.order();
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>((acc << 1) | ((cols[j] >> (j - 1 - i)) & 1U));
            if (++filled == 8) {
                form.bytes.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) form.bytes.push_back(static_cast<char>(acc << (8 - filled)));
    return form;
}

Graph canonical_graph(const Graph& g, int max_order) {
    return g.relabeled(canonical_labeling(g, max_order));
}

bool is_canonical(const Graph& g) {
    LabelSearch search(g, true);
    search.run();
    return !search.found_greater();
}

bool isomorphic(const Graph& a, const Graph& b, int max_order) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace dissoc
