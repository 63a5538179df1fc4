#pragma once

// Brute-force reference implementations used as independent oracles. None
// of these call into the library beyond reading adjacency from a Graph.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const dissoc::Graph& g) {
    const int n = g.order();
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
    }
    return a;
}

inline dissoc::Graph from_matrix(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    dissoc::Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j]) g.add_edge(i, j);
        }
    }
    return g;
}

inline dissoc::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    dissoc::Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) g.add_edge(i, j);
        }
    }
    return g;
}

inline dissoc::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    dissoc::Graph g = random_graph(n, p, rng);
    // A random spanning tree on top keeps the result connected.
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

/// graph6 written directly from the format description.
inline std::string graph6(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(a[i][j]);
    }
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

/// Smallest upper-triangle bit string over all vertex permutations.
inline std::vector<int> canonical_string(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) s.push_back(a[perm[i]][perm[j]]);
        }
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
    return a.size() == b.size() && canonical_string(a) == canonical_string(b);
}

inline int max_degree_within(const Matrix& a, std::uint64_t mask) {
    int best = 0;
    const int n = static_cast<int>(a.size());
    for (int v = 0; v < n; ++v) {
        if (!((mask >> v) & 1)) continue;
        int d = 0;
        for (int u = 0; u < n; ++u) d += ((mask >> u) & 1) ? a[v][u] : 0;
        best = std::max(best, d);
    }
    return best;
}

/// Largest vertex subset inducing maximum degree at most d, by subsets.
inline int d_independence(const Matrix& a, int d) {
    const int n = static_cast<int>(a.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size > best && max_degree_within(a, mask) <= d) best = size;
    }
    return best;
}

inline int edges(const Matrix& a) {
    int e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) e += a[i][j];
    }
    return e;
}

inline bool connected(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return true;
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (a[v][u] && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

inline Matrix complement(const Matrix& a) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = (i != j && !a[i][j]) ? 1 : 0;
    }
    return c;
}

/// True when some injective assignment of the parts (sizes) to vertices
/// has every cross pair adjacent. Tries all colourings of n vertices with
/// parts + 1 colours, the extra colour meaning unused.
inline bool contains_complete_multipartite(const Matrix& a, const std::vector<int>& sizes) {
    const int n = static_cast<int>(a.size());
    const int parts = static_cast<int>(sizes.size());
    std::vector<int> colour(n, 0);
    while (true) {
        std::vector<int> count(parts + 1, 0);
        for (int c : colour) ++count[c];
        bool sizes_ok = true;
        for (int p = 0; p < parts; ++p) sizes_ok = sizes_ok && count[p + 1] == sizes[p];
        if (sizes_ok) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                for (int j = i + 1; j < n && ok; ++j) {
                    if (colour[i] && colour[j] && colour[i] != colour[j] && !a[i][j]) ok = false;
                }
            }
            if (ok) return true;
        }
        int pos = 0;
        while (pos < n && ++colour[pos] > parts) colour[pos++] = 0;
        if (pos == n) return false;
    }
}

/// Largest matching by exhaustive recursion.
inline int max_matching(const Matrix& a, std::uint64_t used = 0) {
    const int n = static_cast<int>(a.size());
    int v = 0;
    while (v < n && ((used >> v) & 1)) ++v;
    if (v >= n) return 0;
    int best = max_matching(a, used | (std::uint64_t{1} << v));
    for (int u = v + 1; u < n; ++u) {
        if (a[v][u] && !((used >> u) & 1)) {
            best = std::max(best, 1 + max_matching(a, used | (std::uint64_t{1} << v) | (std::uint64_t{1} << u)));
        }
    }
    return best;
}

/// Spectral radius of a connected graph by shifted power iteration.
inline double power_iteration_rho(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<double> x(n, 1.0), y(n);
    for (int it = 0; it < 200000; ++it) {
        for (int i = 0; i < n; ++i) {
            y[i] = x[i];
            for (int j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] /= norm;
            diff = std::max(diff, std::abs(y[i] - x[i]));
        }
        x = y;
        if (diff < 1e-14) break;
    }
    double num = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) num += x[i] * a[i][j] * x[j];
    }
    return num;
}

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier, leading
/// coefficient first.
inline std::vector<long long> char_poly(const std::vector<std::vector<long long>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    std::vector<std::vector<long long>> mk(n, std::vector<long long>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // mk = m * (mk_prev + c[k-1] I)
        std::vector<std::vector<long long>> shifted = mk;
        for (int i = 0; i < n; ++i) shifted[i][i] += c[k - 1];
        std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) {
                for (int j = 0; j < n; ++j) next[i][j] += m[i][l] * shifted[l][j];
            }
        }
        long long trace = 0;
        for (int i = 0; i < n; ++i) trace += next[i][i];
        c[k] = -trace / k;
        mk = next;
    }
    return c;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
