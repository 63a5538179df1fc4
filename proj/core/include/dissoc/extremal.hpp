#pragma once

#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

inline constexpr int kEdgeSearchCap = 9;
inline constexpr int kSpectralSearchCap = 8;

enum class FamilyKind { CompleteMultipartite, OddCocktail, Cocktail, HFamily, ExplicitSet };

/// A forbidden family. HFamily(s, d) is H_{s+1,d}: a graph avoids it exactly
/// when its complement has d-independence number at most s.
struct FamilySpec {
    FamilyKind kind = FamilyKind::CompleteMultipartite;
    /// Ascending part sizes (CompleteMultipartite only).
    std::vector<int> sizes;
    int d = 0;
    int s = 0;
    std::vector<Graph> graphs;

    static FamilySpec complete_multipartite(std::vector<int> sizes);
    static FamilySpec odd_cocktail(int d);
    static FamilySpec cocktail(int d);
    static FamilySpec h_family(int s, int d);
    static FamilySpec explicit_set(std::vector<Graph> graphs);
    /// Parses "K:1,2,2", "L:5", "CP:4", "H:4,1" or "G6:<g6>,<g6>".
    static FamilySpec parse(const std::string& text);

    bool is_free(const Graph& g) const;
    std::string describe() const;
};

enum class SearchMode { Ex, ExCc, Emin, RhoMin };
std::string mode_name(SearchMode mode);

struct SearchOptions {
    /// Largest n accepted; the default depends on the search.
    int cap = 0;
    int jobs = 1;
};

struct ExtremalResult {
    int n = 0;
    SearchMode mode = SearchMode::Ex;
    FamilySpec family;
    int tau = 0;
    /// Edge count for ex, ex_cc and emin; edge count of the minimizers for rhomin.
    long value = 0;
    /// Minimum spectral radius (rhomin only).
    double rho = 0.0;
    /// Canonically labelled, sorted by graph6.
    std::vector<Graph> witnesses;
    std::vector<double> witness_rho;
    /// Several classes within the tie margin of the minimum (rhomin only).
    bool tie = false;
    long examined = 0;
};

/// ex(n, F), or ex_cc(n, F) with connected_complement, over all
/// isomorphism classes; witnesses are all extremal classes.
ExtremalResult ex_bruteforce(int n, const FamilySpec& family, bool connected_complement,
                             const SearchOptions& options = {});

/// floor(n^2/4 + n/2), minus one when n = 2 mod 4; n >= 4.
int ex_L5_closed_form(int n);

/// Minimum size of a connected n-vertex graph with dissociation number tau.
ExtremalResult emin_search(int n, int tau, const SearchOptions& options = {});
/// Minimum spectral radius among connected n-vertex graphs with
/// dissociation number tau; classes within kStrictMargin are co-minimizers.
ExtremalResult rhomin_search(int n, int tau, const SearchOptions& options = {});

/// Largest edge count of an a x b bipartite host (rows A, columns B) with no
/// s rows sharing t common columns.
int zarankiewicz_bipartite(int a, int b, int s, int t);
/// (t-1)^{1/s} (a+b)^{2-1/s}.
double zarankiewicz_lemma_bound(int a, int b, int s, int t);
/// ((t-1)^{1/s} / 2) n^{2-1/s}; needs 2 <= s <= t.
double kst_bound(int n, int s, int t);

/// Cross pairs between the parts, plus ex(n_1, K_2(r1, r2)) and
/// ex(n_i, K_2(1, r2)) for the other parts, each by brute force.
long predicted_join_edges(const std::vector<int>& part_sizes, int r1, int r2,
                          const SearchOptions& options = {});

}  // namespace dissoc
