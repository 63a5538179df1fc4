#pragma once

#include <string>

#include "dissoc/extremal.hpp"
#include "dissoc/graph.hpp"

namespace dissoc {

struct BoundResult {
    std::string name;
    double value = 0.0;
    /// value is meaningful only when the hypothesis holds.
    bool applicable = false;
    std::string hypothesis_note;
};

/// For k-regular g: tau(g) <= n (1 - lambda_min) / (k - lambda_min).
BoundResult hoffman_type_upper(const Graph& g);

/// For connected g with an edge:
/// tau(g) >= 2 ceil(sum over edges uv of 1 / ((d(u) + d(v)) Delta - 1)),
/// with the sum evaluated in exact rational arithmetic.
BoundResult probabilistic_lower(const Graph& g);
/// The exact integer 2 ceil(...) of probabilistic_lower.
long probabilistic_lower_exact(const Graph& g);

/// tau(g) <= d - 1 when complement(g) avoids CP_d (even d > 2) or L_d
/// (odd d > 3).
BoundResult complement_free_upper(const Graph& g, int d);

/// Lower bounds on rho over connected n-vertex graphs with i_d = s:
/// 2 (C(n,2) - ex_cc(n, F)) / n for F = H_{s+1,d} and for its complete
/// multipartite relaxation; value is the larger one.
struct SpectralLowerDetail {
    BoundResult result;
    long ex_cc_h = 0;
    long ex_cc_multipartite = 0;
    double bound_h = 0.0;
    double bound_multipartite = 0.0;
    std::vector<int> multipartite_sizes;
};
SpectralLowerDetail spectral_lower_from_excc(int n, int s, int d, const SearchOptions& options = {});

/// Part sizes {a, d+1, ..., d+1} with ceil((s+1)/(d+1)) parts and
/// a = s+1 mod (d+1) taken in [1, d+1].
std::vector<int> relaxation_part_sizes(int s, int d);

}  // namespace dissoc
