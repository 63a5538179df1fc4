#include "dissoc/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "dissoc/error.hpp"
#include "dissoc/solvers.hpp"
#include "dissoc/spectral.hpp"

namespace dissoc {

BoundResult hoffman_type_upper(const Graph& g) {
    BoundResult r;
    r.name = "hoffman_type_upper";
    if (!g.is_regular()) {
        r.hypothesis_note = "graph is not regular";
        return r;
    }
    const int k = g.max_degree();
    const double lambda = spectrum(g).lambda_min;
    if (k == 0) {
        r.hypothesis_note = "graph has no edges";
        return r;
    }
    r.applicable = true;
    r.value = g.order() * (1.0 - lambda) / (k - lambda);
    r.hypothesis_note = std::to_string(k) + "-regular, lambda_min = " + std::to_string(lambda);
    return r;
}

long probabilistic_lower_exact(const Graph& g) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    if (g.size() == 0) throw InvalidArgument("probabilistic bound needs at least one edge");
    const int delta = g.max_degree();
    cpp_rational sum = 0;
    for (auto [u, v] : g.edges()) sum += cpp_rational(1, (g.degree(u) + g.degree(v)) * delta - 1);
    const cpp_int num = boost::multiprecision::numerator(sum);
    const cpp_int den = boost::multiprecision::denominator(sum);
    const cpp_int ceil = (num + den - 1) / den;
    return 2 * ceil.convert_to<long>();
}

BoundResult probabilistic_lower(const Graph& g) {
    BoundResult r;
    r.name = "probabilistic_lower";
    if (g.size() == 0) throw InvalidArgument("probabilistic bound needs at least one edge");
    if (!g.connected()) {
        r.hypothesis_note = "graph is not connected";
        return r;
    }
    r.applicable = true;
    r.value = static_cast<double>(probabilistic_lower_exact(g));
    r.hypothesis_note = "connected, Delta = " + std::to_string(g.max_degree());
    return r;
}

BoundResult complement_free_upper(const Graph& g, int d) {
    BoundResult r;
    r.name = "complement_free_upper";
    std::vector<int> sizes;
    std::string pattern;
    if (d % 2 == 0) {
        if (d <= 2) throw InvalidArgument("complement bound needs even d > 2");
        sizes = cocktail_sizes(d / 2);
        pattern = "CP_" + std::to_string(d);
    } else {
        if (d <= 3) throw InvalidArgument("complement bound needs odd d > 3");
        sizes = odd_cocktail_sizes((d - 1) / 2);
        pattern = "L_" + std::to_string(d);
    }
    if (contains_complete_multipartite(complement(g), sizes)) {
        r.hypothesis_note = "complement contains " + pattern;
        return r;
    }
    r.applicable = true;
    r.value = d - 1;
    r.hypothesis_note = "complement is " + pattern + "-free";
    return r;
}

std::vector<int> relaxation_part_sizes(int s, int d) {
    if (d < 0 || s <= d) throw InvalidArgument("need s > d >= 0");
    const int parts = (s + 1 + d) / (d + 1);
    int a = (s + 1) % (d + 1);
    if (a == 0) a = d + 1;
    std::vector<int> sizes(parts, d + 1);
    sizes[0] = a;
    return sizes;
}

SpectralLowerDetail spectral_lower_from_excc(int n, int s, int d, const SearchOptions& options) {
    SpectralLowerDetail out;
    out.multipartite_sizes = relaxation_part_sizes(s, d);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    out.ex_cc_h = ex_bruteforce(n, FamilySpec::h_family(s, d), true, options).value;
    out.ex_cc_multipartite =
        ex_bruteforce(n, FamilySpec::complete_multipartite(out.multipartite_sizes), true, options).value;
    out.bound_h = 2.0 * (pairs - out.ex_cc_h) / n;
    out.bound_multipartite = 2.0 * (pairs - out.ex_cc_multipartite) / n;
    out.result.name = "spectral_lower_from_excc";
    out.result.applicable = true;
    out.result.value = std::max(out.bound_h, out.bound_multipartite);
    out.result.hypothesis_note = "connected graphs on " + std::to_string(n) + " vertices with i_" +
                                 std::to_string(d) + " = " + std::to_string(s);
    return out;
}

}  // namespace dissoc
