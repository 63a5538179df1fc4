#include "dissoc/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "dissoc/error.hpp"

namespace dissoc {

Spectrum spectrum(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (Vertex j : g.neighbors(i)) a(i, j) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    Spectrum s;
    const auto& values = solver.eigenvalues();
    s.eigenvalues.assign(values.data(), values.data() + n);
    s.lambda_min = s.eigenvalues.front();
    s.rho = s.eigenvalues.back();
    Eigen::VectorXd x = solver.eigenvectors().col(n - 1);
    if (x.sum() < 0) x = -x;
    s.principal_vector.assign(x.data(), x.data() + n);
    s.residual = (a * x - s.rho * x).cwiseAbs().maxCoeff();
    return s;
}

double spectral_radius(const Graph& g) { return spectrum(g).rho; }

bool QuotientMatrix::is_integral() const {
    for (const auto& row : entries) {
        for (double v : row) {
            if (std::abs(v - std::round(v)) > kCompareTolerance) return false;
        }
    }
    return true;
}

void check_partition(const Graph& g, const VertexPartition& p) {
    VertexSet seen;
    for (VertexSet part : p) {
        if (part.empty()) throw InvalidArgument("partition has an empty part");
        if (!part.is_subset_of(g.vertices())) throw InvalidArgument("partition part has a vertex outside the graph");
        if (!(seen & part).empty()) throw InvalidArgument("partition parts overlap");
        seen |= part;
    }
    if (seen != g.vertices()) throw InvalidArgument("partition does not cover every vertex");
}

bool is_equitable(const Graph& g, const VertexPartition& p) {
    check_partition(g, p);
    for (VertexSet from : p) {
        for (VertexSet to : p) {
            const int first = g.degree_in(from.front(), to);
            for (Vertex v : from) {
                if (g.degree_in(v, to) != first) return false;
            }
        }
    }
    return true;
}

QuotientMatrix quotient(const Graph& g, const VertexPartition& p, bool lenient) {
    QuotientMatrix q;
    q.equitable = is_equitable(g, p);
    if (!q.equitable && !lenient) throw InvalidArgument("partition is not equitable");
    q.partition = p;
    const int k = static_cast<int>(p.size());
    q.entries.assign(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            long total = 0;
            for (Vertex v : p[i]) total += g.degree_in(v, p[j]);
            q.entries[i][j] = static_cast<double>(total) / p[i].size();
        }
    }
    return q;
}

std::vector<double> matrix_eigenvalues(const std::vector<std::vector<double>>& m) {
    const int k = static_cast<int>(m.size());
    Eigen::MatrixXd a(k, k);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(m[i].size()) != k) throw InvalidArgument("matrix is not square");
        for (int j = 0; j < k; ++j) a(i, j) = m[i][j];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    std::vector<double> out;
    for (int i = 0; i < k; ++i) out.push_back(solver.eigenvalues()[i].real());
    std::sort(out.begin(), out.end());
    return out;
}

double matrix_spectral_radius(const std::vector<std::vector<double>>& m) {
    return matrix_eigenvalues(m).back();
}

long double CharPoly::evaluate(long double x) const {
    long double acc = 0;
    for (std::int64_t c : coefficients) acc = acc * x + static_cast<long double>(c);
    return acc;
}

std::string CharPoly::to_string() const {
    std::ostringstream out;
    const int deg = degree();
    bool first = true;
    for (int i = 0; i <= deg; ++i) {
        const std::int64_t c = coefficients[i];
        const int power = deg - i;
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || power == 0) out << mag;
        if (power >= 1) out << "x";
        if (power >= 2) out << "^" << power;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CharPoly char_poly(const std::vector<std::vector<std::int64_t>>& m) {
    using Wide = __int128;
    const int k = static_cast<int>(m.size());
    if (k < 1 || k > 8) throw InvalidArgument("characteristic polynomial needs a 1x1 to 8x8 matrix");
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != k) throw InvalidArgument("matrix is not square");
    }
    // M_j = A M_{j-1} + c_{k-j+1} I, c_{k-j} = -tr(A M_j) / j.
    std::vector<Wide> coeff(k + 1, 0);
    coeff[k] = 1;
    std::vector<std::vector<Wide>> mk(k, std::vector<Wide>(k, 0));
    for (int j = 1; j <= k; ++j) {
        std::vector<std::vector<Wide>> next(k, std::vector<Wide>(k, 0));
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                Wide acc = 0;
                for (int t = 0; t < k; ++t) acc += static_cast<Wide>(m[r][t]) * mk[t][c];
                next[r][c] = acc;
            }
            next[r][r] += coeff[k - j + 1];
        }
        mk = std::move(next);
        Wide trace = 0;
        for (int r = 0; r < k; ++r) {
            for (int t = 0; t < k; ++t) trace += static_cast<Wide>(m[r][t]) * mk[t][r];
        }
        coeff[k - j] = -trace / j;
    }
    CharPoly p;
    for (int power = k; power >= 0; --power) p.coefficients.push_back(static_cast<std::int64_t>(coeff[power]));
    return p;
}

CharPoly char_poly(const QuotientMatrix& q) {
    if (!q.is_integral()) throw InvalidArgument("quotient matrix has non-integer entries");
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& row : q.entries) {
        std::vector<std::int64_t> r;
        for (double v : row) r.push_back(static_cast<std::int64_t>(std::llround(v)));
        m.push_back(r);
    }
    return char_poly(m);
}

long double evaluate_polynomial(std::span<const double> coefficients, long double x) {
    long double acc = 0;
    for (double c : coefficients) acc = acc * x + c;
    return acc;
}

double largest_root(std::span<const double> coefficients) {
    std::size_t first = 0;
    while (first < coefficients.size() && coefficients[first] == 0.0) ++first;
    std::vector<double> p(coefficients.begin() + first, coefficients.end());
    if (p.size() < 2) throw InvalidArgument("polynomial of degree < 1 has no root to find");
    const double lead = p.front();
    for (double& c : p) c /= lead;
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg == 1) return -p[1];

    // The largest root of a real-rooted p lies at or above the largest root
    // of p', and p increases from there on.
    std::vector<double> dp;
    for (int i = 0; i < deg; ++i) dp.push_back(p[i] * (deg - i));
    double lo = largest_root(dp);
    double bound = 0.0;
    for (int i = 1; i <= deg; ++i) bound = std::max(bound, std::abs(p[i]));
    double hi = std::max(lo, 1.0 + bound);
    const long double at_lo = evaluate_polynomial(p, lo);
    if (at_lo > 0) {
        const double scale = 1.0 + std::abs(lo);
        if (at_lo < 1e-9 * std::pow(scale, deg)) return lo;
        throw InvalidArgument("polynomial is not real-rooted above its critical points");
    }
    for (int it = 0; it < 400 && hi - lo > kRootTolerance * 1e-2 * (1.0 + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (evaluate_polynomial(p, mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double largest_root(const CharPoly& p) {
    std::vector<double> c(p.coefficients.begin(), p.coefficients.end());
    return largest_root(c);
}

double cp_cycle_rho_closed_form(double m) {
    if (m < 4) throw InvalidArgument("closed form needs m >= 4");
    return (m - 3.0 + std::sqrt((m - 1.0) * (m - 1.0) + 8.0)) / 2.0;
}

double cp_cycle_rho_bound(double n, double k) {
    if (k <= 0 || n <= k) throw InvalidArgument("bound needs n > k > 0");
    return n / k - 2.0 + 2.0 * k / (n - k);
}

double apex_linked_rho_closed_form(double n) { return (n - 4.0 + std::sqrt(n * n - 8.0 * n + 48.0)) / 4.0; }

}  // namespace dissoc
