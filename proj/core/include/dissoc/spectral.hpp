#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// Tolerances used by the verification code.
inline constexpr double kCompareTolerance = 1e-9;
inline constexpr double kStrictMargin = 1e-7;
inline constexpr double kRootTolerance = 1e-12;

struct Spectrum {
    /// Ascending.
    std::vector<double> eigenvalues;
    double rho = 0.0;
    double lambda_min = 0.0;
    /// Unit eigenvector for rho with non-negative coordinate sum.
    std::vector<double> principal_vector;
    /// max_i |(A x - rho x)_i| for the principal vector.
    double residual = 0.0;
};

/// Full adjacency spectrum (Householder tridiagonalisation + implicit QR).
Spectrum spectrum(const Graph& g);
double spectral_radius(const Graph& g);

struct QuotientMatrix {
    std::vector<std::vector<double>> entries;
    VertexPartition partition;
    bool equitable = false;

    int size() const { return static_cast<int>(entries.size()); }
    bool is_integral() const;
};

/// Throws InvalidArgument unless p is a partition of V(g) into nonempty parts.
void check_partition(const Graph& g, const VertexPartition& p);
bool is_equitable(const Graph& g, const VertexPartition& p);
/// Strict mode throws InvalidArgument for non-equitable partitions; lenient
/// mode returns the matrix of average neighbour counts.
QuotientMatrix quotient(const Graph& g, const VertexPartition& p, bool lenient = false);
/// Eigenvalues of a (possibly non-symmetric) square matrix with real
/// spectrum, ascending.
std::vector<double> matrix_eigenvalues(const std::vector<std::vector<double>>& m);
double matrix_spectral_radius(const std::vector<std::vector<double>>& m);

/// Monic integer polynomial, coefficients[0] = 1 is the leading one.
struct CharPoly {
    std::vector<std::int64_t> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    long double evaluate(long double x) const;
    std::string to_string() const;
    bool operator==(const CharPoly&) const = default;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence in 128-bit integers.
CharPoly char_poly(const std::vector<std::vector<std::int64_t>>& m);
/// Same, for a quotient whose entries are integers; throws InvalidArgument
/// otherwise or when the matrix exceeds 8x8.
CharPoly char_poly(const QuotientMatrix& q);

/// Largest real root of a real-rooted polynomial given with the leading
/// coefficient first.
double largest_root(std::span<const double> coefficients);
double largest_root(const CharPoly& p);
/// Horner evaluation, leading coefficient first.
long double evaluate_polynomial(std::span<const double> coefficients, long double x);

/// (m - 3 + sqrt((m-1)^2 + 8)) / 2, the spectral radius of the aligned
/// CP-cycle of CP_m blocks; m >= 4.
double cp_cycle_rho_closed_form(double m);
/// n/k - 2 + 2k/(n-k).
double cp_cycle_rho_bound(double n, double k);
/// (n - 4 + sqrt(n^2 - 8n + 48)) / 4: two L_{n/2} blocks linked at their
/// degree n/2 - 1 vertices.
double apex_linked_rho_closed_form(double n);

}  // namespace dissoc
