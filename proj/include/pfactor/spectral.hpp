#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pfactor/graph.hpp"
#include "pfactor/polynomial.hpp"

namespace pfactor {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 100000;

enum class RadiusMethod { PowerIteration, Quotient, Exact };
std::string_view to_string(RadiusMethod m);

/// Interval [lo, hi] holding the spectral radius.
struct SpectralEnclosure {
    double lo = 0.0;
    double hi = 0.0;
    RadiusMethod method = RadiusMethod::PowerIteration;
    std::size_t iterations = 0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

/// Eigenvalues sorted in descending order.
struct Spectrum {
    std::vector<double> values;
    double tol = kDefaultTol;
    std::size_t sweeps = 0;
};

/// k x k quotient matrix of a vertex partition, b_ij = average number of
/// neighbours in class j over the vertices of class i.
struct QuotientMatrix {
    std::size_t k = 0;
    std::vector<double> entries;  // row-major
    PartitionClasses classes;
    bool equitable = false;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
};

/// Collatz-Wielandt enclosure of rho(G). Power iteration runs on A + I from
/// the all-ones vector per connected component; the result is the maximum
/// over components. Stops at width <= tol or after max_iterations, in which
/// case the achieved width is reported. Throws std::domain_error for n = 0.
SpectralEnclosure spectral_radius(const Graph& g, double tol = kDefaultTol,
                                  std::size_t max_iterations = kDefaultMaxIterations);
SpectralEnclosure spectral_radius(const AdjacencyList& g, double tol = kDefaultTol,
                                  std::size_t max_iterations = kDefaultMaxIterations);

/// Cyclic Jacobi eigenvalues of the adjacency matrix.
Spectrum full_spectrum(const Graph& g, double tol = kDefaultTol);
/// Cyclic Jacobi on a dense symmetric matrix (row-major, n x n).
Spectrum symmetric_eigenvalues(std::vector<double> matrix, std::size_t n, double tol = kDefaultTol);

enum class Ordering { Less, Equal, Greater };
std::string_view to_string(Ordering o);

enum class DecisionMethod { Float, Exact };
std::string_view to_string(DecisionMethod m);

struct RadiusComparison {
    Ordering order = Ordering::Equal;
    DecisionMethod method = DecisionMethod::Float;
};

/// Precomputed side of a radius comparison, reused across many candidates.
class RadiusReference {
public:
    explicit RadiusReference(const Graph& reference, double tol = kDefaultTol);

    /// Orders rho(g) against rho(reference). Float enclosures decide when they
    /// are disjoint; overlap always escalates to exact Sturm comparison.
    RadiusComparison compare(const Graph& g) const;

    const Graph& graph() const { return graph_; }
    const SpectralEnclosure& enclosure() const { return enclosure_; }
    const IntPolynomial& polynomial() const;

private:
    Graph graph_;
    double tol_;
    SpectralEnclosure enclosure_;
    mutable std::optional<IntPolynomial> poly_;
};

RadiusComparison compare_radius(const Graph& g, const Graph& h, double tol = kDefaultTol);

/// Exact ordering of the largest real roots of two non-zero polynomials whose
/// real roots all lie in (-bound, bound].
Ordering compare_largest_roots(const IntPolynomial& p, const IntPolynomial& q, const Rational& bound);

/// sqrt(2m - n + 1); throws std::domain_error unless g is connected.
double hong_bound(const Graph& g);

/// Throws std::invalid_argument when the classes do not partition V(G).
QuotientMatrix quotient_matrix(const Graph& g, const PartitionClasses& classes);
/// Largest eigenvalue of an equitable quotient matrix, by Collatz-Wielandt power
/// iteration on Q + I. Throws std::invalid_argument if Q is not equitable.
SpectralEnclosure quotient_radius(const QuotientMatrix& q, double tol = kDefaultTol);
double quotient_lambda1(const QuotientMatrix& q, double tol = kDefaultTol);

/// Quotient matrix of L_{n,s} for the classes {K_s, 3K_1, K_{n-s-3}}, in closed form.
IntMatrix l_family_quotient(long long n, long long s);

struct LFamilyPolyCheck {
    long long n = 0;
    long long s = 0;
    BigInt f_at_n_minus_2;
    BigInt f_at_n_minus_4;
    BigInt expected_n_minus_2;  // 2n^2 - 6n - 3s^2 - 6s + 4
    BigInt expected_n_minus_4;  // -3s^2
    long long trace = 0;
    long long expected_trace = 0;  // n - 5, the diagonal sum of the quotient

    bool holds() const {
        return f_at_n_minus_2 == expected_n_minus_2 && f_at_n_minus_4 == expected_n_minus_4 &&
               trace == expected_trace;
    }
};

/// Characteristic polynomial of l_family_quotient(n, s) evaluated at n-2 and
/// n-4, next to the closed forms. Requires s >= 1 and n >= 4s + 1.
LFamilyPolyCheck lemma6_poly_values(long long n, long long s);

/// Piecewise threshold rho(k, b) for (1, b)-parity factors in k-regular graphs;
/// the case split uses the parities of k and ceil(k / b).
/// Requires k >= 3, b odd, 1 <= b < k.
double kopr_threshold(long long k, long long b);

/// max{2a(a+1) + b - 3, (2a+2)(a+1)}; requires 1 <= a <= b, a = b (mod 2).
long long theorem_n_bound(long long a, long long b);

}  // namespace pfactor
