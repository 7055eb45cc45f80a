#include "pfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace pfactor {

std::string_view to_string(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::PowerIteration: return "power-iteration";
        case RadiusMethod::Quotient: return "quotient";
        case RadiusMethod::Exact: return "exact";
    }
    return "unknown";
}

std::string_view to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    return "unknown";
}

std::string_view to_string(DecisionMethod m) { return m == DecisionMethod::Float ? "float" : "exact"; }

namespace {

// Collatz-Wielandt power iteration on A + I restricted to one component.
// `verts` is any iterable of global vertex ids, `for_neighbors(v, f)` calls
// f(u) for each neighbour u. `stop(enclosure)` may end the run early.
template <class Verts, class Neighbors, class Vec, class Stop>
SpectralEnclosure iterate_component(const Verts& verts, std::size_t size, Neighbors&& for_neighbors, Vec& x, Vec& y,
                                    double tol, std::size_t max_iterations, Stop&& stop) {
    SpectralEnclosure enc;
    if (size <= 1) return enc;  // isolated vertex: rho = 0
    for (std::size_t v : verts) x[v] = 1.0;
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double top = 0.0;
        for (std::size_t v : verts) {
            double sum = x[v];
            for_neighbors(v, [&](std::size_t u) { sum += x[u]; });
            y[v] = sum;
            const double ratio = sum / x[v];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            top = std::max(top, sum);
        }
        enc.lo = lo - 1.0;
        enc.hi = hi - 1.0;
        enc.iterations = it;
        if (enc.hi - enc.lo <= tol || stop(enc)) return enc;
        for (std::size_t v : verts) x[v] = y[v] / top;
    }
    return enc;
}

struct NeverStop {
    bool operator()(const SpectralEnclosure&) const { return false; }
};

SpectralEnclosure merge_max(const SpectralEnclosure& a, const SpectralEnclosure& b) {
    SpectralEnclosure out;
    out.lo = std::max(a.lo, b.lo);
    out.hi = std::max(a.hi, b.hi);
    out.iterations = std::max(a.iterations, b.iterations);
    return out;
}

// Rounding slack applied before trusting a float separation.
double float_pad(const SpectralEnclosure& e) { return 1e-12 * (1.0 + std::abs(e.hi)); }

}  // namespace

SpectralEnclosure spectral_radius(const Graph& g, double tol, std::size_t max_iterations) {
    if (g.order() == 0) throw std::domain_error("spectral radius of the empty graph");
    std::array<double, kMaxVertices> x{};
    std::array<double, kMaxVertices> y{};
    SpectralEnclosure result;
    auto neighbors = [&g](std::size_t v, auto&& f) {
        for (std::size_t u : g.neighbors(v)) f(u);
    };
    for (const VertexSet& comp : components(g))
        result = merge_max(result, iterate_component(comp, comp.size(), neighbors, x, y, tol, max_iterations, NeverStop{}));
    return result;
}

SpectralEnclosure spectral_radius(const AdjacencyList& g, double tol, std::size_t max_iterations) {
    const std::size_t n = g.order();
    if (n == 0) throw std::domain_error("spectral radius of the empty graph");
    std::vector<double> x(n);
    std::vector<double> y(n);
    std::vector<int> comp_of(n, -1);
    SpectralEnclosure result;
    auto neighbors = [&g](std::size_t v, auto&& f) {
        for (std::uint32_t u : g.neighbors(v)) f(u);
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (comp_of[root] >= 0) continue;
        std::vector<std::size_t> verts{root};
        comp_of[root] = static_cast<int>(root);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::uint32_t u : g.neighbors(verts[i]))
                if (comp_of[u] < 0) {
                    comp_of[u] = static_cast<int>(root);
                    verts.push_back(u);
                }
        std::sort(verts.begin(), verts.end());
        result = merge_max(result, iterate_component(verts, verts.size(), neighbors, x, y, tol, max_iterations, NeverStop{}));
    }
    return result;
}

Spectrum symmetric_eigenvalues(std::vector<double> a, std::size_t n, double tol) {
    if (a.size() != n * n) throw std::invalid_argument("matrix size mismatch");
    Spectrum out;
    out.tol = tol;
    auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    constexpr std::size_t kMaxSweeps = 100;
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) <= tol) break;
        out.sweeps = sweep + 1;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = at(i, i);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Spectrum full_spectrum(const Graph& g, double tol) {
    const std::size_t n = g.order();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : g.neighbors(u)) a[u * n + v] = 1.0;
    return symmetric_eigenvalues(std::move(a), n, tol);
}

Ordering compare_largest_roots(const IntPolynomial& p, const IntPolynomial& q, const Rational& bound) {
    LargestRootBracket bp(p, -bound, bound);
    LargestRootBracket bq(q, -bound, bound);
    const IntPolynomial common = poly_gcd(p, q);
    bool equality_ruled_out = common.degree() < 1;
    while (true) {
        if (bp.hi() <= bq.lo()) return Ordering::Less;
        if (bq.hi() <= bp.lo()) return Ordering::Greater;
        if (!equality_ruled_out && bp.isolated() && bq.isolated()) {
            // Each bracket now holds exactly one root of its polynomial, so a
            // common root inside both is the largest root of each.
            const Rational lo = std::max(bp.lo(), bq.lo());
            const Rational hi = std::min(bp.hi(), bq.hi());
            if (SturmChain(common).count_in(lo, hi) > 0) return Ordering::Equal;
            equality_ruled_out = true;
        }
        if (bp.width() >= bq.width())
            bp.bisect();
        else
            bq.bisect();
    }
}

RadiusReference::RadiusReference(const Graph& reference, double tol)
    : graph_(reference), tol_(tol), enclosure_(spectral_radius(reference, tol)) {}

const IntPolynomial& RadiusReference::polynomial() const {
    if (!poly_) poly_ = char_poly_exact(graph_);
    return *poly_;
}

RadiusComparison RadiusReference::compare(const Graph& g) const {
    if (g.order() == 0) throw std::domain_error("radius comparison with the empty graph");
    const double ref_lo = enclosure_.lo - float_pad(enclosure_);
    const double ref_hi = enclosure_.hi + float_pad(enclosure_);

    std::array<double, kMaxVertices> x{};
    std::array<double, kMaxVertices> y{};
    auto neighbors = [&g](std::size_t v, auto&& f) {
        for (std::size_t u : g.neighbors(v)) f(u);
    };
    auto above = [&](const SpectralEnclosure& e) { return e.lo - float_pad(e) > ref_hi; };
    auto below = [&](const SpectralEnclosure& e) { return e.hi + float_pad(e) < ref_lo; };

    bool overlap = false;
    for (const VertexSet& comp : components(g)) {
        const SpectralEnclosure e = iterate_component(comp, comp.size(), neighbors, x, y, tol_, kDefaultMaxIterations,
                                                      [&](const SpectralEnclosure& c) { return above(c) || below(c); });
        if (above(e)) return {Ordering::Greater, DecisionMethod::Float};
        if (!below(e)) overlap = true;
    }
    if (!overlap) return {Ordering::Less, DecisionMethod::Float};

    const IntPolynomial pg = char_poly_exact(g);
    if (pg == polynomial()) return {Ordering::Equal, DecisionMethod::Exact};
    const Rational bound(static_cast<long long>(std::max(g.order(), graph_.order())));
    return {compare_largest_roots(pg, polynomial(), bound), DecisionMethod::Exact};
}

RadiusComparison compare_radius(const Graph& g, const Graph& h, double tol) {
    if (h.order() == 0) throw std::domain_error("radius comparison with the empty graph");
    return RadiusReference(h, tol).compare(g);
}

double hong_bound(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw std::domain_error("Hong's bound requires a connected graph");
    const double m = static_cast<double>(g.edge_count());
    const double n = static_cast<double>(g.order());
    return std::sqrt(2.0 * m - n + 1.0);
}

QuotientMatrix quotient_matrix(const Graph& g, const PartitionClasses& classes) {
    validate_partition(g, classes);
    QuotientMatrix q;
    q.k = classes.size();
    q.classes = classes;
    q.entries.assign(q.k * q.k, 0.0);
    q.equitable = true;
    for (std::size_t i = 0; i < q.k; ++i) {
        for (std::size_t j = 0; j < q.k; ++j) {
            std::size_t total = 0;
            std::size_t first = 0;
            bool seen = false;
            for (std::size_t v : classes[i]) {
                const std::size_t c = (g.neighbors(v) & classes[j]).size();
                total += c;
                if (!seen) {
                    first = c;
                    seen = true;
                } else if (c != first) {
                    q.equitable = false;
                }
            }
            q.entries[i * q.k + j] = static_cast<double>(total) / static_cast<double>(classes[i].size());
        }
    }
    return q;
}

SpectralEnclosure quotient_radius(const QuotientMatrix& q, double tol) {
    if (!q.equitable) throw std::invalid_argument("quotient_radius requires an equitable partition");
    const std::size_t k = q.k;
    std::vector<double> x(k, 1.0);
    std::vector<double> y(k);
    SpectralEnclosure enc;
    enc.method = RadiusMethod::Quotient;
    for (std::size_t it = 1; it <= kDefaultMaxIterations; ++it) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double top = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double sum = x[i];
            for (std::size_t j = 0; j < k; ++j) sum += q(i, j) * x[j];
            y[i] = sum;
            lo = std::min(lo, sum / x[i]);
            hi = std::max(hi, sum / x[i]);
            top = std::max(top, sum);
        }
        enc.lo = lo - 1.0;
        enc.hi = hi - 1.0;
        enc.iterations = it;
        if (enc.width() <= tol) break;
        for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / top;
    }
    return enc;
}

double quotient_lambda1(const QuotientMatrix& q, double tol) { return quotient_radius(q, tol).midpoint(); }

IntMatrix l_family_quotient(long long n, long long s) {
    return {{s - 1, 3, n - s - 3}, {s, 0, 0}, {s, 0, n - s - 4}};
}

LFamilyPolyCheck lemma6_poly_values(long long n, long long s) {
    if (s < 1 || n < 4 * s + 1) throw std::invalid_argument("lemma6_poly_values requires s >= 1 and n >= 4s + 1");
    const IntMatrix b = l_family_quotient(n, s);
    const IntPolynomial f = char_poly_exact(b);
    LFamilyPolyCheck out;
    out.n = n;
    out.s = s;
    out.f_at_n_minus_2 = f.evaluate(BigInt(n - 2));
    out.f_at_n_minus_4 = f.evaluate(BigInt(n - 4));
    const BigInt bn(n);
    const BigInt bs(s);
    out.expected_n_minus_2 = 2 * bn * bn - 6 * bn - 3 * bs * bs - 6 * bs + 4;
    out.expected_n_minus_4 = -3 * bs * bs;
    out.trace = b[0][0] + b[1][1] + b[2][2];
    out.expected_trace = n - 5;
    return out;
}

double kopr_threshold(long long k, long long b) {
    if (k < 3 || b < 1 || b % 2 == 0 || b >= k)
        throw std::invalid_argument("kopr_threshold requires k >= 3 and odd b with 1 <= b < k");
    const long long c = (k + b - 1) / b;  // ceil(k / b)
    const bool k_even = k % 2 == 0;
    const bool c_even = c % 2 == 0;
    const double kd = static_cast<double>(k);
    const double shift = k_even ? 2.0 : 3.0;
    // Matching parities subtract ceil(k/b) - 2 under the root, mixed ones ceil(k/b) - 1.
    const double offset = static_cast<double>(k_even == c_even ? c - 2 : c - 1);
    return (kd - shift + std::sqrt((kd + shift) * (kd + shift) - 4.0 * offset)) / 2.0;
}

long long theorem_n_bound(long long a, long long b) {
    if (a < 1 || a > b || (b - a) % 2 != 0)
        throw std::invalid_argument("theorem_n_bound requires 1 <= a <= b with a = b (mod 2)");
    return std::max(2 * a * (a + 1) + b - 3, (2 * a + 2) * (a + 1));
}

}  // namespace pfactor
