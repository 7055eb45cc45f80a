#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pfactor/graph.hpp"

namespace pfactor {

/// Degree window [a, b] with the parity of b, for (a,b)-parity factors.
struct FactorSpec {
    int a = 1;
    int b = 1;

    /// Throws std::invalid_argument unless 1 <= a <= b and a = b (mod 2).
    static FactorSpec make(int a, int b);
    /// True iff n * a is odd, which rules out any factor.
    bool parity_obstructed(std::size_t n) const { return (n * static_cast<std::size_t>(a)) % 2 == 1; }
};

/// Per-vertex bounds g(v) <= d_F(v) <= f(v), optionally with d_F(v) = f(v) (mod 2).
struct GeneralFactorSpec {
    std::vector<int> g;
    std::vector<int> f;
    bool parity = false;

    /// Throws std::invalid_argument on size mismatch, g > f, negative bounds,
    /// or (with parity) g(v) and f(v) of different parity.
    void validate(std::size_t n) const;
    static GeneralFactorSpec uniform(std::size_t n, const FactorSpec& spec);
};

struct DeficiencyCertificate {
    VertexSet s;
    VertexSet t;
    long long eta = 0;
    long long q = 0;
};

enum class FactorMethod { Lovasz, Matching, Enumeration };
std::string_view to_string(FactorMethod m);

struct FactorResult {
    bool exists = false;
    /// Edges of a witnessing factor; matching and enumeration fill this on yes.
    std::optional<EdgeSet> factor;
    /// Non-existence witness with eta <= -1, when the method produced one.
    std::optional<DeficiencyCertificate> certificate;
};

/// Components C of G - S - T with a|V(C)| + e(V(C), T) odd. S, T disjoint.
long long q_count(const Graph& g, const VertexSet& s, const VertexSet& t, int a);

/// b|S| - a|T| + sum_{x in T} d_{G-S}(x) - q(S, T).
long long eta_parity(const Graph& g, const VertexSet& s, const VertexSet& t, const FactorSpec& spec);

/// With the parity flag: f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q(S,T), q counting
/// components with g(V(C)) + e(V(C),T) odd. Without it, the (g,f)-factor form
/// whose q-hat counts components with g = f throughout and f(V(C)) + e(V(C),T) odd.
long long eta_general(const Graph& g, const VertexSet& s, const VertexSet& t, const GeneralFactorSpec& spec);

DeficiencyCertificate make_certificate(const Graph& g, const VertexSet& s, const VertexSet& t,
                                       const FactorSpec& spec);

inline constexpr std::size_t kDefaultLovaszCap = 14;
inline constexpr std::size_t kDefaultEnumEdgeCap = 22;

/// Scans all 3^n assignments vertex -> {neither, S, T}. Assignment i gives
/// vertex v the base-3 digit (i / 3^v) % 3 (0 neither, 1 S, 2 T); the first
/// index with eta <= -1 is the reported certificate. An odd n*a short-circuits
/// to the certificate S = T = {}. Throws CapacityError when n > cap.
FactorResult decide_lovasz(const Graph& g, const FactorSpec& spec, std::size_t cap = kDefaultLovaszCap);

/// Auxiliary graph whose perfect matchings correspond to (a,b)-parity factors.
struct GadgetMap {
    struct VertexBlock {
        std::uint32_t edge_begin = 0;      // one node per incident edge, in neighbour order
        std::uint32_t forced_begin = 0;    // max(d - b, 0) cores
        std::uint32_t flexible_begin = 0;  // min(d, b) - a cores, pairwise adjacent
        std::uint32_t end = 0;
    };

    AdjacencyList aux;
    EdgeSet original_edges;
    /// cross_edges[i] joins the edge-nodes standing for original_edges[i].
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cross_edges;
    std::vector<VertexBlock> blocks;
};

/// Throws std::invalid_argument if some vertex has degree below a.
GadgetMap build_gadget(const Graph& g, const FactorSpec& spec);

/// Perfect matching in the gadget <=> factor. Returns no for odd n*a or
/// min degree < a (with the matching trivial certificate), otherwise yes with
/// a validated factor or no without a certificate.
FactorResult decide_matching(const Graph& g, const FactorSpec& spec);

/// Brute force over the 2^m edge subsets in increasing bitmask order (bit i is
/// the i-th edge in lexicographic order); the first valid subset is returned.
/// Throws CapacityError when m > m_cap.
FactorResult decide_enum(const Graph& g, const FactorSpec& spec, std::size_t m_cap = kDefaultEnumEdgeCap);

FactorResult decide(const Graph& g, const FactorSpec& spec, FactorMethod method);

/// a <= d_F(v) <= b and d_F(v) = b (mod 2) at every vertex, F a set of edges of g.
bool validate_factor(const Graph& g, const EdgeSet& f, const FactorSpec& spec);

/// Hypotheses of the Liu-Lu degree condition: connected, n >= b(a+b)(a+b+2)/(2a),
/// na even, delta >= a + (b-a)/a, and max{d(u), d(v)} >= an/(a+b) for non-adjacent u, v.
bool liu_lu_check(const Graph& g, const FactorSpec& spec);

}  // namespace pfactor
