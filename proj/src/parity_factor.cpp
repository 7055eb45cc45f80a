#include "pfactor/parity_factor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "pfactor/matching.hpp"

namespace pfactor {

FactorSpec FactorSpec::make(int a, int b) {
    if (a < 1 || a > b || (b - a) % 2 != 0)
        throw std::invalid_argument("factor spec requires 1 <= a <= b and a = b (mod 2), got (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
    return {a, b};
}

void GeneralFactorSpec::validate(std::size_t n) const {
    if (g.size() != n || f.size() != n) throw std::invalid_argument("g and f must have one entry per vertex");
    for (std::size_t v = 0; v < n; ++v) {
        if (g[v] < 0 || g[v] > f[v]) throw std::invalid_argument("bounds must satisfy 0 <= g(v) <= f(v)");
        if (parity && (f[v] - g[v]) % 2 != 0) throw std::invalid_argument("parity factors need g(v) = f(v) (mod 2)");
    }
}

GeneralFactorSpec GeneralFactorSpec::uniform(std::size_t n, const FactorSpec& spec) {
    return {std::vector<int>(n, spec.a), std::vector<int>(n, spec.b), true};
}

std::string_view to_string(FactorMethod m) {
    switch (m) {
        case FactorMethod::Lovasz: return "lovasz";
        case FactorMethod::Matching: return "matching";
        case FactorMethod::Enumeration: return "enum";
    }
    return "unknown";
}

namespace {

void require_disjoint(const VertexSet& s, const VertexSet& t) {
    if (s.intersects(t)) throw std::invalid_argument("S and T must be disjoint");
}

long long degree_sum_outside(const Graph& g, const VertexSet& s, const VertexSet& t) {
    long long sum = 0;
    for (std::size_t x : t) sum += static_cast<long long>(degree_in_deleted(g, s, x));
    return sum;
}

}  // namespace

long long q_count(const Graph& g, const VertexSet& s, const VertexSet& t, int a) {
    require_disjoint(s, t);
    long long q = 0;
    for (const VertexSet& c : components(g, g.vertices() - s - t)) {
        const std::size_t weight = static_cast<std::size_t>(a) * c.size() + e_between(g, c, t);
        if (weight % 2 == 1) ++q;
    }
    return q;
}

long long eta_parity(const Graph& g, const VertexSet& s, const VertexSet& t, const FactorSpec& spec) {
    return static_cast<long long>(spec.b) * static_cast<long long>(s.size()) -
           static_cast<long long>(spec.a) * static_cast<long long>(t.size()) + degree_sum_outside(g, s, t) -
           q_count(g, s, t, spec.a);
}

long long eta_general(const Graph& g, const VertexSet& s, const VertexSet& t, const GeneralFactorSpec& spec) {
    require_disjoint(s, t);
    spec.validate(g.order());
    long long value = degree_sum_outside(g, s, t);
    for (std::size_t v : s) value += spec.f[v];
    for (std::size_t v : t) value -= spec.g[v];
    long long q = 0;
    for (const VertexSet& c : components(g, g.vertices() - s - t)) {
        const long long edges_to_t = static_cast<long long>(e_between(g, c, t));
        long long weight = edges_to_t;
        if (spec.parity) {
            for (std::size_t v : c) weight += spec.g[v];
        } else {
            bool tight = true;
            for (std::size_t v : c) {
                tight = tight && spec.g[v] == spec.f[v];
                weight += spec.f[v];
            }
            if (!tight) continue;
        }
        if (weight % 2 != 0) ++q;
    }
    return value - q;
}

DeficiencyCertificate make_certificate(const Graph& g, const VertexSet& s, const VertexSet& t,
                                       const FactorSpec& spec) {
    return {s, t, eta_parity(g, s, t, spec), q_count(g, s, t, spec.a)};
}

FactorResult decide_lovasz(const Graph& g, const FactorSpec& spec, std::size_t cap) {
    const std::size_t n = g.order();
    if (n > cap)
        throw CapacityError("criterion search is capped at " + std::to_string(cap) + " vertices, graph has " +
                            std::to_string(n));
    if (n > 20) throw CapacityError("criterion search supports at most 20 vertices");
    if (spec.parity_obstructed(n)) return {false, std::nullopt, make_certificate(g, {}, {}, spec)};

    using Mask = std::uint32_t;
    std::vector<Mask> adj(n);
    for (std::size_t v = 0; v < n; ++v) adj[v] = static_cast<Mask>(g.neighbors(v).words()[0]);

    // Components of G - U for every U, flattened.
    const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    std::vector<std::uint32_t> offset((std::size_t{1} << n) + 1, 0);
    std::vector<Mask> comps;
    for (Mask u = 0;; ++u) {
        offset[u] = static_cast<std::uint32_t>(comps.size());
        Mask rest = full & ~u;
        while (rest != 0) {
            Mask comp = rest & (~rest + 1);
            Mask frontier = comp;
            while (frontier != 0) {
                Mask next = 0;
                for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
                next &= rest & ~comp;
                comp |= next;
                frontier = next;
            }
            comps.push_back(comp);
            rest &= ~comp;
        }
        if (u == full) break;
    }
    offset[std::size_t{1} << n] = static_cast<std::uint32_t>(comps.size());

    const long long a = spec.a;
    const long long b = spec.b;
    std::vector<int> digit(n, 0);
    Mask s = 0;
    Mask t = 0;
    while (true) {
        long long eta = b * std::popcount(s) - a * std::popcount(t);
        Mask parity_mask = 0;
        for (Mask x = t; x != 0; x &= x - 1) {
            const Mask row = adj[static_cast<std::size_t>(std::countr_zero(x))];
            eta += std::popcount(row & ~s);
            parity_mask ^= row;
        }
        const Mask used = s | t;
        long long q = 0;
        for (std::uint32_t i = offset[used]; i < offset[used + 1]; ++i) {
            const Mask c = comps[i];
            q += (a * std::popcount(c) + std::popcount(parity_mask & c)) & 1;
        }
        eta -= q;
        if (eta <= -1) {
            DeficiencyCertificate cert;
            for (std::size_t v = 0; v < n; ++v) {
                if ((s >> v) & 1U) cert.s.insert(v);
                if ((t >> v) & 1U) cert.t.insert(v);
            }
            cert.eta = eta;
            cert.q = q;
            return {false, std::nullopt, cert};
        }
        // Next assignment in base-3 order, vertex 0 least significant.
        std::size_t v = 0;
        while (v < n && digit[v] == 2) {
            digit[v] = 0;
            t &= ~(Mask{1} << v);
            ++v;
        }
        if (v == n) break;
        if (digit[v] == 0) {
            s |= Mask{1} << v;
        } else {
            s &= ~(Mask{1} << v);
            t |= Mask{1} << v;
        }
        ++digit[v];
    }
    return {true, std::nullopt, std::nullopt};
}

GadgetMap build_gadget(const Graph& g, const FactorSpec& spec) {
    const std::size_t n = g.order();
    GadgetMap map;
    map.blocks.resize(n);
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const int d = static_cast<int>(g.degree(v));
        if (d < spec.a) throw std::invalid_argument("vertex " + std::to_string(v) + " has degree below a");
        auto& blk = map.blocks[v];
        blk.edge_begin = next;
        blk.forced_begin = blk.edge_begin + static_cast<std::uint32_t>(d);
        blk.flexible_begin = blk.forced_begin + static_cast<std::uint32_t>(std::max(d - spec.b, 0));
        blk.end = blk.flexible_begin + static_cast<std::uint32_t>(std::min(d, spec.b) - spec.a);
        next = blk.end;
    }
    map.aux = AdjacencyList(next);
    map.original_edges = g.edges();

    // Edges arrive in lexicographic order, so each vertex fills its edge-node
    // slots in increasing neighbour order.
    std::vector<std::uint32_t> slot(n, 0);
    for (const Edge& e : map.original_edges) {
        const std::uint32_t nu = map.blocks[e.u].edge_begin + slot[e.u]++;
        const std::uint32_t nv = map.blocks[e.v].edge_begin + slot[e.v]++;
        map.aux.add_edge(nu, nv);
        map.cross_edges.emplace_back(nu, nv);
    }
    for (const auto& blk : map.blocks) {
        for (std::uint32_t core = blk.forced_begin; core < blk.end; ++core)
            for (std::uint32_t en = blk.edge_begin; en < blk.forced_begin; ++en) map.aux.add_edge(core, en);
        for (std::uint32_t i = blk.flexible_begin; i < blk.end; ++i)
            for (std::uint32_t j = i + 1; j < blk.end; ++j) map.aux.add_edge(i, j);
    }
    return map;
}

FactorResult decide_matching(const Graph& g, const FactorSpec& spec) {
    const std::size_t n = g.order();
    if (spec.parity_obstructed(n)) return {false, std::nullopt, make_certificate(g, {}, {}, spec)};
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) < static_cast<std::size_t>(spec.a))
            return {false, std::nullopt, make_certificate(g, {}, VertexSet{v}, spec)};

    const GadgetMap gadget = build_gadget(g, spec);
    const auto mates = perfect_matching_mates(gadget.aux);
    if (!mates) return {false, std::nullopt, std::nullopt};

    EdgeSet factor;
    for (std::size_t i = 0; i < gadget.cross_edges.size(); ++i)
        if ((*mates)[gadget.cross_edges[i].first] == gadget.cross_edges[i].second)
            factor.push_back(gadget.original_edges[i]);
    if (!validate_factor(g, factor, spec)) throw std::logic_error("gadget matching produced an invalid factor");
    return {true, std::move(factor), std::nullopt};
}

FactorResult decide_enum(const Graph& g, const FactorSpec& spec, std::size_t m_cap) {
    const EdgeSet edges = g.edges();
    const std::size_t m = edges.size();
    if (m > m_cap || m > 62)
        throw CapacityError("edge enumeration is capped at " + std::to_string(m_cap) + " edges, graph has " +
                            std::to_string(m));
    const std::size_t n = g.order();
    if (spec.parity_obstructed(n)) return {false, std::nullopt, make_certificate(g, {}, {}, spec)};

    std::vector<int> deg(n, 0);
    auto bad = [&spec](int d) { return d < spec.a || d > spec.b || (d - spec.b) % 2 != 0; };
    std::size_t bad_count = 0;
    for (std::size_t v = 0; v < n; ++v) bad_count += bad(0) ? 1 : 0;
    auto shift = [&](std::size_t vertex, int delta) {
        bad_count -= bad(deg[vertex]) ? 1 : 0;
        deg[vertex] += delta;
        bad_count += bad(deg[vertex]) ? 1 : 0;
    };

    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0;;) {
        if (bad_count == 0) {
            EdgeSet factor;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1U) factor.push_back(edges[i]);
            return {true, std::move(factor), std::nullopt};
        }
        if (++mask == limit) break;
        // mask - 1 -> mask clears the trailing ones and sets the next bit.
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        for (std::size_t i = 0; i < low; ++i) {
            shift(edges[i].u, -1);
            shift(edges[i].v, -1);
        }
        shift(edges[low].u, +1);
        shift(edges[low].v, +1);
    }
    return {false, std::nullopt, std::nullopt};
}

FactorResult decide(const Graph& g, const FactorSpec& spec, FactorMethod method) {
    switch (method) {
        case FactorMethod::Lovasz: return decide_lovasz(g, spec);
        case FactorMethod::Matching: return decide_matching(g, spec);
        case FactorMethod::Enumeration: return decide_enum(g, spec);
    }
    throw std::invalid_argument("unknown factor method");
}

bool validate_factor(const Graph& g, const EdgeSet& f, const FactorSpec& spec) {
    const std::size_t n = g.order();
    std::vector<int> deg(n, 0);
    EdgeSet sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (const Edge& e : sorted) {
        if (e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int d : deg)
        if (d < spec.a || d > spec.b || (d - spec.b) % 2 != 0) return false;
    return true;
}

bool liu_lu_check(const Graph& g, const FactorSpec& spec) {
    const long long n = static_cast<long long>(g.order());
    const long long a = spec.a;
    const long long b = spec.b;
    if (n == 0 || !is_connected(g)) return false;
    if (2 * a * n < b * (a + b) * (a + b + 2)) return false;
    if ((n * a) % 2 != 0) return false;
    // delta >= a + (b - a)/a, cleared of the denominator.
    if (a * static_cast<long long>(min_degree(g)) < a * a + b - a) return false;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            const long long top = static_cast<long long>(std::max(g.degree(u), g.degree(v)));
            if ((a + b) * top < a * n) return false;
        }
    return true;
}

}  // namespace pfactor
