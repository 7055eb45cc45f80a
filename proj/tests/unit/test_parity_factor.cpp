#include <doctest.h>

#include "oracles.hpp"
#include "pfactor/families.hpp"
#include "pfactor/parity_factor.hpp"
#include "pfactor/random.hpp"

using namespace pfactor;

namespace {

const std::vector<FactorSpec> kSpecs{{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 3}};

std::vector<int> sides(const DeficiencyCertificate& c, std::size_t n) {
    std::vector<int> out(n, 0);
    for (std::size_t v : c.s) out[v] = 1;
    for (std::size_t v : c.t) out[v] = 2;
    return out;
}

}  // namespace

TEST_SUITE("factor spec") {
    TEST_CASE("validation") {
        CHECK_NOTHROW(FactorSpec::make(1, 3));
        CHECK_THROWS_AS(FactorSpec::make(2, 3), std::invalid_argument);
        CHECK_THROWS_AS(FactorSpec::make(3, 1), std::invalid_argument);
        CHECK_THROWS_AS(FactorSpec::make(0, 2), std::invalid_argument);
        CHECK(FactorSpec{1, 1}.parity_obstructed(5));
        CHECK_FALSE(FactorSpec{2, 2}.parity_obstructed(5));
    }

    TEST_CASE("general spec validation") {
        GeneralFactorSpec g{{1, 1}, {1, 3}, true};
        CHECK_NOTHROW(g.validate(2));
        CHECK_THROWS(g.validate(3));
        CHECK_THROWS((GeneralFactorSpec{{2}, {1}, false}.validate(1)));
        CHECK_THROWS((GeneralFactorSpec{{1}, {2}, true}.validate(1)));
        CHECK_THROWS((GeneralFactorSpec{{-1}, {1}, false}.validate(1)));
    }
}

TEST_SUITE("deficiency") {
    TEST_CASE("q examples") {
        for (std::size_t n = 4; n <= 12; ++n)
            for (std::size_t a = 1; a < n && a <= 4; ++a) {
                // G - T is K_{n-1}; a(n-1) + e(K_{n-1}, T) = na - 1, odd iff na is even.
                const long long expected = (n * a) % 2 == 0 ? 1 : 0;
                CHECK(q_count(h_extremal(n, a), {}, VertexSet{h_extremal_pendant(a)}, static_cast<int>(a)) == expected);
            }
        CHECK(q_count(cycle(5), {}, {}, 1) == 1);
        CHECK(q_count(complete(4), {}, {}, 1) == 0);
        CHECK_THROWS(q_count(complete(4), VertexSet{0}, VertexSet{0}, 1));
    }

    TEST_CASE("eta examples") {
        for (const FactorSpec& spec : kSpecs)
            for (std::size_t n = static_cast<std::size_t>(spec.a) + 1; n <= 14; ++n) {
                const Graph h = h_extremal(n, static_cast<std::size_t>(spec.a));
                const long long expected = spec.parity_obstructed(n) ? -1 : -2;
                CHECK(eta_parity(h, {}, VertexSet{h_extremal_pendant(static_cast<std::size_t>(spec.a))}, spec) == expected);
            }
        CHECK(eta_parity(complete(4), {}, VertexSet::range(4), {1, 1}) == 8);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Graph g = random_graph(1 + seed % 12, 0.3, seed);
            CHECK(eta_parity(g, {}, {}, {1, 3}) == -q_count(g, {}, {}, 1));
        }
    }

    TEST_CASE("eta agrees with the matrix oracle") {
        SplitMix64 rng(99);
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = 1 + rng.below(12);
            const Graph g = random_graph(n, rng.uniform(), rng.next());
            std::vector<int> side(n);
            VertexSet s;
            VertexSet t;
            for (std::size_t v = 0; v < n; ++v) {
                side[v] = static_cast<int>(rng.below(3));
                if (side[v] == 1) s.insert(v);
                if (side[v] == 2) t.insert(v);
            }
            const FactorSpec& spec = kSpecs[rng.below(kSpecs.size())];
            CHECK(eta_parity(g, s, t, spec) == oracle::eta(oracle::adjacency(g), side, spec.a, spec.b));
        }
    }

    TEST_CASE("general form reduces to the parity form") {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + rng.below(10);
            const Graph g = random_graph(n, 0.4, rng.next());
            VertexSet s;
            VertexSet t;
            for (std::size_t v = 0; v < n; ++v) {
                const auto d = rng.below(3);
                if (d == 1) s.insert(v);
                if (d == 2) t.insert(v);
            }
            const FactorSpec& spec = kSpecs[rng.below(kSpecs.size())];
            CHECK(eta_general(g, s, t, GeneralFactorSpec::uniform(n, spec)) == eta_parity(g, s, t, spec));
        }
    }

    TEST_CASE("non-parity q-hat") {
        // g < f everywhere: no tight component, so eta = f(S) - g(T) + sum d_{G-S}.
        const Graph c5 = cycle(5);
        const GeneralFactorSpec loose{std::vector<int>(5, 1), std::vector<int>(5, 2), false};
        CHECK(eta_general(c5, {}, {}, loose) == 0);
        // g = f = 1 on K_2: f(V(C)) = 2 is even, so q-hat = 0.
        const GeneralFactorSpec one{{1, 1}, {1, 1}, false};
        CHECK(eta_general(complete(2), {}, {}, one) == 0);
        // g = f = 1 on K_3: f(V(C)) = 3 odd, q-hat = 1.
        const GeneralFactorSpec one3{{1, 1, 1}, {1, 1, 1}, false};
        CHECK(eta_general(complete(3), {}, {}, one3) == -1);
    }
}

TEST_SUITE("deciders") {
    TEST_CASE("criterion search examples") {
        const FactorResult c5 = decide_lovasz(cycle(5), {1, 1});
        CHECK_FALSE(c5.exists);
        REQUIRE(c5.certificate);
        CHECK(c5.certificate->s.empty());
        CHECK(c5.certificate->t.empty());
        CHECK(c5.certificate->eta == -1);
        CHECK_FALSE(decide_lovasz(h_extremal(8, 1), {1, 3}).exists);
        const FactorResult k4 = decide_lovasz(complete(4), {1, 1});
        CHECK(k4.exists);
        CHECK_FALSE(k4.factor);
        CHECK_THROWS_AS(decide_lovasz(complete(15), {1, 1}), CapacityError);
        CHECK(decide_lovasz(complete(16), {1, 1}, 16).exists);
    }

    TEST_CASE("criterion certificate is the first in base-3 order") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const std::size_t n = 2 + 2 * (seed % 4);
            const Graph g = random_graph(n, 0.3, seed);
            const FactorSpec spec = kSpecs[seed % kSpecs.size()];
            const FactorResult r = decide_lovasz(g, spec);
            const oracle::Matrix m = oracle::adjacency(g);
            // Brute force over assignments in the same order.
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= 3;
            std::optional<std::vector<int>> first;
            for (std::uint64_t idx = 0; idx < total && !first; ++idx) {
                std::vector<int> side(n);
                std::uint64_t x = idx;
                for (std::size_t v = 0; v < n; ++v, x /= 3) side[v] = static_cast<int>(x % 3);
                if (oracle::eta(m, side, spec.a, spec.b) <= -1) first = side;
            }
            CHECK(r.exists == !first.has_value());
            if (first) {
                REQUIRE(r.certificate);
                CHECK(sides(*r.certificate, n) == *first);
                CHECK(r.certificate->eta == eta_parity(g, r.certificate->s, r.certificate->t, spec));
                CHECK(r.certificate->eta <= -1);
            }
        }
    }

    TEST_CASE("gadget construction") {
        const GadgetMap k4 = build_gadget(complete(4), {1, 1});
        CHECK(k4.aux.order() == 20);
        for (const auto& blk : k4.blocks) CHECK(blk.end - blk.edge_begin == 5);
        const GadgetMap star = build_gadget(pfactor::star(3), {1, 3});
        CHECK(star.blocks[0].end - star.blocks[0].edge_begin == 5);
        CHECK(star.blocks[0].flexible_begin - star.blocks[0].forced_begin == 0);
        for (std::size_t v = 1; v <= 3; ++v) CHECK(star.blocks[v].end - star.blocks[v].edge_begin == 1);
        CHECK(star.cross_edges.size() == 3);
        CHECK_THROWS_AS(build_gadget(path(3), {2, 2}), std::invalid_argument);

        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Graph g = random_graph(2 + seed % 14, 0.7, seed);
            const FactorSpec spec = kSpecs[seed % kSpecs.size()];
            if (min_degree(g) < static_cast<std::size_t>(spec.a)) continue;
            const GadgetMap map = build_gadget(g, spec);
            std::size_t expected = 0;
            for (std::size_t v = 0; v < g.order(); ++v) {
                const int d = static_cast<int>(g.degree(v));
                expected += static_cast<std::size_t>(d + std::max(d - spec.b, 0) + std::min(d, spec.b) - spec.a);
            }
            CHECK(map.aux.order() == expected);
            CHECK(map.aux.order() == 4 * g.edge_count() - static_cast<std::size_t>(spec.a) * g.order());
            if (!spec.parity_obstructed(g.order())) CHECK(map.aux.order() % 2 == 0);
            CHECK(map.cross_edges.size() == g.edge_count());
        }
    }

    TEST_CASE("matching decider examples") {
        const FactorResult h = decide_matching(h_extremal(8, 1), {1, 1});
        CHECK_FALSE(h.exists);
        const FactorResult k4 = decide_matching(complete(4), {2, 2});
        REQUIRE(k4.exists);
        REQUIRE(k4.factor);
        CHECK(k4.factor->size() == 4);
        CHECK(validate_factor(complete(4), *k4.factor, {2, 2}));
        CHECK(decide_matching(petersen(), {1, 3}).exists);
        CHECK(decide_matching(petersen(), {1, 1}).exists);
        // Degree below a gives the one-vertex certificate.
        const FactorResult low = decide_matching(path(4), {2, 2});
        CHECK_FALSE(low.exists);
        REQUIRE(low.certificate);
        CHECK(low.certificate->s.empty());
        CHECK(low.certificate->t.size() == 1);
        CHECK(low.certificate->eta <= -1);
    }

    TEST_CASE("enumeration decider examples") {
        const FactorResult c4 = decide_enum(cycle(4), {1, 1});
        REQUIRE(c4.exists);
        // Edges in order 01, 03, 12, 23: the first valid subset is {03, 12}.
        CHECK(*c4.factor == EdgeSet{{0, 3}, {1, 2}});
        const FactorResult star = decide_enum(pfactor::star(3), {1, 3});
        REQUIRE(star.exists);
        CHECK(star.factor->size() == 3);
        CHECK_FALSE(decide_enum(cycle(5), {1, 1}).exists);
        CHECK_THROWS_AS(decide_enum(complete(8), {1, 1}), CapacityError);
        CHECK(decide_enum(Graph(0), {1, 1}).exists);
    }

    TEST_CASE("three deciders and the subset oracle agree on small random graphs") {
        SplitMix64 rng(2024);
        for (int trial = 0; trial < 600; ++trial) {
            const std::size_t n = 1 + rng.below(9);
            const std::size_t max_m = std::min<std::size_t>(n * (n - 1) / 2, 16);
            const Graph g = random_graph_edges(n, rng.below(max_m + 1), rng.next());
            for (const FactorSpec& spec : kSpecs) {
                const bool truth = oracle::has_parity_factor(g, spec.a, spec.b);
                const FactorResult l = decide_lovasz(g, spec);
                const FactorResult m = decide_matching(g, spec);
                const FactorResult e = decide_enum(g, spec);
                CHECK(l.exists == truth);
                CHECK(m.exists == truth);
                CHECK(e.exists == truth);
                if (m.exists) CHECK(validate_factor(g, *m.factor, spec));
                if (e.exists) CHECK(validate_factor(g, *e.factor, spec));
                if (!l.exists) {
                    REQUIRE(l.certificate);
                    CHECK(eta_parity(g, l.certificate->s, l.certificate->t, spec) == l.certificate->eta);
                    CHECK(l.certificate->eta <= -1);
                }
            }
        }
    }

    TEST_CASE("factor containment") {
        // A graph containing a spanning subgraph with a factor has one too.
        SplitMix64 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 4 + 2 * rng.below(5);
            const Graph base = random_graph(n, 0.5, rng.next());
            const FactorSpec spec = kSpecs[rng.below(kSpecs.size())];
            if (!decide_matching(base, spec).exists) continue;
            Graph::Builder bigger(base);
            for (int k = 0; k < 3; ++k) {
                const std::size_t u = rng.below(n);
                const std::size_t v = rng.below(n);
                if (u != v) bigger.add_edge(u, v);
            }
            CHECK(decide_matching(bigger.build(), spec).exists);
        }
    }

    TEST_CASE("validate_factor") {
        const Graph c6 = cycle(6);
        CHECK(validate_factor(c6, {{0, 1}, {2, 3}, {4, 5}}, {1, 1}));
        CHECK_FALSE(validate_factor(c6, {}, {1, 1}));
        CHECK(validate_factor(cycle(4), cycle(4).edges(), {2, 2}));
        CHECK_FALSE(validate_factor(c6, {{0, 1}, {0, 1}, {2, 3}, {4, 5}}, {1, 1}));
        CHECK_FALSE(validate_factor(c6, {{0, 3}, {1, 2}, {4, 5}}, {1, 1}));
    }

    TEST_CASE("Liu-Lu hypotheses") {
        CHECK(liu_lu_check(complete(12), {1, 1}));
        CHECK_FALSE(liu_lu_check(h_extremal(12, 1), {1, 1}));
        CHECK_FALSE(liu_lu_check(cycle(12), {1, 1}));
        CHECK_FALSE(liu_lu_check(complete(11), {1, 1}));
        CHECK_FALSE(liu_lu_check(complete(5), {1, 1}));
        // Consistency with the decider on dense random graphs.
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const Graph g = random_graph(8 + 2 * (seed % 10), 0.75, seed);
            const FactorSpec spec = kSpecs[seed % 2];
            if (liu_lu_check(g, spec)) CHECK(decide_matching(g, spec).exists);
        }
    }
}
