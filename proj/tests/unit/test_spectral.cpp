#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pfactor/families.hpp"
#include "pfactor/polynomial.hpp"
#include "pfactor/random.hpp"
#include "pfactor/spectral.hpp"

using namespace pfactor;

namespace {

IntPolynomial poly(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    for (long long v : ascending) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

bool contains(const SpectralEnclosure& e, double value, double slack = 1e-9) {
    return e.lo - slack <= value && value <= e.hi + slack;
}

}  // namespace

TEST_SUITE("spectral radius") {
    TEST_CASE("spec examples") {
        const SpectralEnclosure k7 = spectral_radius(complete(7));
        CHECK(k7.width() <= 1e-10);
        CHECK(contains(k7, 6.0, 1e-10));
        CHECK(contains(spectral_radius(cycle(6)), 2.0, 1e-10));
        CHECK(contains(spectral_radius(path(3)), std::sqrt(2.0), 1e-10));
        CHECK(contains(spectral_radius(h_extremal(8, 1)), 6.0, 1e-10));
        CHECK_THROWS_AS(spectral_radius(Graph(0)), std::domain_error);
        const SpectralEnclosure isolated = spectral_radius(Graph(3));
        CHECK(isolated.lo == 0.0);
        CHECK(isolated.hi == 0.0);
    }

    TEST_CASE("closed forms up to 30") {
        for (std::size_t n = 1; n <= 30; ++n) {
            CHECK(std::abs(spectral_radius(complete(n)).midpoint() - static_cast<double>(n - 1)) <= 1e-9);
            CHECK(std::abs(spectral_radius(path(n)).midpoint() - 2.0 * std::cos(std::numbers::pi / (n + 1.0))) <= 1e-9);
            if (n >= 3) CHECK(std::abs(spectral_radius(cycle(n)).midpoint() - 2.0) <= 1e-9);
        }
        for (std::size_t s = 1; s <= 30; ++s)
            for (std::size_t t = 1; s + t <= 64 && t <= 30; ++t)
                CHECK(std::abs(spectral_radius(complete_bipartite(s, t)).midpoint() - std::sqrt(double(s * t))) <= 1e-9);
    }

    TEST_CASE("enclosure contains the Eigen largest eigenvalue") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const Graph g = random_graph(1 + seed % 40, 0.05 + 0.003 * static_cast<double>(seed % 100), seed);
            const SpectralEnclosure e = spectral_radius(g);
            CHECK(e.lo <= e.hi);
            CHECK(contains(e, oracle::spectral_radius(g), 1e-8));
        }
    }

    TEST_CASE("adjacency-list route agrees with the bit-set route") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Graph g = random_graph(2 + seed % 30, 0.2, seed);
            const SpectralEnclosure a = spectral_radius(g);
            const SpectralEnclosure b = spectral_radius(AdjacencyList(g));
            CHECK(std::abs(a.midpoint() - b.midpoint()) <= 1e-9);
        }
    }

    TEST_CASE("adding an edge to a connected graph raises the radius") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Graph g = random_graph(6 + seed % 10, 0.5, seed);
            if (!is_connected(g)) continue;
            const Graph c = complement(g);
            if (c.edge_count() == 0) continue;
            const Edge e = c.edges().front();
            const Graph h = Graph::Builder(g).add_edge(e.u, e.v).build();
            CHECK(spectral_radius(h).midpoint() > spectral_radius(g).hi - 1e-10);
        }
    }

    TEST_CASE("iteration cap reports the achieved width") {
        const SpectralEnclosure e = spectral_radius(path(40), 1e-15, 3);
        CHECK(e.iterations == 3);
        CHECK(e.width() > 1e-15);
        CHECK(contains(e, 2.0 * std::cos(std::numbers::pi / 41.0)));
    }
}

TEST_SUITE("full spectrum") {
    TEST_CASE("spec examples") {
        const Spectrum k4 = full_spectrum(complete(4));
        REQUIRE(k4.values.size() == 4);
        CHECK(k4.values[0] == doctest::Approx(3.0).epsilon(1e-10));
        for (int i = 1; i < 4; ++i) CHECK(k4.values[i] == doctest::Approx(-1.0).epsilon(1e-10));
        const Spectrum c4 = full_spectrum(cycle(4));
        const std::vector<double> expected{2, 0, 0, -2};
        for (int i = 0; i < 4; ++i) CHECK(std::abs(c4.values[i] - expected[i]) <= 1e-10);
        const Spectrum p = full_spectrum(petersen());
        CHECK(std::abs(p.values[0] - 3.0) <= 1e-9);
        for (int i = 1; i <= 5; ++i) CHECK(std::abs(p.values[i] - 1.0) <= 1e-9);
        for (int i = 6; i < 10; ++i) CHECK(std::abs(p.values[i] + 2.0) <= 1e-9);
    }

    TEST_CASE("agrees with Eigen, trace zero") {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            const Graph g = random_graph(1 + seed % 25, 0.35, seed);
            const Spectrum s = full_spectrum(g);
            const std::vector<double> ref = oracle::eigenvalues(oracle::adjacency(g));
            REQUIRE(s.values.size() == ref.size());
            double sum = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CHECK(std::abs(s.values[i] - ref[i]) <= 1e-8);
                sum += s.values[i];
            }
            CHECK(std::abs(sum) <= static_cast<double>(g.order()) * 1e-10 + 1e-12);
            for (std::size_t i = 1; i < s.values.size(); ++i) CHECK(s.values[i - 1] >= s.values[i]);
        }
    }
}

TEST_SUITE("exact polynomials") {
    TEST_CASE("spec examples") {
        CHECK(char_poly_exact(complete(3)) == poly({-2, -3, 0, 1}));
        CHECK(char_poly_exact(complete(3)).to_string() == "x^3 - 3x - 2");
        CHECK(char_poly_exact(path(2)) == poly({-1, 0, 1}));
    }

    TEST_CASE("matches a Bareiss determinant oracle at integer points") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const Graph g = random_graph(1 + seed % 16, 0.45, seed);
            const IntPolynomial p = char_poly_exact(g);
            const oracle::Matrix a = oracle::adjacency(g);
            const std::size_t n = g.order();
            CHECK(p.degree() == static_cast<int>(n));
            CHECK(p.leading() == 1);
            CHECK(p.coefficient(n - 1) == 0);
            if (n >= 2) CHECK(p.coefficient(n - 2) == -BigInt(g.edge_count()));
            for (long long x = -3; x <= 3; ++x) CHECK(p.evaluate(BigInt(x)) == oracle::char_poly_at(a, x));
        }
    }

    TEST_CASE("large orders stay exact") {
        const IntPolynomial p = char_poly_exact(complete(40));
        // (x - 39)(x + 1)^39
        CHECK(p.evaluate(BigInt(39)) == 0);
        CHECK(p.evaluate(BigInt(-1)) == 0);
        CHECK(p.evaluate(BigInt(2)) == oracle::char_poly_at(oracle::adjacency(complete(40)), 2));
    }

    TEST_CASE("gcd and square-free part") {
        const IntPolynomial a = poly({-2, -3, 0, 1});  // (x-2)(x+1)^2
        CHECK(square_free_part(a) == poly({-2, -1, 1}));
        CHECK(poly_gcd(a, poly({1, 1})) == poly({1, 1}));
        CHECK(poly_gcd(poly({2, 4}), poly({0})) == poly({1, 2}));
        CHECK(poly_gcd(IntPolynomial{}, IntPolynomial{}).is_zero());
    }

    TEST_CASE("Sturm counts and sign evaluation") {
        const IntPolynomial a = poly({-2, -3, 0, 1});
        const SturmChain chain(a);
        CHECK(chain.root_count() == 2);
        CHECK(chain.count_above(Rational(0)) == 1);
        CHECK(chain.count_above(Rational(-2)) == 2);
        CHECK(chain.count_above(Rational(2)) == 0);
        CHECK(chain.count_in(Rational(-1), Rational(2)) == 1);
        CHECK(a.sign_at(Rational(5, 2)) == 1);
        CHECK(a.sign_at(Rational(-1)) == 0);
        const IntPolynomial p = char_poly_exact(petersen());
        CHECK(SturmChain(p).root_count() == 3);
    }

    TEST_CASE("bracket refinement") {
        LargestRootBracket br(poly({-2, 0, 1}), Rational(-2), Rational(2));  // sqrt 2
        while (br.width() > Rational(1, 1 << 20)) br.bisect();
        CHECK(br.isolated());
        CHECK(br.lo() < Rational(14142136, 10000000));
        CHECK(br.hi() > Rational(14142135, 10000000));
        CHECK_THROWS(LargestRootBracket(poly({-2, 0, 1}), Rational(-2), Rational(1)));
        CHECK_THROWS(LargestRootBracket(poly({-2, 0, 1}), Rational(2), Rational(3)));
    }

    TEST_CASE("exact largest-root comparison") {
        const Rational bound(10);
        CHECK(compare_largest_roots(poly({-2, 0, 1}), poly({-3, 0, 1}), bound) == Ordering::Less);
        CHECK(compare_largest_roots(poly({-3, 0, 1}), poly({-2, 0, 1}), bound) == Ordering::Greater);
        // x^2 - 2 against (x^2 - 2)(x + 5): equal largest root, different polynomials.
        CHECK(compare_largest_roots(poly({-2, 0, 1}), poly({-10, -2, 5, 1}), bound) == Ordering::Equal);
        // Shared root that is not the largest for one side.
        CHECK(compare_largest_roots(poly({-1, 0, 1}), poly({3, -4, 1}), bound) == Ordering::Less);
    }
}

TEST_SUITE("radius comparison") {
    TEST_CASE("spec examples") {
        CHECK(compare_radius(complete(5), complete(4)).order == Ordering::Greater);
        const RadiusComparison same = compare_radius(petersen(), petersen());
        CHECK(same.order == Ordering::Equal);
        CHECK(same.method == DecisionMethod::Exact);
        const RadiusComparison tie = compare_radius(cycle(6), disjoint_union(complete(3), complete(3)));
        CHECK(tie.order == Ordering::Equal);
        CHECK(tie.method == DecisionMethod::Exact);
    }

    TEST_CASE("non-isomorphic equal radii use the exact path") {
        // C_n for all n have radius 2; K_{1,4} also has radius 2.
        for (std::size_t n = 3; n <= 12; ++n) {
            const RadiusComparison c = compare_radius(cycle(n), star(4));
            CHECK(c.order == Ordering::Equal);
            CHECK(c.method == DecisionMethod::Exact);
        }
        // K_1 u K_7 against K_7 u 2K_1: both 6.
        CHECK(compare_radius(h_extremal(8, 1), disjoint_union(complete(7), Graph(2))).order == Ordering::Equal);
    }

    TEST_CASE("agrees with Eigen on random pairs") {
        int decided = 0;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const std::size_t n = 4 + seed % 8;
            const Graph g = random_graph(n, 0.5, seed);
            const Graph h = random_graph(n, 0.5, seed + 1000);
            const double rg = oracle::spectral_radius(g);
            const double rh = oracle::spectral_radius(h);
            const Ordering o = compare_radius(g, h).order;
            if (std::abs(rg - rh) > 1e-7) {
                CHECK(o == (rg < rh ? Ordering::Less : Ordering::Greater));
                ++decided;
            }
            CHECK(compare_radius(h, g).order == (o == Ordering::Less      ? Ordering::Greater
                                                 : o == Ordering::Greater ? Ordering::Less
                                                                          : Ordering::Equal));
        }
        CHECK(decided > 250);
    }
}

TEST_SUITE("bounds and quotients") {
    TEST_CASE("Hong bound examples") {
        CHECK(hong_bound(complete(5)) == doctest::Approx(4.0));
        CHECK(hong_bound(star(4)) == doctest::Approx(2.0));
        CHECK(hong_bound(cycle(5)) == doctest::Approx(std::sqrt(6.0)));
        CHECK_THROWS_AS(hong_bound(h_extremal(8, 1)), std::domain_error);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Graph g = random_graph(2 + seed % 20, 0.3, seed);
            if (!is_connected(g)) continue;
            CHECK(spectral_radius(g).hi <= hong_bound(g) + 1e-9);
        }
    }

    TEST_CASE("quotient matrix examples") {
        for (long long s = 1; s <= 4; ++s)
            for (long long n = 4 * s + 1; n <= 4 * s + 8; ++n) {
                const Graph l = l_family(static_cast<std::size_t>(n), static_cast<std::size_t>(s));
                PartitionClasses pi(3);
                for (long long v = 0; v < s; ++v) pi[0].insert(static_cast<std::size_t>(v));
                for (long long v = n - 3; v < n; ++v) pi[1].insert(static_cast<std::size_t>(v));
                for (long long v = s; v < n - 3; ++v) pi[2].insert(static_cast<std::size_t>(v));
                const QuotientMatrix q = quotient_matrix(l, pi);
                CHECK(q.equitable);
                const IntMatrix expected = l_family_quotient(n, s);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) CHECK(q(i, j) == static_cast<double>(expected[i][j]));
            }
        for (std::size_t a = 2; a <= 5; ++a)
            for (std::size_t n = a + 2; n <= 12; ++n) {
                PartitionClasses pi(3);
                for (std::size_t v = 0; v + 1 < a; ++v) pi[0].insert(v);
                pi[1].insert(a - 1);
                for (std::size_t v = a; v < n; ++v) pi[2].insert(v);
                const QuotientMatrix q = quotient_matrix(h_extremal(n, a), pi);
                CHECK(q.equitable);
                const double na = static_cast<double>(n - a);
                const double am1 = static_cast<double>(a - 1);
                const std::vector<double> expected{am1 - 1, 1, na, am1, 0, 0, am1, 0, na - 1};
                CHECK(q.entries == expected);
            }
        const QuotientMatrix k4 = quotient_matrix(complete(4), {VertexSet{0}, VertexSet{1, 2, 3}});
        CHECK(k4.entries == std::vector<double>{0, 3, 1, 2});
        CHECK(k4.equitable);
        CHECK(quotient_lambda1(k4) == doctest::Approx(3.0).epsilon(1e-10));
        CHECK_FALSE(quotient_matrix(path(4), {VertexSet{0, 1}, VertexSet{2, 3}}).equitable);
        CHECK_THROWS_AS(quotient_radius(quotient_matrix(path(4), {VertexSet{0, 1}, VertexSet{2, 3}})),
                        std::invalid_argument);
    }

    TEST_CASE("quotient radius equals the graph radius") {
        PartitionClasses pi(3);
        for (std::size_t v = 0; v < 2; ++v) pi[0].insert(v);
        pi[1].insert(2);
        for (std::size_t v = 3; v < 9; ++v) pi[2].insert(v);
        const QuotientMatrix q = quotient_matrix(h_extremal(9, 3), pi);
        CHECK(std::abs(quotient_lambda1(q) - spectral_radius(h_extremal(9, 3)).midpoint()) <= 1e-9);
        CHECK(std::abs(quotient_lambda1(q) - oracle::spectral_radius(h_extremal(9, 3))) <= 1e-9);

        QuotientMatrix l13;
        l13.k = 3;
        l13.equitable = true;
        for (const auto& row : l_family_quotient(13, 3))
            for (long long v : row) l13.entries.push_back(static_cast<double>(v));
        CHECK(quotient_lambda1(l13) < 11.0);
        std::vector<std::vector<double>> dense{{2, 3, 7}, {3, 0, 0}, {3, 0, 6}};
        CHECK(std::abs(quotient_lambda1(l13) - oracle::largest_real_eigenvalue(dense)) <= 1e-9);
    }

    TEST_CASE("L-family polynomial values") {
        const LFamilyPolyCheck c = lemma6_poly_values(13, 3);
        CHECK(c.f_at_n_minus_2 == 219);
        CHECK(c.f_at_n_minus_4 == -27);
        CHECK(c.trace == 8);
        CHECK(c.holds());
        CHECK(lemma6_poly_values(5, 1).f_at_n_minus_2 == 15);
        for (long long s = 1; s <= 8; ++s)
            for (long long n = 4 * s + 1; n <= 4 * s + 40; ++n) {
                const LFamilyPolyCheck p = lemma6_poly_values(n, s);
                CHECK(p.holds());
                // Independent evaluation: det(xI - B) by cofactor expansion.
                const IntMatrix b = l_family_quotient(n, s);
                auto det3 = [&](long long x) {
                    const long long m00 = x - b[0][0], m01 = -b[0][1], m02 = -b[0][2];
                    const long long m10 = -b[1][0], m11 = x - b[1][1], m12 = -b[1][2];
                    const long long m20 = -b[2][0], m21 = -b[2][1], m22 = x - b[2][2];
                    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20);
                };
                CHECK(p.f_at_n_minus_2 == det3(n - 2));
                CHECK(p.f_at_n_minus_4 == det3(n - 4));
            }
        CHECK_THROWS_AS(lemma6_poly_values(8, 2), std::invalid_argument);
        CHECK_THROWS_AS(lemma6_poly_values(8, 0), std::invalid_argument);
    }
}

TEST_SUITE("closed-form thresholds") {
    TEST_CASE("KOPR threshold") {
        CHECK(std::abs(kopr_threshold(3, 1) - std::sqrt(32.0) / 2.0) <= 1e-12);
        CHECK(std::abs(kopr_threshold(4, 1) - (2.0 + std::sqrt(28.0)) / 2.0) <= 1e-12);
        CHECK(std::abs(kopr_threshold(5, 3) - (2.0 + std::sqrt(60.0)) / 2.0) <= 1e-12);
        CHECK_THROWS_AS(kopr_threshold(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(kopr_threshold(5, 2), std::invalid_argument);
        CHECK_THROWS_AS(kopr_threshold(5, 5), std::invalid_argument);
    }

    TEST_CASE("order bound") {
        CHECK(theorem_n_bound(1, 1) == 8);
        CHECK(theorem_n_bound(1, 3) == 8);
        CHECK(theorem_n_bound(2, 4) == 18);
        CHECK(theorem_n_bound(2, 2) == 18);
        CHECK(theorem_n_bound(3, 9) == 32);
    }
}
