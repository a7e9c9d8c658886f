#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gorbit/heights.hpp"
#include "gorbit/parse.hpp"
#include "gorbit/roots.hpp"

using namespace gorbit;

namespace {
const Poly kLehmer = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
}

TEST_CASE("certified complex roots") {
    auto r1 = complex_roots(Poly{1, 0, 1});
    REQUIRE(r1.size() == 2);
    for (const auto& b : r1) {
        CHECK(b.re.contains_long(0));
        CHECK(b.abs().contains_long(1));
        CHECK(b.max_side() < 1e-19);
    }
    // quadratic-formula oracle: roots of x^2 - x - 1 are (1 ± sqrt 5)/2
    auto r2 = complex_roots(parse_poly("x^2-x-1"));
    RealInterval five = RealInterval::exact_long(5, 192);
    double golden = (1 + std::sqrt(5.0)) / 2;
    bool found_golden = false, found_conj = false;
    for (const auto& b : r2) {
        if (std::fabs(b.re.mid_double() - golden) < 1e-15) found_golden = true;
        if (std::fabs(b.re.mid_double() - (1 - golden)) < 1e-12) found_conj = true;
    }
    CHECK(found_golden);
    CHECK(found_conj);
    // largest real root of the degree-10 polynomial
    auto r3 = complex_roots(kLehmer);
    REQUIRE(r3.size() == 10);
    double maxreal = -10;
    for (const auto& b : r3)
        if (b.im.contains_long(0) && b.im.width_double() < 1e-18)
            maxreal = std::max(maxreal, b.re.mid_double());
    CHECK(maxreal == Catch::Approx(1.17628081825991750654).epsilon(1e-15));
    CHECK_THROWS_AS(complex_roots(Poly{1, 2, 1}), std::invalid_argument); // not squarefree
}

TEST_CASE("root boxes are disjoint and contain one root each") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(-9, 9);
    int done = 0;
    while (done < 40) {
        std::vector<mpz_class> c(5);
        for (auto& v : c) v = d(rng);
        Poly f(std::move(c));
        if (f.degree() < 2) continue;
        if (poly_gcd(f, f.derivative()).degree() > 0) continue;
        auto boxes = complex_roots(f, 96);
        CHECK(static_cast<int>(boxes.size()) == f.degree());
        for (size_t i = 0; i < boxes.size(); ++i) {
            // interval evaluation of f on the box must contain zero
            ComplexInterval v = f.eval_ci(boxes[i]);
            CHECK(v.contains_zero());
            for (size_t j = i + 1; j < boxes.size(); ++j) {
                bool re_apart = boxes[i].re.certainly_less(boxes[j].re) ||
                                boxes[j].re.certainly_less(boxes[i].re);
                bool im_apart = boxes[i].im.certainly_less(boxes[j].im) ||
                                boxes[j].im.certainly_less(boxes[i].im);
                CHECK((re_apart || im_apart));
            }
        }
        ++done;
    }
}

TEST_CASE("mahler measure basics") {
    CHECK(mahler_measure(Poly{-2, 1}).contains_long(2));
    CHECK(mahler_measure(Poly{-2, 1}).is_exact());
    RealInterval lehmer = mahler_measure(kLehmer);
    CHECK(lehmer.mid_double() == Catch::Approx(1.17628081825991750654).epsilon(1e-14));
    CHECK(lehmer.width_double() < 1e-20);
    // cyclotomic input gives exactly 1
    RealInterval phi10 = mahler_measure(parse_poly("x^4-x^3+x^2-x+1"));
    CHECK(phi10.is_exact());
    CHECK(phi10.contains_long(1));
    // roots strictly inside the disk give the exact leading coefficient
    RealInterval m5 = mahler_measure(parse_poly("5*x^2-2*x+1"));
    CHECK(m5.is_exact());
    CHECK(m5.contains_long(5));
    CHECK(mahler_measure(Poly{0, 0, 7}).contains_long(7)); // 7 x^2
    CHECK_THROWS_AS(mahler_measure(Poly::zero()), std::invalid_argument);
    // golden ratio
    CHECK(mahler_measure(parse_poly("x^2-x-1")).mid_double() ==
          Catch::Approx(1.61803398874989484820).epsilon(1e-14));
}

TEST_CASE("mahler measure is multiplicative") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> d(-5, 5);
    int done = 0;
    while (done < 150) {
        std::vector<mpz_class> a(4), b(5);
        for (auto& v : a) v = d(rng);
        for (auto& v : b) v = d(rng);
        Poly f(std::move(a)), g(std::move(b));
        if (f.is_zero() || g.is_zero()) continue;
        RealInterval mf = mahler_measure(f), mg = mahler_measure(g), mfg = mahler_measure(f * g);
        double rel = std::fabs(mfg.mid_double() - mf.mid_double() * mg.mid_double()) /
                     mfg.mid_double();
        CHECK(rel < 1e-10);
        ++done;
    }
}

TEST_CASE("graeffe root squaring cross-check") {
    // independent oracle: M(g)^... with g(x^2) = ±f(x) f(-x), M(g) = M(f)^2
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> d(-6, 6);
    int done = 0;
    while (done < 150) {
        std::vector<mpz_class> c(5);
        for (auto& v : c) v = d(rng);
        Poly f(std::move(c));
        if (f.is_zero()) continue;
        Poly g = graeffe(f);
        REQUIRE(!g.is_zero());
        double mf = mahler_measure(f).mid_double();
        double mg = mahler_measure(g).mid_double();
        CHECK(std::fabs(mg - mf * mf) / std::max(1.0, mg) < 1e-10);
        ++done;
    }
}

TEST_CASE("weil height") {
    CHECK(weil_height(AlgebraicNumber(Poly{-2, 1})).mid_double() ==
          Catch::Approx(std::log(2.0)).epsilon(1e-15));
    RealInterval h12 = weil_height(AlgebraicNumber(cyclotomic(12)));
    CHECK(h12.is_exact());
    CHECK(h12.contains_long(0));
    CHECK(weil_height(AlgebraicNumber(parse_poly("5*x^2-2*x+1"))).mid_double() ==
          Catch::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
    CHECK(weil_height(AlgebraicNumber(Poly{0, 1})).contains_long(0)); // h(0) = 0
    CHECK_THROWS_AS(AlgebraicNumber(parse_poly("x^4+4")), std::invalid_argument);
}

TEST_CASE("orbit height reproduces the table constants") {
    FiniteGroup c3 = parse_group("1,-1;3,1");
    RealInterval hi = orbit_height(c3, AlgebraicNumber(Poly{1, 0, 1}));
    CHECK(hi.mid_double() == Catch::Approx(std::log(5.0)).epsilon(1e-15));
    CHECK(hi.width_double() < 1e-30);
    FiniteGroup zz = parse_group("-1,1;0,1"); // {z, 1-z}
    CHECK(zz.size() == 2);
    RealInterval hz = orbit_height(zz, AlgebraicNumber(parse_poly("x^4-x^3+x^2-x+1")));
    CHECK(hz.mid_double() == Catch::Approx(0.2406059125298017).epsilon(1e-12));
    RealInterval h0 = orbit_height(c3, AlgebraicNumber(Poly{0, 1}));
    CHECK(h0.is_exact());
    CHECK(h0.contains_long(0));
}

TEST_CASE("orbit height is nonnegative and G-invariant") {
    FiniteGroup c3 = parse_group("1,-1;3,1");
    std::mt19937 rng(43);
    std::uniform_int_distribution<long> d(-4, 4);
    int done = 0;
    while (done < 50) {
        std::vector<mpz_class> c(3);
        for (auto& v : c) v = d(rng);
        Poly f(std::move(c));
        if (f.degree() < 1) continue;
        f = primitive_part(f);
        if (f.leading() < 0) f = -f;
        if (!is_irreducible(f)) continue;
        RealInterval h = orbit_height(c3, AlgebraicNumber::unchecked(f));
        CHECK(h.hi_double() >= 0);
        // replace alpha by sigma(alpha) for every sigma in G
        for (const auto& sigma : c3.elements()) {
            Pullback pb = pullback_full(f, inverse(sigma));
            if (pb.degree_drop != 0) continue;
            RealInterval hs = orbit_height(c3, AlgebraicNumber::unchecked(pb.reduced));
            CHECK(std::fabs(hs.mid_double() - h.mid_double()) <
                  1e-12 + hs.width_double() + h.width_double());
        }
        ++done;
    }
}

TEST_CASE("orbit mahler product") {
    FiniteGroup c3 = parse_group("1,-1;3,1");
    RealInterval prod = mahler_orbit_product(c3, Poly{1, 0, 1});
    CHECK(prod.is_exact());
    CHECK(prod.contains_long(25));
    CHECK(prod.width_double() < 1e-20);
    // trivial group: the product is the plain measure
    FiniteGroup triv = FiniteGroup::trivial();
    CHECK(mahler_orbit_product(triv, kLehmer).mid_double() ==
          Catch::Approx(1.17628081825991750654).epsilon(1e-14));
    // {z, 1-z} on the tenth cyclotomic: golden ratio squared
    FiniteGroup zz = parse_group("-1,1;0,1");
    CHECK(mahler_orbit_product(zz, parse_poly("x^4-x^3+x^2-x+1")).mid_double() ==
          Catch::Approx(2.61803398874989484820).epsilon(1e-12));
}

TEST_CASE("log of the orbit product equals degree times orbit height") {
    FiniteGroup c3 = parse_group("1,-1;3,1");
    std::mt19937 rng(47);
    std::uniform_int_distribution<long> d(-3, 3);
    int done = 0;
    while (done < 60) {
        std::uniform_int_distribution<int> degd(1, 4);
        std::vector<mpz_class> c(degd(rng) + 1);
        for (auto& v : c) v = d(rng);
        Poly f(std::move(c));
        if (f.is_zero() || f.degree() < 1) continue;
        f = primitive_part(f);
        if (f.leading() < 0) f = -f;
        if (!is_irreducible(f)) continue;
        try {
            RealInterval prod = mahler_orbit_product(c3, f);
            RealInterval h = orbit_height(c3, AlgebraicNumber::unchecked(f));
            double lhs = std::log(prod.mid_double());
            double rhs = f.degree() * h.mid_double();
            CHECK(std::fabs(lhs - rhs) < 1e-10);
            ++done;
        } catch (const OrbitHitsInfinity&) {
            // linear polynomial hitting a pole: product route not defined
        }
    }
}
