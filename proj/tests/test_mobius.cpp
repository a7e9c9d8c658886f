#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gorbit/factor.hpp"
#include "gorbit/mobius.hpp"
#include "gorbit/parse.hpp"

using namespace gorbit;

TEST_CASE("normalization of projective representatives") {
    CHECK(MobiusMap(2, 4, 6, -2) == MobiusMap(1, 2, 3, -1));
    CHECK(MobiusMap(-1, 0, 0, 1) == MobiusMap(1, 0, 0, -1));
    CHECK(MobiusMap(1, 0, 5, -1) == parse_mobius("1,0;5,-1"));
    CHECK(parse_mobius("1/2,0;5/2,-1/2") == MobiusMap(1, 0, 5, -1));
    CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), std::invalid_argument); // singular
    // normalization is idempotent
    MobiusMap s(3, -6, 9, 3);
    CHECK(MobiusMap(s.a(), s.b(), s.c(), s.d()) == s);
}

TEST_CASE("composition and inverse") {
    MobiusMap s(1, -1, 3, 1);
    CHECK(compose(s, inverse(s)).is_identity());
    CHECK(compose(s, s) == MobiusMap(1, 1, -3, 1));
    MobiusMap j(0, 1, 1, 0);
    CHECK(inverse(j) == j);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-6, 6);
    int done = 0;
    while (done < 120) {
        long vals[12];
        for (auto& v : vals) v = d(rng);
        try {
            MobiusMap a(vals[0], vals[1], vals[2], vals[11]);
            MobiusMap b(vals[3], vals[4], vals[5], vals[6]);
            MobiusMap c(vals[7], vals[8], vals[9], vals[10]);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
            CHECK(inverse(inverse(b)) == b);
            CHECK(compose(a, inverse(a)).is_identity());
            ++done;
        } catch (const std::invalid_argument&) {
            continue; // singular draw
        }
    }
}

TEST_CASE("torsion order detection") {
    CHECK(MobiusMap(1, -1, 3, 1).order() == 3);
    CHECK(MobiusMap(2, -1, 1, 1).order() == 6);
    CHECK_FALSE(MobiusMap(2, 0, 0, 1).order().has_value());
    CHECK(MobiusMap(1, 1, -1, 1).order() == 4);
    CHECK(MobiusMap().order() == 1);
}

TEST_CASE("group generation") {
    FiniteGroup d3 = FiniteGroup::generate({MobiusMap(1, -1, 3, 1), MobiusMap(1, 0, 0, -1)});
    CHECK(d3.size() == 6);
    CHECK(FiniteGroup::generate({MobiusMap()}).size() == 1);
    CHECK_THROWS_AS(FiniteGroup::generate({MobiusMap(2, 0, 0, 1)}), std::runtime_error);
    // order of an element divides the group order; sizes from the finite
    // subgroup classification only
    for (const auto& s : d3.elements()) {
        auto k = s.order();
        REQUIRE(k.has_value());
        CHECK(d3.size() % *k == 0);
    }
    for (size_t n : {d3.size(), FiniteGroup::generate({MobiusMap(1, 1, -1, 1)}).size()}) {
        bool allowed = n == 1 || n == 2 || n == 3 || n == 4 || n == 6 || n == 8 || n == 12;
        CHECK(allowed);
    }
}

TEST_CASE("action on extended points") {
    MobiusMap s(1, -1, 3, 1);
    CHECK(s.apply(ExtendedPoint(QuadPoint::zero())) == ExtendedPoint(QuadPoint::rational(-1)));
    CHECK(s.apply(ExtendedPoint(QuadPoint(0, 1, -1))) ==
          ExtendedPoint(QuadPoint(mpq_class(1, 5), mpq_class(2, 5), -1)));
    CHECK(s.apply(ExtendedPoint::infinity()) ==
          ExtendedPoint(QuadPoint::rational(mpq_class(1, 3))));
    // pole goes to infinity
    CHECK(s.apply(ExtendedPoint(QuadPoint::rational(mpq_class(-1, 3)))).is_infinity());
    // z -> z + 1 fixes infinity
    CHECK(MobiusMap(1, 1, 0, 1).apply(ExtendedPoint::infinity()).is_infinity());
}

TEST_CASE("action respects composition") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-5, 5);
    std::vector<ExtendedPoint> pts = {
        ExtendedPoint(QuadPoint::zero()), ExtendedPoint(QuadPoint(0, 1, -1)),
        ExtendedPoint(QuadPoint(mpq_class(1, 2), mpq_class(1, 2), -3)),
        ExtendedPoint(QuadPoint::rational(mpq_class(7, 3))), ExtendedPoint::infinity()};
    int done = 0;
    while (done < 80) {
        try {
            MobiusMap s(d(rng), d(rng), d(rng), d(rng));
            MobiusMap t(d(rng), d(rng), d(rng), d(rng));
            for (const auto& p : pts)
                CHECK(compose(s, t).apply(p) == s.apply(t.apply(p)));
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("minimal polynomial pullback") {
    CHECK(pullback_minpoly(Poly{-2, 1}, MobiusMap(0, 1, 1, 0)) == Poly{-1, 2}); // 2 -> 1/2
    // z -> 1 - z maps the golden ratio to its algebraic conjugate
    CHECK(pullback_minpoly(parse_poly("x^2-x-1"), MobiusMap(-1, 1, 0, 1)) ==
          parse_poly("x^2-x-1"));
    CHECK_THROWS_AS(pullback_minpoly(Poly{-1, 3}, MobiusMap(1, -1, 3, 1)), OrbitHitsInfinity);
    try {
        pullback_minpoly(Poly{-1, 3}, MobiusMap(1, -1, 3, 1));
    } catch (const OrbitHitsInfinity& e) {
        CHECK(e.degree_drop == 1);
    }
}

TEST_CASE("pullback round-trips along the inverse map") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-4, 4);
    int done = 0;
    while (done < 120) {
        Poly f;
        std::uniform_int_distribution<int> degd(1, 4);
        int deg = degd(rng);
        std::vector<mpz_class> c(deg + 1);
        for (auto& v : c) v = d(rng);
        f = Poly(std::move(c));
        if (f.is_zero() || f.degree() < 1) continue;
        f = primitive_part(f);
        if (f.leading() < 0) f = -f;
        try {
            if (!is_irreducible(f)) continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
        try {
            MobiusMap s(d(rng), d(rng), d(rng), d(rng));
            Poly g = pullback_minpoly(f, s);
            CHECK(pullback_minpoly(g, inverse(s)) == f);
            ++done;
        } catch (const std::invalid_argument&) {
        } catch (const OrbitHitsInfinity&) {
        }
    }
}

TEST_CASE("pullback annihilates the image of a root") {
    // f(alpha) = 0  =>  pullback_minpoly(f, s) vanishes at s^{-1}(alpha)
    Poly f{1, 0, 1}; // alpha = i
    QuadPoint alpha(0, 1, -1);
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> d(-5, 5);
    int done = 0;
    while (done < 60) {
        try {
            MobiusMap s(d(rng), d(rng), d(rng), d(rng));
            Poly g = pullback_minpoly(f, s);
            ExtendedPoint image = inverse(s).apply(ExtendedPoint(alpha));
            REQUIRE_FALSE(image.is_infinity());
            CHECK(g.eval_quad(image.finite()).is_zero());
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("mobius text grammar") {
    MobiusMap s = parse_mobius("1,-1;3,1");
    CHECK(format_mobius(s) == "1,-1;3,1");
    CHECK(parse_mobius(format_mobius(s)) == s);
    CHECK_THROWS_AS(parse_mobius("1,2,3,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_mobius("1,1;1,1"), std::invalid_argument); // singular
    FiniteGroup g = parse_group("1,-1;3,1|1,0;0,-1");
    CHECK(g.size() == 6);
}
