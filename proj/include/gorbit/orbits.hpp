// Orbits of the nine special points, the finiteness test for the orbit set
// O (orbits whose nonzero elements all lie on the unit circle), the zeros of
// the G-orbit height, and root-of-unity witnesses.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gorbit/heights.hpp"
#include "gorbit/mobius.hpp"
#include "gorbit/quad_point.hpp"

namespace gorbit {

struct Orbit {
    std::vector<ExtendedPoint> points; // canonical order, infinity last

    friend bool operator==(const Orbit& x, const Orbit& y) { return x.points == y.points; }
    friend bool operator<(const Orbit& x, const Orbit& y) {
        return std::lexicographical_compare(x.points.begin(), x.points.end(), y.points.begin(),
                                            y.points.end());
    }
    bool contains(const ExtendedPoint& p) const {
        return std::find(points.begin(), points.end(), p) != points.end();
    }
};

struct OrbitSetO {
    bool infinite = false;
    std::vector<Orbit> orbits; // meaningful only when finite; canonical order
};

// 0, ±1, ±i and the four primitive third/sixth roots of unity: the only
// points whose full orbit can consist of 0 and roots of unity
inline std::vector<QuadPoint> special_points() {
    std::vector<QuadPoint> pts;
    pts.push_back(QuadPoint::zero());
    for (const auto& q : quadratic_roots_of_unity()) pts.push_back(q);
    return pts;
}

inline Orbit orbit_of(const FiniteGroup& G, const ExtendedPoint& p) {
    std::set<ExtendedPoint> seen;
    for (const auto& sigma : G.elements()) seen.insert(sigma.apply(p));
    Orbit o;
    o.points.assign(seen.begin(), seen.end());
    return o;
}

// O is infinite iff G sits inside {I, (0,1;1,0), (a,b;-b,-a), (b,a;-a,-b)}
// for one rational pair (a, b) with a^2 != b^2. Exact shape test on the
// canonical integer representatives.
inline bool is_O_infinite(const FiniteGroup& G) {
    const MobiusMap swap_map(0, 1, 1, 0);
    std::vector<std::pair<mpz_class, mpz_class>> anti_pairs;
    for (const auto& s : G.elements()) {
        if (s.is_identity() || s == swap_map) continue;
        // canonical (a,b;-b,-a) shape
        if (s.c() == -s.b() && s.d() == -s.a()) {
            anti_pairs.emplace_back(s.a(), s.b());
            continue;
        }
        return false;
    }
    if (anti_pairs.size() <= 1) return true;
    if (anti_pairs.size() > 2) return false;
    // the two shapes must be each other's swap: (a,b) and (b,a)
    MobiusMap expected(anti_pairs[0].second, anti_pairs[0].first, -anti_pairs[0].first,
                       -anti_pairs[0].second);
    MobiusMap got(anti_pairs[1].first, anti_pairs[1].second, -anti_pairs[1].second,
                  -anti_pairs[1].first);
    return expected == got;
}

inline bool orbit_qualifies_for_O(const Orbit& o) {
    for (const auto& p : o.points) {
        if (p.is_infinity()) return false;
        if (!p.finite().is_zero() && !unit_circle_test(p.finite())) return false;
    }
    return true;
}

// the set O: infinite for the swap-shaped groups, otherwise the qualifying
// orbits of the nine special points
inline OrbitSetO compute_O(const FiniteGroup& G) {
    OrbitSetO result;
    if (is_O_infinite(G)) {
        result.infinite = true;
        return result;
    }
    std::set<Orbit> orbits;
    for (const auto& p : special_points()) {
        Orbit o = orbit_of(G, ExtendedPoint(p));
        if (orbit_qualifies_for_O(o)) orbits.insert(std::move(o));
    }
    result.orbits.assign(orbits.begin(), orbits.end());
    return result;
}

// the exact zero set of h_G: special points whose full orbit consists of 0,
// infinity and roots of unity. Distinct from membership in O: an orbit
// through infinity can still be height-zero.
inline std::vector<QuadPoint> height_zeros(const FiniteGroup& G) {
    if (is_O_infinite(G))
        throw std::runtime_error("O infinite: zeros are all roots of unity");
    std::vector<QuadPoint> zeros;
    for (const auto& p : special_points()) {
        Orbit o = orbit_of(G, ExtendedPoint(p));
        bool all_zero_height = true;
        for (const auto& q : o.points) {
            if (q.is_infinity()) continue;
            if (q.finite().is_zero()) continue;
            if (!is_root_of_unity_quad(q.finite())) {
                all_zero_height = false;
                break;
            }
        }
        if (all_zero_height) zeros.push_back(p);
    }
    return zeros;
}

struct UnityWitness {
    int order;             // n with h_G(zeta_n) > 0
    RealInterval height;   // certified positive enclosure
};

// smallest n <= order_bound whose primitive n-th roots have positive G-orbit
// height; existence is guaranteed whenever O is finite
inline UnityWitness unity_witness(const FiniteGroup& G, int order_bound = 60,
                                  mpfr_prec_t precision_bits = kDefaultPrecision) {
    if (order_bound < 1) throw std::invalid_argument("order bound must be >= 1");
    for (int n = 1; n <= order_bound; ++n) {
        AlgebraicNumber zeta = AlgebraicNumber::unchecked(cyclotomic(n));
        RealInterval h = orbit_height(G, zeta, precision_bits);
        if (h.certainly_positive()) return {n, std::move(h)};
    }
    if (is_O_infinite(G)) throw std::runtime_error("no witness exists (O infinite)");
    throw std::runtime_error("bound too small");
}

} // namespace gorbit
