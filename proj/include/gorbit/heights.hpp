// Mahler measure, Weil height, G-orbit height and the orbit Mahler product,
// all as certified enclosures.
//
// Cyclotomic factors and powers of x are stripped exactly first, so heights
// that are zero come out as the point interval [0, 0] and measures of
// polynomials whose remaining roots avoid the unit circle are exact
// integers. Everything else goes through certified root enclosures.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "gorbit/factor.hpp"
#include "gorbit/interval.hpp"
#include "gorbit/mobius.hpp"
#include "gorbit/poly.hpp"
#include "gorbit/roots.hpp"

namespace gorbit {

class AlgebraicNumber {
public:
    // validates: irreducible, primitive, positive leading coefficient
    explicit AlgebraicNumber(Poly minpoly, std::optional<ComplexInterval> selector = std::nullopt)
        : minpoly_(std::move(minpoly)), selector_(std::move(selector)) {
        if (minpoly_.is_zero() || minpoly_.degree() < 1)
            throw std::invalid_argument("minimal polynomial must have degree >= 1");
        if (minpoly_.leading() < 0) minpoly_ = -minpoly_;
        if (!is_irreducible(minpoly_))
            throw std::invalid_argument("minimal polynomial must be irreducible");
    }
    // caller guarantees irreducibility (enumeration streams, pullbacks)
    static AlgebraicNumber unchecked(Poly minpoly) {
        AlgebraicNumber a;
        a.minpoly_ = std::move(minpoly);
        if (a.minpoly_.leading() < 0) a.minpoly_ = -a.minpoly_;
        return a;
    }
    static AlgebraicNumber from_quad(const QuadPoint& p) {
        if (p.is_rational()) return unchecked(Poly::linear_for_rational(p.a()));
        // x^2 - 2a x + (a^2 - d b^2), cleared to integer coefficients
        mpq_class s = 2 * p.a();
        mpq_class n = p.norm();
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), s.get_den().get_mpz_t(), n.get_den().get_mpz_t());
        std::vector<mpz_class> c(3);
        c[2] = l;
        c[1] = -mpz_class(s.get_num() * (l / s.get_den()));
        c[0] = mpz_class(n.get_num() * (l / n.get_den()));
        return unchecked(primitive_part(Poly(std::move(c))));
    }

    const Poly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const std::optional<ComplexInterval>& selector() const { return selector_; }

private:
    AlgebraicNumber() = default;
    Poly minpoly_;
    std::optional<ComplexInterval> selector_;
};

// certified enclosure of M(f) = |a_n| prod max(|root|, 1)
inline RealInterval mahler_measure(const Poly& f, mpfr_prec_t precision_bits = kDefaultPrecision) {
    if (f.is_zero()) throw std::invalid_argument("Mahler measure of zero polynomial");
    auto [cont, prim] = content_primitive(f);
    RealInterval m = RealInterval::from_mpz(cont, precision_bits);
    Poly g = prim.strip_zero_roots();
    if (g.leading() < 0) g = -g;
    if (is_cyclotomic_product(g)) return m; // measure of the primitive part is exactly 1
    // peel cyclotomic factors so near-circle roots of unity never reach the
    // numeric path
    int bound = 2 * g.degree() * g.degree() + 8;
    for (int mm = 1; mm <= bound && g.degree() > 0; ++mm) {
        if (euler_phi(mm) > g.degree()) continue;
        while (true) {
            auto q = divide_exact(g, cyclotomic(mm));
            if (!q) break;
            g = *q;
        }
    }
    if (g.degree() == 0) return m; // fully cyclotomic (content already counted)
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
        RealInterval pm = RealInterval::from_mpz(part.leading(), precision_bits).abs();
        for (const auto& box : complex_roots(part, precision_bits)) pm *= box.abs().max1();
        m *= pm.pow_ui(static_cast<unsigned long>(mult));
    }
    return m;
}

// h(alpha) = (1/deg) log M(minpoly); exactly [0,0] on 0 and roots of unity
inline RealInterval weil_height(const AlgebraicNumber& x,
                                mpfr_prec_t precision_bits = kDefaultPrecision) {
    RealInterval m = mahler_measure(x.minpoly(), precision_bits);
    if (m.is_exact() && m.contains_long(1)) return RealInterval(precision_bits); // exact zero
    return m.log().div_ui(static_cast<unsigned long>(x.degree()));
}

namespace detail {

// height of sigma(alpha) given the minpoly f of alpha: pull back along
// sigma^{-1}. A conjugate sent to infinity (linear f hitting a pole) is
// simply absent from the reduced polynomial and contributes the height of
// [1:0], which is 0, so the remaining factor carries the whole sum.
inline RealInterval height_of_image(const Poly& f, const MobiusMap& sigma,
                                    mpfr_prec_t precision_bits) {
    Pullback pb = pullback_full(f, inverse(sigma));
    RealInterval m = mahler_measure(pb.reduced, precision_bits);
    if (m.is_exact() && m.contains_long(1)) return RealInterval(precision_bits);
    return m.log().div_ui(static_cast<unsigned long>(f.degree()));
}

} // namespace detail

// h_G(x) = sum over sigma in G of h(sigma x); a function of the minimal
// polynomial only, no root selector involved
inline RealInterval orbit_height(const FiniteGroup& G, const AlgebraicNumber& x,
                                 mpfr_prec_t precision_bits = kDefaultPrecision) {
    RealInterval total(precision_bits);
    for (const auto& sigma : G.elements())
        total += detail::height_of_image(x.minpoly(), sigma, precision_bits);
    return total;
}

// prod over sigma in G of M(f_sigma); log of it equals deg(f) * h_G
inline RealInterval mahler_orbit_product(const FiniteGroup& G, const Poly& f,
                                         mpfr_prec_t precision_bits = kDefaultPrecision) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("mahler_orbit_product requires degree >= 1");
    RealInterval prod = RealInterval::exact_long(1, precision_bits);
    for (const auto& sigma : G.elements()) {
        Poly fs = pullback_minpoly(f, sigma); // propagates OrbitHitsInfinity
        prod *= mahler_measure(fs, precision_bits);
    }
    return prod;
}

} // namespace gorbit
