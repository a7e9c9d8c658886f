// Elements of PGL2(Q) as canonically normalized nonsingular 2x2 integer
// matrices, finite subgroup generation, the action on extended points, and
// the minimal-polynomial pullback f_sigma(z) = C (cz+d)^n f(sigma(z)).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gorbit/poly.hpp"
#include "gorbit/quad_point.hpp"

namespace gorbit {

class MobiusMap {
public:
    // identity
    MobiusMap() : a_(1), b_(0), c_(0), d_(1) {}

    MobiusMap(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        normalize();
    }

    static MobiusMap from_rationals(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                    const mpq_class& d) {
        mpz_class l = 1;
        for (const mpq_class* v : {&a, &b, &c, &d})
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v->get_den().get_mpz_t());
        auto scale = [&](const mpq_class& v) { return mpz_class(v.get_num() * (l / v.get_den())); };
        return MobiusMap(scale(a), scale(b), scale(c), scale(d));
    }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    mpz_class det() const { return a_ * d_ - b_ * c_; }
    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    friend MobiusMap compose(const MobiusMap& s, const MobiusMap& t) {
        return MobiusMap(s.a_ * t.a_ + s.b_ * t.c_, s.a_ * t.b_ + s.b_ * t.d_,
                         s.c_ * t.a_ + s.d_ * t.c_, s.c_ * t.b_ + s.d_ * t.d_);
    }
    friend MobiusMap inverse(const MobiusMap& s) { return MobiusMap(s.d_, -s.b_, -s.c_, s.a_); }

    // least k <= 6 with s^k = identity in PGL2, else nullopt; torsion orders
    // of PGL2(Q) are 1, 2, 3, 4, 6
    std::optional<int> order() const {
        MobiusMap p = *this;
        for (int k = 1; k <= 6; ++k) {
            if (p.is_identity()) return k;
            p = compose(p, *this);
        }
        return std::nullopt;
    }

    ExtendedPoint apply(const ExtendedPoint& p) const {
        if (p.is_infinity()) {
            if (c_ == 0) return ExtendedPoint::infinity();
            return ExtendedPoint(QuadPoint::rational(mpq_class(a_, c_)));
        }
        const QuadPoint& z = p.finite();
        QuadPoint num = QuadPoint::rational(mpq_class(a_)) * z + QuadPoint::rational(mpq_class(b_));
        QuadPoint den = QuadPoint::rational(mpq_class(c_)) * z + QuadPoint::rational(mpq_class(d_));
        if (den.is_zero()) return ExtendedPoint::infinity();
        return ExtendedPoint(num / den);
    }

    std::complex<double> apply_cd(std::complex<double> z) const {
        return (a_.get_d() * z + b_.get_d()) / (c_.get_d() * z + d_.get_d());
    }

    // pole of the transformation, if any (c != 0)
    std::optional<mpq_class> pole() const {
        if (c_ == 0) return std::nullopt;
        mpq_class p(-d_, c_);
        p.canonicalize();
        return p;
    }

    friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator<(const MobiusMap& x, const MobiusMap& y) {
        return std::tie(x.a_, x.b_, x.c_, x.d_) < std::tie(y.a_, y.b_, y.c_, y.d_);
    }

private:
    void normalize() {
        if (a_ * d_ - b_ * c_ == 0) throw std::invalid_argument("singular matrix");
        mpz_class g = 0;
        for (const mpz_class* v : {&a_, &b_, &c_, &d_})
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
        a_ /= g;
        b_ /= g;
        c_ /= g;
        d_ /= g;
        for (const mpz_class* v : {&a_, &b_, &c_, &d_}) {
            if (*v != 0) {
                if (*v < 0) {
                    a_ = -a_;
                    b_ = -b_;
                    c_ = -c_;
                    d_ = -d_;
                }
                break;
            }
        }
    }
    mpz_class a_, b_, c_, d_;
};

class FiniteGroup {
public:
    // closure of the generators under composition; throws when the closure
    // exceeds 24 elements (a safety margin over the hard bound 12)
    static FiniteGroup generate(std::vector<MobiusMap> gens) {
        std::set<MobiusMap> elems;
        elems.insert(MobiusMap());
        for (const auto& g : gens) elems.insert(g);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<MobiusMap> cur(elems.begin(), elems.end());
            for (const auto& s : cur) {
                for (const auto& t : cur) {
                    if (elems.insert(compose(s, t)).second) {
                        grew = true;
                        if (elems.size() > 24)
                            throw std::runtime_error("group not finite (closure exceeded bound)");
                    }
                }
            }
        }
        FiniteGroup g;
        g.elements_.assign(elems.begin(), elems.end());
        g.generators_ = std::move(gens);
        return g;
    }
    static FiniteGroup trivial() { return generate({}); }

    const std::vector<MobiusMap>& elements() const { return elements_; }
    const std::vector<MobiusMap>& generators() const { return generators_; }
    size_t size() const { return elements_.size(); }

private:
    FiniteGroup() = default;
    std::vector<MobiusMap> elements_; // canonical order
    std::vector<MobiusMap> generators_;
};

// full pullback data: (cz+d)^n f(sigma(z)) made primitive, plus how far the
// degree dropped (nonzero only when f has the rational root a/c)
struct Pullback {
    Poly reduced;    // primitive, positive leading coefficient
    int degree_drop; // deg f - deg reduced
};

inline Pullback pullback_full(const Poly& f, const MobiusMap& s) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("pullback requires degree >= 1");
    int n = f.degree();
    // sum_i f_i (az+b)^i (cz+d)^(n-i)
    Poly az_b{std::vector<mpz_class>{s.b(), s.a()}};
    Poly cz_d{std::vector<mpz_class>{s.d(), s.c()}};
    std::vector<Poly> pow_ab(n + 1), pow_cd(n + 1);
    pow_ab[0] = Poly::constant(1);
    pow_cd[0] = Poly::constant(1);
    for (int i = 1; i <= n; ++i) {
        pow_ab[i] = pow_ab[i - 1] * az_b;
        pow_cd[i] = pow_cd[i - 1] * cz_d;
    }
    Poly acc;
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0) continue;
        acc = acc + pow_ab[i] * pow_cd[n - i] * f.coeff(i);
    }
    if (acc.is_zero()) throw std::logic_error("pullback collapsed to zero");
    Poly prim = primitive_part(acc);
    if (prim.leading() < 0) prim = -prim;
    return {std::move(prim), n - acc.degree()};
}

struct OrbitHitsInfinity : std::runtime_error {
    int degree_drop;
    explicit OrbitHitsInfinity(int drop)
        : std::runtime_error("orbit hits infinity"), degree_drop(drop) {}
};

// primitive minimal polynomial of sigma^{-1}(alpha) for f(alpha) = 0;
// errors when a conjugate is sent to infinity instead of silently truncating
inline Poly pullback_minpoly(const Poly& f, const MobiusMap& s) {
    Pullback pb = pullback_full(f, s);
    if (pb.degree_drop != 0) throw OrbitHitsInfinity(pb.degree_drop);
    return std::move(pb.reduced);
}

} // namespace gorbit
