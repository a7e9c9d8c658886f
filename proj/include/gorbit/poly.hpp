// Exact univariate integer polynomial arithmetic over GMP integers:
// content/primitive split, primitive gcd, evaluation in quadratic fields,
// exact division, and coprime-reduced rational functions.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gorbit/interval.hpp"
#include "gorbit/quad_point.hpp"

namespace gorbit {

class Poly {
public:
    Poly() = default;
    // coefficients a0..an, trailing zeros of the sequence trimmed
    explicit Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }
    static Poly zero() { return Poly(); }
    static Poly constant(mpz_class v) {
        Poly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static Poly monomial(int k, mpz_class lead = 1) {
        Poly p;
        p.c_.assign(k + 1, 0);
        p.c_[k] = std::move(lead);
        p.trim();
        return p;
    }
    // q x - p, the minimal polynomial of p/q (q > 0, gcd(p,q)=1)
    static Poly linear_for_rational(const mpq_class& r) {
        Poly p;
        p.c_.push_back(-r.get_num());
        p.c_.push_back(r.get_den());
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int i) const {
        static const mpz_class z0 = 0;
        if (i < 0 || i >= static_cast<int>(c_.size())) return z0;
        return c_[i];
    }
    const mpz_class& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<mpz_class> r(std::max(f.c_.size(), g.c_.size()), 0);
        for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
        for (size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        std::vector<mpz_class> r(std::max(f.c_.size(), g.c_.size()), 0);
        for (size_t i = 0; i < f.c_.size(); ++i) r[i] += f.c_[i];
        for (size_t i = 0; i < g.c_.size(); ++i) r[i] -= g.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& f) {
        std::vector<mpz_class> r = f.c_;
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<mpz_class> r(f.c_.size() + g.c_.size() - 1, 0);
        for (size_t i = 0; i < f.c_.size(); ++i)
            for (size_t j = 0; j < g.c_.size(); ++j) r[i + j] += f.c_[i] * g.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& f, const mpz_class& s) {
        if (s == 0) return Poly();
        std::vector<mpz_class> r = f.c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<mpz_class> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return Poly(std::move(r));
    }
    // multiply by x^k
    Poly shift_up(int k) const {
        if (is_zero()) return Poly();
        std::vector<mpz_class> r(c_.size() + k, 0);
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }
    // x^n f(1/x), the reciprocal polynomial
    Poly reversed() const {
        std::vector<mpz_class> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }
    // number of trailing zero coefficients == multiplicity of the root 0
    int valuation_at_zero() const {
        if (is_zero()) return 0;
        int k = 0;
        while (c_[k] == 0) ++k;
        return k;
    }
    Poly strip_zero_roots() const {
        int k = valuation_at_zero();
        if (k == 0) return *this;
        std::vector<mpz_class> r(c_.begin() + k, c_.end());
        return Poly(std::move(r));
    }

    mpq_class eval_mpq(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
        return acc;
    }
    QuadPoint eval_quad(const QuadPoint& x) const {
        QuadPoint acc = QuadPoint::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + QuadPoint::rational(mpq_class(*it));
        return acc;
    }
    std::complex<double> eval_cd(std::complex<double> x) const {
        std::complex<double> acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }
    ComplexInterval eval_ci(const ComplexInterval& x) const {
        mpfr_prec_t prec = x.precision();
        ComplexInterval acc(prec);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x;
            acc.re += RealInterval::from_mpz(*it, prec);
        }
        return acc;
    }

    friend std::pair<mpz_class, Poly> content_primitive(const Poly& f);
    friend std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_; // c_[i] multiplies x^i; invariant: back() != 0
};

// f = content * primitive with content > 0; primitive keeps the input sign
inline std::pair<mpz_class, Poly> content_primitive(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no content");
    mpz_class g = 0;
    for (const auto& v : f.c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    std::vector<mpz_class> r = f.c_;
    for (auto& v : r) v /= g;
    return {g, Poly(std::move(r))};
}

inline Poly primitive_part(const Poly& f) { return content_primitive(f).second; }

// exact quotient over Z[x], or nullopt if g does not divide f
inline std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.is_zero()) return Poly();
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<mpz_class> rem = f.c_;
    std::vector<mpz_class> quo(f.degree() - g.degree() + 1, 0);
    const mpz_class& lg = g.leading();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        mpz_class& top = rem[k + g.degree()];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        if (r != 0) return std::nullopt;
        quo[k] = q;
        for (int i = 0; i <= g.degree(); ++i) rem[k + i] -= q * g.coeff(i);
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return Poly(std::move(quo));
}

// primitive pseudo-remainder sequence gcd; result primitive with positive
// leading coefficient
inline Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (f.is_zero()) {
        Poly r = primitive_part(g);
        return r.leading() < 0 ? -r : r;
    }
    if (g.is_zero()) {
        Poly r = primitive_part(f);
        return r.leading() < 0 ? -r : r;
    }
    Poly a = primitive_part(f), b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        Poly r = a;
        const mpz_class& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            mpz_class lead = r.leading();
            r = r * lb - (b * lead).shift_up(k);
        }
        a = std::move(b);
        b = r.is_zero() ? Poly() : primitive_part(r);
    }
    if (a.leading() < 0) a = -a;
    return a;
}

// pair of coprime primitive polynomials; den has positive leading
// coefficient, the overall sign lives in num
struct RationalFunction {
    Poly num;
    Poly den;

    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num == y.num && x.den == y.den;
    }
};

// value-preserving reduction: cancel the polynomial gcd and the common
// integer content, push the sign into the numerator
inline RationalFunction ratfunc_reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) return {Poly(), Poly::constant(1)};
    Poly n = num;
    Poly d = den;
    Poly g = poly_gcd(n, d);
    if (g.degree() > 0 || g.leading() != 1) {
        n = *divide_exact(n, g);
        d = *divide_exact(d, g);
    }
    mpz_class c = gcd(content_primitive(n).first, content_primitive(d).first);
    if (c != 1) {
        n = *divide_exact(n, Poly::constant(c));
        d = *divide_exact(d, Poly::constant(c));
    }
    if (d.leading() < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

} // namespace gorbit
