// Certified real/complex interval arithmetic on top of MPFR.
//
// Every operation rounds outward (MPFR_RNDD on lower bounds, MPFR_RNDU on
// upper bounds), so an interval always encloses the exact mathematical
// result of the same expression on any points of the operand intervals.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace gorbit {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RealInterval(const RealInterval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RealInterval(RealInterval&& o) noexcept {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    RealInterval& operator=(RealInterval o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~RealInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealInterval exact_long(long v, mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }
    static RealInterval exact_double(double v, mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        return r;
    }
    static RealInterval from_mpz(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_mpq(const mpq_class& v, mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval hull_doubles(double lo, double hi, mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_d(r.lo_, lo, MPFR_RNDD);
        mpfr_set_d(r.hi_, hi, MPFR_RNDU);
        return r;
    }
    static RealInterval hull(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.precision(), b.precision()));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    // point interval [v, v] at the precision of v
    static RealInterval from_mpfr_point(const mpfr_t v) {
        RealInterval r(mpfr_get_prec(v));
        mpfr_set(r.lo_, v, MPFR_RNDD);
        mpfr_set(r.hi_, v, MPFR_RNDU);
        return r;
    }
    // the extended value +infinity (gap functions blow up at phi zeros)
    static RealInterval plus_infinity(mpfr_prec_t prec = kDefaultPrecision) {
        RealInterval r(prec);
        mpfr_set_inf(r.lo_, 1);
        mpfr_set_inf(r.hi_, 1);
        return r;
    }
    bool is_plus_infinity() const { return mpfr_inf_p(lo_) && mpfr_sgn(lo_) > 0; }

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_exact() const { return mpfr_equal_p(lo_, hi_); }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    // strict comparison of the whole intervals
    bool certainly_less(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool contains_long(long v) const {
        return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
    }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return 0.5 * (lo_double() + hi_double()); }
    double width_double() const {
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.precision(), b.precision()));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a) {
        RealInterval r(a.precision());
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        mpfr_prec_t prec = std::max(a.precision(), b.precision());
        RealInterval r(prec);
        mpfr_t t;
        mpfr_init2(t, prec);
        // lower bound: min of the four endpoint products rounded down
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // upper bound: max rounded up
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
        mpfr_prec_t prec = std::max(a.precision(), b.precision());
        RealInterval r(prec);
        mpfr_t t;
        mpfr_init2(t, prec);
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }
    RealInterval& operator+=(const RealInterval& o) {
        *this = *this + o;
        return *this;
    }
    RealInterval& operator*=(const RealInterval& o) {
        *this = *this * o;
        return *this;
    }

    RealInterval abs() const {
        RealInterval r(precision());
        if (mpfr_sgn(lo_) >= 0) {
            mpfr_set(r.lo_, lo_, MPFR_RNDD);
            mpfr_set(r.hi_, hi_, MPFR_RNDU);
        } else if (mpfr_sgn(hi_) <= 0) {
            mpfr_neg(r.lo_, hi_, MPFR_RNDD);
            mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_, 1);
            mpfr_neg(r.hi_, lo_, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
        }
        return r;
    }
    // tight enclosure of x^2 (sharper than x*x when the interval straddles 0)
    RealInterval square() const {
        RealInterval a = abs();
        RealInterval r(precision());
        mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
        return r;
    }
    RealInterval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative range");
        RealInterval r(precision());
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealInterval log() const {
        if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log of non-positive range");
        RealInterval r(precision());
        // log(1) == 0 exactly; keep exact-1 endpoints exact so cyclotomic
        // heights come out as the point interval [0,0]
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealInterval exp() const {
        RealInterval r(precision());
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    static RealInterval max(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.precision(), b.precision()));
        mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    // max(x, 1) endpointwise; used for Mahler factors max(|root|, 1)
    RealInterval max1() const {
        RealInterval r(*this);
        if (mpfr_cmp_ui(r.lo_, 1) < 0) mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
        if (mpfr_cmp_ui(r.hi_, 1) < 0) mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    RealInterval pow_ui(unsigned long k) const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("pow_ui on interval with negative range");
        RealInterval r(precision());
        mpfr_pow_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }
    RealInterval div_ui(unsigned long k) const {
        RealInterval r(precision());
        mpfr_div_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_div_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }
    RealInterval scale_mpq(const mpq_class& q) const {
        return *this * RealInterval::from_mpq(q, precision());
    }

    // "m.dddd ± w" decimal form
    std::string to_string(int digits = 20) const {
        mpfr_t mid, wid;
        mpfr_init2(mid, precision());
        mpfr_init2(wid, 64);
        mpfr_add(mid, lo_, hi_, MPFR_RNDN);
        mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
        mpfr_sub(wid, hi_, lo_, MPFR_RNDU);
        mpfr_div_ui(wid, wid, 2, MPFR_RNDU);
        char* ms = nullptr;
        char* ws = nullptr;
        mpfr_asprintf(&ms, "%.*Rg", digits, mid);
        mpfr_asprintf(&ws, "%.2Rg", wid);
        std::string out = std::string(ms) + " ± " + std::string(ws);
        mpfr_free_str(ms);
        mpfr_free_str(ws);
        mpfr_clear(mid);
        mpfr_clear(wid);
        return out;
    }

private:
    mpfr_t lo_, hi_;
};

// rectangular complex enclosure
class ComplexInterval {
public:
    RealInterval re, im;

    explicit ComplexInterval(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
    ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexInterval exact_mpq(const mpq_class& r, const mpq_class& i,
                                     mpfr_prec_t prec = kDefaultPrecision) {
        return {RealInterval::from_mpq(r, prec), RealInterval::from_mpq(i, prec)};
    }

    mpfr_prec_t precision() const { return re.precision(); }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
        RealInterval n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    // |z|^2 enclosure
    RealInterval norm() const { return re.square() + im.square(); }
    RealInterval abs() const { return norm().sqrt(); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    double max_side() const { return std::max(re.width_double(), im.width_double()); }

    std::string to_string(int digits = 20) const {
        return "(" + re.to_string(digits) + ", " + im.to_string(digits) + "i)";
    }
};

} // namespace gorbit
