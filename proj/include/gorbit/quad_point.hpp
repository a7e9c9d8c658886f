// Exact points of the quadratic fields Q, Q(i), Q(sqrt(-3)) and the extended
// point at infinity. These carry all orbit computations.
//
// A QuadPoint is a + b*sqrt(d) with rational a, b and d in {0, -1, -3};
// d == 0 forces b == 0, so the representation (a, b, d) is unique.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorbit {

class QuadPoint {
public:
    QuadPoint() : a_(0), b_(0), d_(0) {}
    QuadPoint(mpq_class a, mpq_class b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        a_.canonicalize();
        b_.canonicalize();
        if (b_ == 0) {
            d_ = 0;
        } else if (d_ != -1 && d_ != -3) {
            throw std::invalid_argument("QuadPoint: d must be 0, -1 or -3");
        }
    }
    static QuadPoint rational(mpq_class a) { return QuadPoint(std::move(a), 0, 0); }
    static QuadPoint zero() { return rational(0); }
    static QuadPoint one() { return rational(1); }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    int d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // field-compatibility: both rational, or same d
    static int join_field(const QuadPoint& x, const QuadPoint& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw std::domain_error("QuadPoint: mixed-field arithmetic rejected");
    }

    friend QuadPoint operator+(const QuadPoint& x, const QuadPoint& y) {
        int d = join_field(x, y);
        return QuadPoint(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadPoint operator-(const QuadPoint& x, const QuadPoint& y) {
        int d = join_field(x, y);
        return QuadPoint(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadPoint operator-(const QuadPoint& x) { return QuadPoint(-x.a_, -x.b_, x.d_); }
    friend QuadPoint operator*(const QuadPoint& x, const QuadPoint& y) {
        int d = join_field(x, y);
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) s
        return QuadPoint(x.a_ * y.a_ + mpq_class(d) * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_, d);
    }
    QuadPoint conj() const { return QuadPoint(a_, -b_, d_); }
    // norm a^2 - d b^2; equals |z|^2 for the imaginary fields
    mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
    QuadPoint inverse() const {
        mpq_class n = norm();
        if (n == 0) throw std::domain_error("QuadPoint: inverse of zero");
        return QuadPoint(a_ / n, -b_ / n, d_);
    }
    friend QuadPoint operator/(const QuadPoint& x, const QuadPoint& y) { return x * y.inverse(); }

    friend bool operator==(const QuadPoint& x, const QuadPoint& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    // total order: rationals first, then Q(i), then Q(sqrt(-3)); within a
    // field by (a, b). Used for canonical orbit serialization.
    friend bool operator<(const QuadPoint& x, const QuadPoint& y) {
        if (x.d_ != y.d_) return -x.d_ < -y.d_;
        int c = cmp(x.a_, y.a_);
        if (c != 0) return c < 0;
        return cmp(x.b_, y.b_) < 0;
    }

private:
    mpq_class a_, b_;
    int d_;
};

// true iff |p| == 1 exactly: a^2 - d b^2 == 1 (d <= 0)
inline bool unit_circle_test(const QuadPoint& p) { return p.norm() == 1; }

// the complete set of roots of unity of degree <= 2 over Q:
// {1, -1, i, -i, (1±i√3)/2, (-1±i√3)/2}
inline const std::array<QuadPoint, 8>& quadratic_roots_of_unity() {
    static const std::array<QuadPoint, 8> pts = {
        QuadPoint(1, 0, 0),
        QuadPoint(-1, 0, 0),
        QuadPoint(0, 1, -1),
        QuadPoint(0, -1, -1),
        QuadPoint(mpq_class(1, 2), mpq_class(1, 2), -3),
        QuadPoint(mpq_class(1, 2), mpq_class(-1, 2), -3),
        QuadPoint(mpq_class(-1, 2), mpq_class(1, 2), -3),
        QuadPoint(mpq_class(-1, 2), mpq_class(-1, 2), -3),
    };
    return pts;
}

inline bool is_root_of_unity_quad(const QuadPoint& p) {
    for (const auto& q : quadratic_roots_of_unity())
        if (p == q) return true;
    return false;
}

// Riemann-sphere point: finite quadratic point or infinity
class ExtendedPoint {
public:
    ExtendedPoint() : finite_(QuadPoint::zero()) {}
    explicit ExtendedPoint(QuadPoint p) : finite_(std::move(p)) {}
    static ExtendedPoint infinity() {
        ExtendedPoint e;
        e.finite_.reset();
        return e;
    }

    bool is_infinity() const { return !finite_.has_value(); }
    const QuadPoint& finite() const {
        if (!finite_) throw std::domain_error("ExtendedPoint: infinity has no finite value");
        return *finite_;
    }

    friend bool operator==(const ExtendedPoint& x, const ExtendedPoint& y) {
        if (x.is_infinity() || y.is_infinity()) return x.is_infinity() == y.is_infinity();
        return x.finite() == y.finite();
    }
    // infinity sorts last
    friend bool operator<(const ExtendedPoint& x, const ExtendedPoint& y) {
        if (x.is_infinity()) return false;
        if (y.is_infinity()) return true;
        return x.finite() < y.finite();
    }

private:
    std::optional<QuadPoint> finite_;
};

} // namespace gorbit
