// Certified complex roots of squarefree integer polynomials.
//
// Hardware-precision Aberth-Ehrlich supplies starting points, Newton in
// high-precision floating point refines them, and an a-posteriori interval
// evaluation certifies each result: the disk around an approximation x of
// radius n |f(x)/f'(x)| contains a root, and n pairwise disjoint such disks
// for a degree-n squarefree polynomial each contain exactly one.
#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <vector>

#include "gorbit/factor.hpp"
#include "gorbit/interval.hpp"
#include "gorbit/poly.hpp"
#include "gorbit/roots_double.hpp"

namespace gorbit {
namespace detail {

// point complex arithmetic at a fixed mpfr precision, round-to-nearest
struct MC {
    mpfr_t re, im;
    explicit MC(mpfr_prec_t prec) {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    MC(const MC& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    MC& operator=(const MC& o) {
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
        return *this;
    }
    ~MC() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

inline void mc_set_cd(MC& z, cdouble v) {
    mpfr_set_d(z.re, v.real(), MPFR_RNDN);
    mpfr_set_d(z.im, v.imag(), MPFR_RNDN);
}

// z <- z - f(z)/f'(z); returns |step| / (1 + |z|) as double
inline double mc_newton_step(MC& z, const Poly& f, const Poly& df, mpfr_prec_t prec) {
    MC fv(prec), dv(prec), t(prec);
    mpfr_t tr, ti, n, sr, si, mag;
    mpfr_inits2(prec, tr, ti, n, sr, si, mag, static_cast<mpfr_ptr>(nullptr));
    auto horner = [&](const Poly& p, MC& out) {
        mpfr_set_zero(out.re, 1);
        mpfr_set_zero(out.im, 1);
        for (int i = p.degree(); i >= 0; --i) {
            // out = out * z + c_i
            mpfr_mul(tr, out.re, z.re, MPFR_RNDN);
            mpfr_mul(n, out.im, z.im, MPFR_RNDN);
            mpfr_sub(tr, tr, n, MPFR_RNDN);
            mpfr_mul(ti, out.re, z.im, MPFR_RNDN);
            mpfr_mul(n, out.im, z.re, MPFR_RNDN);
            mpfr_add(ti, ti, n, MPFR_RNDN);
            mpfr_add_z(tr, tr, p.coeff(i).get_mpz_t(), MPFR_RNDN);
            mpfr_set(out.re, tr, MPFR_RNDN);
            mpfr_set(out.im, ti, MPFR_RNDN);
        }
    };
    horner(f, fv);
    horner(df, dv);
    // step = fv / dv
    mpfr_mul(n, dv.re, dv.re, MPFR_RNDN);
    mpfr_mul(mag, dv.im, dv.im, MPFR_RNDN);
    mpfr_add(n, n, mag, MPFR_RNDN);
    if (mpfr_zero_p(n)) {
        mpfr_clears(tr, ti, n, sr, si, mag, static_cast<mpfr_ptr>(nullptr));
        return 1.0;
    }
    mpfr_mul(sr, fv.re, dv.re, MPFR_RNDN);
    mpfr_mul(mag, fv.im, dv.im, MPFR_RNDN);
    mpfr_add(sr, sr, mag, MPFR_RNDN);
    mpfr_div(sr, sr, n, MPFR_RNDN);
    mpfr_mul(si, fv.im, dv.re, MPFR_RNDN);
    mpfr_mul(mag, fv.re, dv.im, MPFR_RNDN);
    mpfr_sub(si, si, mag, MPFR_RNDN);
    mpfr_div(si, si, n, MPFR_RNDN);
    mpfr_sub(z.re, z.re, sr, MPFR_RNDN);
    mpfr_sub(z.im, z.im, si, MPFR_RNDN);
    // relative step size
    mpfr_mul(sr, sr, sr, MPFR_RNDN);
    mpfr_mul(si, si, si, MPFR_RNDN);
    mpfr_add(sr, sr, si, MPFR_RNDN);
    mpfr_sqrt(sr, sr, MPFR_RNDN);
    mpfr_mul(tr, z.re, z.re, MPFR_RNDN);
    mpfr_mul(ti, z.im, z.im, MPFR_RNDN);
    mpfr_add(tr, tr, ti, MPFR_RNDN);
    mpfr_sqrt(tr, tr, MPFR_RNDN);
    mpfr_add_ui(tr, tr, 1, MPFR_RNDN);
    mpfr_div(sr, sr, tr, MPFR_RNDN);
    double rel = mpfr_get_d(sr, MPFR_RNDU);
    mpfr_clears(tr, ti, n, sr, si, mag, static_cast<mpfr_ptr>(nullptr));
    return rel;
}

} // namespace detail

// n disjoint boxes, one root each, max side <= 2^(-precision_bits/2)
inline std::vector<ComplexInterval> complex_roots(const Poly& f,
                                                  mpfr_prec_t precision_bits = kDefaultPrecision) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("complex_roots requires degree >= 1");
    if (poly_gcd(f, f.derivative()).degree() > 0)
        throw std::invalid_argument("complex_roots requires squarefree input");

    std::vector<ComplexInterval> out;
    Poly g = f;
    if (g.coeff(0) == 0) {
        out.push_back(ComplexInterval::exact_mpq(0, 0, precision_bits));
        g = g.strip_zero_roots();
    }
    if (g.degree() == 0) return out;
    if (g.degree() == 1) {
        mpq_class root(-g.coeff(0), g.coeff(1));
        root.canonicalize();
        out.push_back(ComplexInterval::exact_mpq(root, 0, precision_bits));
        return out;
    }

    int n = g.degree();
    Poly dg = g.derivative();
    std::vector<double> cd(n + 1);
    for (int i = 0; i <= n; ++i) cd[i] = g.coeff(i).get_d();

    double target_side = std::pow(2.0, -static_cast<double>(precision_bits) / 2);
    mpfr_prec_t work = 2 * precision_bits + 64;
    for (int attempt = 0; attempt < 5; ++attempt, work *= 2) {
        auto seeds = aberth_roots(cd, 200 + 100 * attempt);
        std::vector<ComplexInterval> boxes;
        std::vector<double> radii;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            detail::MC z(work);
            detail::mc_set_cd(z, seeds[k]);
            double rel = 1;
            for (int it = 0; it < 120; ++it) {
                rel = detail::mc_newton_step(z, g, dg, work);
                if (rel < std::pow(2.0, -static_cast<double>(precision_bits) - 24)) break;
            }
            // certification at the refined point
            ComplexInterval zi(RealInterval::from_mpfr_point(z.re),
                               RealInterval::from_mpfr_point(z.im));
            RealInterval fa = g.eval_ci(zi).abs();
            RealInterval da = dg.eval_ci(zi).abs();
            if (!(mpfr_sgn(da.lo()) > 0)) {
                ok = false;
                break;
            }
            mpfr_t r;
            mpfr_init2(r, work);
            mpfr_div(r, fa.hi(), da.lo(), MPFR_RNDU);
            mpfr_mul_ui(r, r, n, MPFR_RNDU);
            double rad = mpfr_get_d(r, MPFR_RNDU);
            mpfr_clear(r);
            if (!(rad < 0.49 * target_side) || !std::isfinite(rad)) {
                ok = false;
                break;
            }
            RealInterval rr = RealInterval::hull_doubles(-rad, rad, work);
            boxes.emplace_back(zi.re + rr, zi.im + rr);
            radii.push_back(rad);
        }
        if (!ok) continue;
        // pairwise disjoint disks => exactly one root per disk
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double dx = boxes[i].re.mid_double() - boxes[j].re.mid_double();
                double dy = boxes[i].im.mid_double() - boxes[j].im.mid_double();
                double dist = std::sqrt(dx * dx + dy * dy);
                if (!(dist > 2.0 * (radii[i] + radii[j]) + 4.0 * target_side * 1e-6)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (auto& b : boxes) out.push_back(std::move(b));
        return out;
    }
    throw std::runtime_error("complex_roots: certification failed to converge");
}

} // namespace gorbit
