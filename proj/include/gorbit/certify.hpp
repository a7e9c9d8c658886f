// The lower-bound verification engine: the invariant rational function phi
// attached to an orbit, the Archimedean gap
//
//     sum_{sigma in G} log+ |sigma(z)|  -  sum_i B_i log |phi_i(z)|,
//
// sampling-based certification of a claimed bound D over the unit circle,
// all sigma-preimage circles and a safety grid, optimal-D estimation by
// circle scan plus golden-section refinement, and numeric weight tuning.
//
// The minimum of the gap lies on one of the circles |sigma(z)| = 1 (the gap
// is harmonic elsewhere and blows up toward the singular set), which is why
// a circle scan suffices for the estimate; the grid is a safety net for the
// pass/fail certification.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorbit/heights.hpp"
#include "gorbit/interval.hpp"
#include "gorbit/mobius.hpp"
#include "gorbit/orbits.hpp"
#include "gorbit/poly.hpp"
#include "gorbit/roots_double.hpp"

namespace gorbit {

struct SamplingConfig {
    int circle_samples = 16384;
    int grid = 600;
    double r_min = 0.2;
    double r_max = 5.0;
    double tol = 1e-4;
    mpfr_prec_t precision_bits = kDefaultPrecision;
};

struct PhiSet {
    std::vector<RationalFunction> phis;
    std::vector<mpq_class> weights; // same length as phis, all positive
};

struct CertReport {
    double claimed_D = 0;
    double observed_min = 0;
    std::complex<double> argmin;
    double margin = 0; // observed_min - claimed_D
    long samples = 0;
    double tolerance = 0;
    bool pass = false; // observed_min >= claimed_D - tolerance
};

// phi(z) = prod_{sigma in G} p(sigma(z)) reduced to coprime primitive form,
// where p is the minimal polynomial of the orbit's canonical representative.
// Both leading coefficients are normalized positive (only |phi| is ever
// used). The rational constant E of the reduction is absorbed.
inline RationalFunction build_phi(const FiniteGroup& G, const Orbit& orbit) {
    if (orbit.points.empty() || !orbit_qualifies_for_O(orbit))
        throw std::invalid_argument("build_phi: orbit is not a member of O");
    const QuadPoint& rep = orbit.points.front().finite();
    Poly p = AlgebraicNumber::from_quad(rep).minpoly();
    int n = p.degree();
    Poly num = Poly::constant(1);
    Poly den = Poly::constant(1);
    for (const auto& sigma : G.elements()) {
        // (cz+d)^n p(sigma(z)) as a polynomial, denominator (cz+d)^n
        Poly az_b{std::vector<mpz_class>{sigma.b(), sigma.a()}};
        Poly cz_d{std::vector<mpz_class>{sigma.d(), sigma.c()}};
        Poly acc;
        Poly pa = Poly::constant(1);
        std::vector<Poly> pow_ab(n + 1), pow_cd(n + 1);
        pow_ab[0] = Poly::constant(1);
        pow_cd[0] = Poly::constant(1);
        for (int i = 1; i <= n; ++i) {
            pow_ab[i] = pow_ab[i - 1] * az_b;
            pow_cd[i] = pow_cd[i - 1] * cz_d;
        }
        for (int i = 0; i <= n; ++i)
            if (p.coeff(i) != 0) acc = acc + pow_ab[i] * pow_cd[n - i] * p.coeff(i);
        num = num * acc;
        den = den * pow_cd[n];
    }
    RationalFunction phi = ratfunc_reduce(num, den);
    // the rational constant E of the normalization: both parts primitive
    // with positive leading coefficients (only |phi| enters the gap)
    phi.num = primitive_part(phi.num);
    phi.den = primitive_part(phi.den);
    if (phi.num.leading() < 0) phi.num = -phi.num;
    if (phi.den.leading() < 0) phi.den = -phi.den;
    return phi;
}

// phi_i for the first weights.size() orbits of O in canonical order
inline PhiSet make_phi_set(const FiniteGroup& G, const OrbitSetO& O,
                           std::vector<mpq_class> weights) {
    if (O.infinite) throw std::invalid_argument("make_phi_set: O is infinite");
    if (weights.empty() || weights.size() > O.orbits.size())
        throw std::invalid_argument("make_phi_set: need between 1 and |O| weights");
    PhiSet ps;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) throw std::invalid_argument("weights must be positive");
        ps.phis.push_back(build_phi(G, O.orbits[i]));
    }
    ps.weights = std::move(weights);
    return ps;
}

// exact complex rational point, used so singular-set membership is decidable
struct ExactComplex {
    mpq_class re, im;

    bool is_zero() const { return re == 0 && im == 0; }
    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    mpq_class norm() const { return re * re + im * im; }
};

inline ExactComplex eval_exact(const Poly& f, const ExactComplex& z) {
    ExactComplex acc{0, 0};
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re += mpq_class(f.coeff(i));
    }
    return acc;
}

// gap value at an exact point as a certified enclosure; [+inf, +inf] at
// zeros of a phi numerator; throws at a pole of some sigma, where the
// pointwise expression is indeterminate
inline RealInterval archimedean_gap(const FiniteGroup& G, const PhiSet& phi_set,
                                    const ExactComplex& z,
                                    mpfr_prec_t precision_bits = kDefaultPrecision) {
    for (const auto& w : phi_set.weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (const auto& sigma : G.elements()) {
        ExactComplex den{mpq_class(sigma.c()) * z.re + mpq_class(sigma.d()),
                         mpq_class(sigma.c()) * z.im};
        if (den.is_zero()) throw std::domain_error("indeterminate at pole");
    }
    for (const auto& phi : phi_set.phis)
        if (eval_exact(phi.num, z).is_zero()) return RealInterval::plus_infinity(precision_bits);

    RealInterval gap(precision_bits);
    for (const auto& sigma : G.elements()) {
        ExactComplex num{mpq_class(sigma.a()) * z.re + mpq_class(sigma.b()),
                         mpq_class(sigma.a()) * z.im};
        ExactComplex den{mpq_class(sigma.c()) * z.re + mpq_class(sigma.d()),
                         mpq_class(sigma.c()) * z.im};
        mpq_class q = num.norm() / den.norm(); // |sigma(z)|^2 exactly
        if (q > 1) gap += RealInterval::from_mpq(q, precision_bits).log().div_ui(2);
    }
    for (size_t i = 0; i < phi_set.phis.size(); ++i) {
        mpq_class n2 = eval_exact(phi_set.phis[i].num, z).norm();
        mpq_class d2 = eval_exact(phi_set.phis[i].den, z).norm();
        RealInterval logphi = RealInterval::from_mpq(n2 / d2, precision_bits).log().div_ui(2);
        gap = gap - logphi.scale_mpq(phi_set.weights[i]);
    }
    return gap;
}

namespace detail {

// hardware-precision gap kernel for the sampling passes
class GapSampler {
public:
    GapSampler(const FiniteGroup& G, const PhiSet& phi_set) {
        for (const auto& s : G.elements())
            mats_.push_back({s.a().get_d(), s.b().get_d(), s.c().get_d(), s.d().get_d()});
        for (size_t i = 0; i < phi_set.phis.size(); ++i) {
            PhiD p;
            for (const auto& c : phi_set.phis[i].num.coeffs()) p.num.push_back(c.get_d());
            for (const auto& c : phi_set.phis[i].den.coeffs()) p.den.push_back(c.get_d());
            p.weight = phi_set.weights[i].get_d();
            phis_.push_back(std::move(p));
        }
        // singular set: sigma poles plus roots of every phi numerator and
        // denominator; samples that land within 1e-12 get nudged
        for (const auto& s : G.elements())
            if (auto p = s.pole()) singular_.push_back(cdouble(p->get_d(), 0.0));
        for (size_t i = 0; i < phi_set.phis.size(); ++i) {
            for (const Poly* f : {&phi_set.phis[i].num, &phi_set.phis[i].den}) {
                if (f->degree() < 1) continue;
                Poly sf = squarefree_part(*f);
                std::vector<double> cd(sf.degree() + 1);
                for (int k = 0; k <= sf.degree(); ++k) cd[k] = sf.coeff(k).get_d();
                for (auto r : aberth_roots(cd)) singular_.push_back(r);
            }
        }
    }

    double operator()(cdouble z) const {
        double s = 0;
        for (const auto& m : mats_) {
            cdouble den = m[2] * z + m[3];
            double ad = std::abs(den);
            if (ad == 0) return std::numeric_limits<double>::infinity();
            double av = std::abs(m[0] * z + m[1]) / ad;
            if (av > 1) s += std::log(av);
        }
        for (const auto& p : phis_) {
            double nv = std::abs(horner_cd(p.num, z));
            double dv = std::abs(horner_cd(p.den, z));
            if (nv == 0 || dv == 0) return std::numeric_limits<double>::infinity();
            s -= p.weight * std::log(nv / dv);
        }
        return s;
    }

    cdouble nudge(cdouble z, double step) const {
        for (const auto& s : singular_)
            if (std::abs(z - s) < 1e-12) return z + cdouble(step, step * 0.5);
        return z;
    }

    size_t group_size() const { return mats_.size(); }
    // z = sigma^{-1}(e^{i t}) parametrizes the locus |sigma(z)| = 1
    cdouble circle_point(size_t k, double t) const {
        const auto& m = mats_[k];
        cdouble w = std::polar(1.0, t);
        cdouble den = -m[2] * w + m[0];
        if (std::abs(den) == 0) return cdouble(std::numeric_limits<double>::infinity(), 0);
        return (m[3] * w - m[1]) / den;
    }

private:
    struct PhiD {
        std::vector<double> num, den;
        double weight = 0;
    };
    std::vector<std::array<double, 4>> mats_;
    std::vector<PhiD> phis_;
    std::vector<cdouble> singular_;
};

struct ScanBest {
    double value = std::numeric_limits<double>::infinity();
    cdouble at{0, 0};
    size_t circle = 0;
    double theta = 0;
};

inline ScanBest scan_circles(const GapSampler& f, const SamplingConfig& cfg, double r_cap) {
    ScanBest best;
    const double dt = 2 * M_PI / cfg.circle_samples;
    for (size_t k = 0; k < f.group_size(); ++k) {
        for (int j = 0; j < cfg.circle_samples; ++j) {
            double t = j * dt + 1e-9;
            cdouble z = f.circle_point(k, t);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
            if (std::abs(z) > r_cap) continue;
            z = f.nudge(z, dt * 1e-3);
            double v = f(z);
            if (v < best.value) best = {v, z, k, t};
        }
    }
    return best;
}

inline ScanBest refine_on_circle(const GapSampler& f, const SamplingConfig& cfg, ScanBest best) {
    const double dt = 2 * M_PI / cfg.circle_samples;
    auto g = [&](double t) {
        cdouble z = f.circle_point(best.circle, t);
        if (!std::isfinite(z.real())) return std::numeric_limits<double>::infinity();
        return f(z);
    };
    double lo = best.theta - dt, hi = best.theta + dt;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = g(x2);
        }
    }
    double tb = 0.5 * (lo + hi);
    double vb = g(tb);
    if (vb < best.value) best = {vb, f.circle_point(best.circle, tb), best.circle, tb};
    return best;
}

} // namespace detail

// sample circles and the safety grid, report the minimum against claimed_D
inline CertReport certify_lower_bound(const FiniteGroup& G, const PhiSet& phi_set,
                                      double claimed_D, const SamplingConfig& cfg = {}) {
    if (claimed_D < 0) throw std::invalid_argument("claimed_D must be nonnegative");
    detail::GapSampler f(G, phi_set);
    CertReport rep;
    rep.claimed_D = claimed_D;
    rep.tolerance = cfg.tol;

    detail::ScanBest best = detail::scan_circles(f, cfg, cfg.r_max);
    long count = static_cast<long>(f.group_size()) * cfg.circle_samples;
    best = detail::refine_on_circle(f, cfg, best);

    const double step = 2 * cfg.r_max / (cfg.grid - 1);
    for (int iy = 0; iy < cfg.grid; ++iy) {
        for (int ix = 0; ix < cfg.grid; ++ix) {
            cdouble z(-cfg.r_max + ix * step, -cfg.r_max + iy * step);
            double r = std::abs(z);
            if (r < cfg.r_min || r > cfg.r_max) continue;
            z = f.nudge(z, step);
            ++count;
            double v = f(z);
            if (v < best.value) best = {v, z, 0, 0};
        }
    }
    rep.observed_min = best.value;
    rep.argmin = best.at;
    rep.margin = best.value - claimed_D;
    rep.samples = count;
    rep.pass = best.value >= claimed_D - cfg.tol;
    return rep;
}

struct OptimalD {
    double value = 0;
    std::complex<double> argmin;
};

// minimum of the gap over the sampled circles, golden-refined; the argmin of
// the inequality always sits on one of them
inline OptimalD estimate_optimal_D(const FiniteGroup& G, const PhiSet& phi_set,
                                   const SamplingConfig& cfg = {}) {
    detail::GapSampler f(G, phi_set);
    detail::ScanBest best = detail::scan_circles(f, cfg, std::max(cfg.r_max, 1e6));
    best = detail::refine_on_circle(f, cfg, best);
    return {best.value, best.at};
}

// numerically maximize the estimated D over the weights (concave in B:
// pointwise gap values are affine in the weights). Weights stay inside the
// growth cap  sum_i B_i (deg num_i - deg den_i) <= #affine elements of G,
// outside which the gap escapes to -infinity along z -> infinity.
inline std::vector<mpq_class> optimize_weights(const FiniteGroup& G,
                                               const std::vector<RationalFunction>& phis,
                                               const SamplingConfig& cfg = {}) {
    size_t k = phis.size();
    int affine = 0;
    for (const auto& s : G.elements())
        if (s.c() == 0) ++affine;
    std::vector<double> net(k);
    for (size_t i = 0; i < k; ++i)
        net[i] = std::max(1, phis[i].num.degree() - phis[i].den.degree());
    SamplingConfig coarse = cfg;
    coarse.circle_samples = std::max(1024, cfg.circle_samples / 4);

    auto evalD = [&](const std::vector<double>& B) {
        double load = 0;
        for (size_t i = 0; i < k; ++i) load += B[i] * net[i];
        if (load > affine + 1e-12) return -std::numeric_limits<double>::infinity();
        PhiSet ps;
        ps.phis = phis;
        for (double b : B) {
            if (b <= 1e-9) return -std::numeric_limits<double>::infinity();
            ps.weights.emplace_back(mpq_class(static_cast<long>(b * 1e9), 1000000000L));
        }
        return estimate_optimal_D(G, ps, coarse).value;
    };

    std::vector<double> B(k);
    for (size_t i = 0; i < k; ++i) B[i] = 0.5 * affine / (net[i] * k);
    const double gr = (std::sqrt(5.0) - 1) / 2;
    for (int round = 0; round < 3; ++round) {
        for (size_t i = 0; i < k; ++i) {
            double cap = affine;
            for (size_t j = 0; j < k; ++j)
                if (j != i) cap -= B[j] * net[j];
            cap /= net[i];
            double lo = 1e-6, hi = std::max(cap, 2e-6);
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            auto at = [&](double v) {
                std::vector<double> Bt = B;
                Bt[i] = v;
                return evalD(Bt);
            };
            double f1 = at(x1), f2 = at(x2);
            for (int it = 0; it < 40; ++it) {
                if (f1 > f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - gr * (hi - lo);
                    f1 = at(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + gr * (hi - lo);
                    f2 = at(x2);
                }
            }
            B[i] = 0.5 * (lo + hi);
        }
    }
    std::vector<mpq_class> out;
    for (double b : B) out.emplace_back(mpq_class(static_cast<long>(b * 1e9), 1000000000L));
    return out;
}

} // namespace gorbit
