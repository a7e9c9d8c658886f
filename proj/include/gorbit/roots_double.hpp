// Aberth-Ehrlich simultaneous root iteration at hardware precision.
// Seeds the certified MPFR refinement and serves the factor-search and
// sampling paths, which validate results exactly and need only approximate
// root locations.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace gorbit {

using cdouble = std::complex<double>;

inline cdouble horner_cd(const std::vector<double>& c, cdouble x) {
    cdouble acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// all complex roots of c[0] + c[1] x + ... + c[n] x^n, c[n] != 0.
// Accuracy ~1e-13 relative for well-separated roots of desk-scale degree.
inline std::vector<cdouble> aberth_roots(std::vector<double> c, int max_iter = 200) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<cdouble> roots;
    if (n < 1) return roots;
    // scale to keep magnitudes tame
    double m = 0;
    for (double v : c) m = std::max(m, std::fabs(v));
    for (double& v : c) v /= m;
    if (n == 1) {
        roots.push_back(cdouble(-c[0] / c[1], 0.0));
        return roots;
    }
    std::vector<double> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * i;

    // initial points on a circle of the Cauchy-bound radius, spread with an
    // irrational angle step so no initial symmetry locks the iteration
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(c[i] / c[n]));
    double radius = 1.0 + bound;
    double r0 = std::pow(std::max(std::fabs(c[0] / c[n]), 1e-12), 1.0 / n);
    radius = std::min(radius, 2.0 * r0 + 1.0);
    roots.resize(n);
    for (int k = 0; k < n; ++k) {
        double t = 2.399963229728653 * k + 0.7;
        double r = radius * (1.0 + 0.05 * std::sin(3.1 * k));
        roots[k] = cdouble(r * std::cos(t), r * std::sin(t));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0;
        for (int k = 0; k < n; ++k) {
            cdouble z = roots[k];
            cdouble fv = horner_cd(c, z);
            cdouble dv = horner_cd(dc, z);
            if (dv == cdouble(0, 0)) {
                roots[k] += cdouble(1e-8, 1e-8);
                max_step = 1;
                continue;
            }
            cdouble w = fv / dv;
            cdouble s = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                cdouble d = z - roots[j];
                if (d == cdouble(0, 0)) d = cdouble(1e-14, 1e-14);
                s += 1.0 / d;
            }
            cdouble denom = 1.0 - w * s;
            cdouble step = (denom == cdouble(0, 0)) ? w : w / denom;
            roots[k] = z - step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(roots[k])));
        }
        if (max_step < 1e-15) break;
    }
    // final Newton polish
    for (int k = 0; k < n; ++k) {
        for (int it = 0; it < 3; ++it) {
            cdouble fv = horner_cd(c, roots[k]);
            cdouble dv = horner_cd(dc, roots[k]);
            if (dv == cdouble(0, 0)) break;
            roots[k] -= fv / dv;
        }
    }
    return roots;
}

} // namespace gorbit
