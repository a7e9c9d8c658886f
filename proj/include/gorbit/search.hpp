// Brute-force enumeration of primitive irreducible integer polynomials of
// bounded degree and coefficient height, and the empirical minimum of the
// G-orbit height over such a space.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gorbit/factor.hpp"
#include "gorbit/heights.hpp"
#include "gorbit/poly.hpp"

namespace gorbit {

struct SearchSpace {
    int max_degree = 2;
    int max_height = 1; // bound on |coefficients|
    bool skip_cyclotomic = false;
};

// every primitive irreducible polynomial with deg <= max_degree,
// coefficients in [-H, H], positive leading coefficient, exactly once, in
// lexicographic order of (degree, coefficient vector)
inline void enum_polys(const SearchSpace& space, const std::function<void(const Poly&)>& visit) {
    if (space.max_degree < 1 || space.max_height < 1)
        throw std::invalid_argument("search space bounds must be >= 1");
    const int H = space.max_height;
    for (int deg = 1; deg <= space.max_degree; ++deg) {
        std::vector<long> c(deg + 1, -H);
        c[deg] = 1; // positive leading coefficient only: f and -f share roots
        while (true) {
            std::vector<mpz_class> coeffs(c.begin(), c.end());
            Poly f(std::move(coeffs));
            mpz_class cont = 0;
            for (const auto& v : f.coeffs()) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
            if (cont == 1 && is_irreducible(f) &&
                !(space.skip_cyclotomic && is_cyclotomic_product(f)))
                visit(f);
            // odometer over (c[0..deg-1], then leading in [1, H])
            int i = 0;
            for (; i < deg; ++i) {
                if (c[i] < H) {
                    ++c[i];
                    break;
                }
                c[i] = -H;
            }
            if (i == deg) {
                if (c[deg] < H) {
                    ++c[deg];
                } else {
                    break;
                }
            }
        }
    }
}

inline std::vector<Poly> enum_polys_list(const SearchSpace& space) {
    std::vector<Poly> out;
    enum_polys(space, [&](const Poly& f) { out.push_back(f); });
    return out;
}

struct SearchResult {
    RealInterval min_value;
    Poly witness;
    long scanned = 0;
    long skipped_zero = 0;
};

// minimum positive certified orbit height over the stream; exact zeros
// (cyclotomic products and heights computed exactly as [0,0]) are excluded
inline SearchResult min_orbit_height(const FiniteGroup& G, const SearchSpace& space,
                                     mpfr_prec_t precision_bits = kDefaultPrecision) {
    std::optional<RealInterval> best;
    Poly best_poly;
    long scanned = 0, zeros = 0;
    enum_polys(space, [&](const Poly& f) {
        ++scanned;
        // safe pruning: the identity term alone gives h_G >= log(M(f))/n and
        // M(f) >= max(|lc|, |f(0)|), so a certified cheap lower bound can
        // rule the candidate out before any pullback work
        if (best) {
            mpz_class lb = ::abs(f.leading());
            mpz_class a0 = ::abs(f.coeff(0));
            if (a0 > lb) lb = a0;
            if (lb > 1) {
                RealInterval cheap = RealInterval::from_mpz(lb, 64).log().div_ui(
                    static_cast<unsigned long>(f.degree()));
                if (mpfr_cmp(cheap.lo(), best->hi()) > 0) return;
            }
        }
        RealInterval h = orbit_height(G, AlgebraicNumber::unchecked(f), precision_bits);
        if (h.contains_zero() && h.width_double() < 1e-20) {
            ++zeros;
            return;
        }
        // strict comparison keeps the earliest (lexicographically first) witness
        if (!best || h.mid_double() < best->mid_double()) {
            best = h;
            best_poly = f;
        }
    });
    if (!best) throw std::runtime_error("empty search stream");
    return {std::move(*best), std::move(best_poly), scanned, zeros};
}

} // namespace gorbit
