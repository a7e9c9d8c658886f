// Factor-structure utilities: cyclotomic polynomials, squarefree (Yun)
// decomposition, the cyclotomic-product test behind Kronecker's criterion,
// and rational irreducibility.
//
// Irreducibility runs a distinct-degree certificate over several small
// primes first; when the degree patterns stay ambiguous it falls back to an
// exhaustive factor reconstruction from complex root subsets, validated by
// exact division, which is decisive at the degrees this library targets.
#pragma once

#include <array>
#include <bitset>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gorbit/poly.hpp"
#include "gorbit/roots_double.hpp"

namespace gorbit {

inline int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Phi_m via (x^m - 1) / prod_{d | m, d < m} Phi_d, cached.
// Every divisor chain member is filled bottom-up first, so each division
// ladder only consults smaller cached entries.
inline const Poly& cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<int, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<mpz_class> xd(d + 1, 0);
        xd[0] = -1;
        xd[d] = 1;
        Poly num{std::move(xd)};
        for (int e = 1; e < d; ++e)
            if (d % e == 0) num = *divide_exact(num, cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

// squarefree decomposition f = lc-sign * prod parts[i].first^parts[i].second
// for primitive f; Yun's algorithm with exact integer division
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f_in) {
    Poly f = f_in;
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    if (f.leading() < 0) f = -f;
    std::vector<std::pair<Poly, int>> parts;
    if (f.degree() == 0) return parts;
    Poly df = f.derivative();
    Poly a = poly_gcd(f, df);
    Poly b = *divide_exact(f, a);
    Poly c = *divide_exact(df, a);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly p = poly_gcd(b, d);
        if (p.degree() > 0) parts.emplace_back(p, i);
        b = *divide_exact(b, p);
        Poly cc = *divide_exact(d, p);
        d = cc - b.derivative();
    }
    return parts;
}

inline Poly squarefree_part(const Poly& f) {
    Poly out = Poly::constant(1);
    for (const auto& [p, m] : squarefree_decomposition(primitive_part(f))) out = out * p;
    return out;
}

// true iff every root of f is 0 or a root of unity, i.e. f = ±c x^k prod Phi_m
inline bool is_cyclotomic_product(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_cyclotomic_product of zero polynomial");
    Poly g = primitive_part(f).strip_zero_roots();
    if (g.leading() < 0) g = -g;
    int n0 = g.degree();
    if (n0 == 0) return g.coeff(0) == 1;
    // phi(m) >= sqrt(m/2) gives the search bound on the order m
    int bound = 2 * n0 * n0 + 8;
    for (int m = 1; m <= bound && g.degree() > 0; ++m) {
        if (euler_phi(m) > g.degree()) continue;
        while (true) {
            auto q = divide_exact(g, cyclotomic(m));
            if (!q) break;
            g = *q;
        }
    }
    return g.degree() == 0 && g.coeff(0) == 1;
}

namespace detail {

// ---- distinct-degree certificate over F_p (word-size primes) ----

using ZpPoly = std::vector<long>; // index = degree, reduced mod p

inline ZpPoly zp_from(const Poly& f, long p) {
    ZpPoly r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class m = f.coeff(i) % p;
        long v = m.get_si();
        if (v < 0) v += p;
        r[i] = v;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p;
    // reduce mod f (f monic after normalization by caller)
    int df = static_cast<int>(f.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= df; --k) {
        long t = r[k];
        if (t == 0) continue;
        r[k] = 0;
        for (int i = 0; i < df; ++i)
            r[k - df + i] = (r[k - df + i] + (p - t) * static_cast<unsigned long>(f[i])) % p;
    }
    r.resize(df);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    auto modinv = [p](long x) {
        long r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = static_cast<unsigned long>(r) * base % p;
            base = static_cast<unsigned long>(base) * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        long inv = modinv(b.back());
        ZpPoly r = a;
        int db = static_cast<int>(b.size()) - 1;
        for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
            long t = static_cast<unsigned long>(r[k]) * inv % p;
            if (t == 0) continue;
            for (int i = 0; i <= db; ++i)
                r[k - db + i] = (r[k - db + i] + (p - t) * static_cast<unsigned long>(b[i])) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline ZpPoly zp_monic(ZpPoly a, long p) {
    if (a.empty()) return a;
    long inv = 1, e = p - 2, base = a.back() % p;
    while (e) {
        if (e & 1) inv = static_cast<unsigned long>(inv) * base % p;
        base = static_cast<unsigned long>(base) * base % p;
        e >>= 1;
    }
    for (auto& v : a) v = static_cast<unsigned long>(v) * inv % p;
    return a;
}

// degrees (with multiplicity of count, not of repeated factors) of the
// irreducible factors of f mod p; empty result flags an unusable prime
inline std::vector<int> ddf_factor_degrees(const Poly& fin, long p) {
    if (fin.leading() % p == 0) return {};
    ZpPoly f = zp_monic(zp_from(fin, p), p);
    int n = static_cast<int>(f.size()) - 1;
    // derivative & squarefree check
    ZpPoly df(n);
    for (int i = 1; i <= n; ++i) df[i - 1] = static_cast<unsigned long>(f[i]) * (i % p) % p;
    while (!df.empty() && df.back() == 0) df.pop_back();
    if (df.empty()) return {};
    if (static_cast<int>(zp_gcd(f, df, p).size()) - 1 != 0) return {};

    std::vector<int> degrees;
    ZpPoly h = {0, 1}; // x
    ZpPoly rest = f;
    int d = 0;
    while (static_cast<int>(rest.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(rest.size()) - 1) {
            degrees.push_back(static_cast<int>(rest.size()) - 1);
            break;
        }
        // h = h^p mod f  (frobenius power via square-and-multiply on exponent p)
        ZpPoly acc = {1};
        ZpPoly base = h;
        long e = p;
        while (e) {
            if (e & 1) acc = zp_mulmod(acc, base, f, p);
            base = zp_mulmod(base, base, f, p);
            e >>= 1;
        }
        h = acc;
        // gcd(h - x, rest)
        ZpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        while (!hx.empty() && hx.back() == 0) hx.pop_back();
        ZpPoly g = zp_monic(zp_gcd(hx, rest, p), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int i = 0; i < dg / d; ++i) degrees.push_back(d);
            // rest /= g
            ZpPoly q;
            {
                ZpPoly r = rest;
                int dgg = dg;
                q.assign(r.size() - dgg, 0);
                for (int k = static_cast<int>(r.size()) - 1; k >= dgg; --k) {
                    long t = r[k]; // g monic
                    q[k - dgg] = t;
                    if (t == 0) continue;
                    for (int i = 0; i <= dgg; ++i)
                        r[k - dgg + i] = (r[k - dgg + i] + (p - t) * static_cast<unsigned long>(g[i])) % p;
                }
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            rest = zp_monic(q, p);
        }
    }
    return degrees;
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    std::vector<mpz_class> divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

} // namespace detail

namespace detail {

// a nontrivial factor of a primitive squarefree f with positive leading
// coefficient and f(0) != 0, or nullopt when f is certified irreducible.
// Distinct-degree patterns over small primes usually certify; the remaining
// cases reconstruct a factor from a subset of the complex roots and validate
// it by exact division.
inline std::optional<Poly> split_squarefree(const Poly& f) {
    int n = f.degree();
    if (n == 1) return std::nullopt;
    static constexpr std::array<long, 12> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::bitset<64> possible;
    for (int i = 1; i < n; ++i) possible.set(i);
    for (long p : primes) {
        auto degs = ddf_factor_degrees(f, p);
        if (degs.empty()) continue;
        if (degs.size() == 1) return std::nullopt; // irreducible mod p
        std::bitset<64> sums;
        sums.set(0);
        for (int d : degs) sums |= sums << d;
        sums.reset(0);
        sums.reset(n);
        possible &= sums;
        if (possible.none()) return std::nullopt;
    }

    std::vector<double> cd(n + 1);
    for (int i = 0; i <= n; ++i) cd[i] = f.coeff(i).get_d();
    auto roots = aberth_roots(cd);
    auto divs = positive_divisors(f.leading());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        int popcount = __builtin_popcount(mask);
        if (popcount > n / 2) continue;
        if (!possible.test(popcount)) continue;
        // monic product over the subset, low-to-high coefficients
        std::vector<cdouble> prod = {1.0};
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            prod.push_back(1.0);
            for (int j = static_cast<int>(prod.size()) - 2; j >= 0; --j)
                prod[j] = (j > 0 ? prod[j - 1] : cdouble(0)) - roots[i] * prod[j];
        }
        for (const mpz_class& dv : divs) {
            double scale = dv.get_d();
            std::vector<mpz_class> cand(prod.size());
            bool ok = true;
            for (size_t i = 0; i < prod.size(); ++i) {
                double target = prod[i].real() * scale;
                if (std::fabs(prod[i].imag()) * scale > 0.3) {
                    ok = false;
                    break;
                }
                double rounded = std::nearbyint(target);
                if (std::fabs(target - rounded) > 0.3) {
                    ok = false;
                    break;
                }
                cand[i] = static_cast<long>(rounded);
            }
            if (!ok) continue;
            Poly g{std::move(cand)};
            if (g.degree() < 1 || g.degree() >= n) continue;
            if (divide_exact(f, g)) return g;
        }
    }
    return std::nullopt;
}

} // namespace detail

// irreducibility over Q of a primitive polynomial (error on non-primitive)
inline bool is_irreducible(const Poly& f_in) {
    if (f_in.is_zero() || f_in.degree() < 1)
        throw std::invalid_argument("is_irreducible requires degree >= 1");
    auto [cont, f] = content_primitive(f_in);
    if (cont != 1) throw std::invalid_argument("is_irreducible requires primitive input");
    if (f.leading() < 0) f = -f;
    if (f.degree() == 1) return true;
    if (f.coeff(0) == 0) return false; // x divides
    if (poly_gcd(f, f.derivative()).degree() > 0) return false;
    return !detail::split_squarefree(f);
}

// irreducible factors of the primitive part with multiplicities; positive
// leading coefficients, powers of x included
inline std::vector<std::pair<Poly, int>> factorize(const Poly& f_in) {
    if (f_in.is_zero() || f_in.degree() < 1)
        throw std::invalid_argument("factorize requires degree >= 1");
    Poly f = primitive_part(f_in);
    if (f.leading() < 0) f = -f;
    std::vector<std::pair<Poly, int>> out;
    int k = f.valuation_at_zero();
    if (k > 0) {
        out.emplace_back(Poly::monomial(1), k);
        f = f.strip_zero_roots();
    }
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        std::vector<Poly> stack = {part};
        while (!stack.empty()) {
            Poly g = stack.back();
            stack.pop_back();
            if (auto h = detail::split_squarefree(g)) {
                stack.push_back(*h);
                stack.push_back(*divide_exact(g, *h));
            } else {
                if (g.leading() < 0) g = -g;
                out.emplace_back(std::move(g), mult);
            }
        }
    }
    return out;
}

// g with g(x^2) = (-1)^n f(x) f(-x): roots are the squares of f's roots,
// M(g) = M(f)^2 (cross-check oracle for the Mahler measure)
inline Poly graeffe(const Poly& f) {
    if (f.is_zero()) return Poly();
    int n = f.degree();
    std::vector<mpz_class> neg(f.coeffs());
    for (int i = 1; i <= n; i += 2) neg[i] = -neg[i];
    Poly prod = f * Poly(std::move(neg));
    std::vector<mpz_class> even(n + 1, 0);
    for (int i = 0; i <= n; ++i) even[i] = prod.coeff(2 * i);
    Poly g{std::move(even)};
    if (n % 2 != 0) g = -g;
    return g;
}

} // namespace gorbit
