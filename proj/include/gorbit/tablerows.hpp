// Table-row verification: structured text records describing one cyclic
// group each (generator template over p, q; its orbit set; weights; a
// closed form for exp(D); the equality witness), plus the checker that
// reproduces every column computationally.
//
// Record format (blank-line separated, '#' comments):
//
//     name: row4
//     matrix: 1, -1; 3, 1        # entries are integer-linear in p and q
//     order: 3
//     orbits: {0, -1, 1}
//     B: 1                       # weights, space separated; omit if unknown
//     expD: 5                    # expression in p, q and optionally alpha
//     alpha-poly: x^8+...        # enables 'alpha' above and below
//     equality: 2|p-q            # or 'always' / 'none'
//     witness: -1                # point, 'alpha', or poly:<polynomial>
//     exclude: p                 # linear forms that must stay nonzero
#pragma once

#include <array>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gorbit/certify.hpp"
#include "gorbit/factor.hpp"
#include "gorbit/heights.hpp"
#include "gorbit/orbits.hpp"
#include "gorbit/parse.hpp"
#include "gorbit/roots.hpp"

namespace gorbit {

// "q", "p+2*q", "-3", integer-linear in p and q
inline mpz_class eval_linear_pq(const std::string& text, long p, long q) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty linear expression");
    mpz_class total = 0;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        mpz_class coef = 1;
        bool have_num = false;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coef = mpz_class(s.substr(start, i - start), 10);
            have_num = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 'p' || s[i] == 'q')) {
            coef *= (s[i] == 'p') ? p : q;
            ++i;
        } else if (!have_num) {
            throw std::invalid_argument("cannot parse linear expression: '" + text + "'");
        }
        total += sign * coef;
    }
    return total;
}

// weights: decimal ("0.112", exactly the printed rational) or fraction ("2/3")
inline mpq_class parse_weight(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpq_class v{mpz_class(digits, 10)};
    mpz_class den = 1;
    for (size_t k = 0; k < s.size() - dot - 1; ++k) den *= 10;
    v /= mpq_class(den);
    v.canonicalize();
    return v;
}

namespace rowexpr {

// interval-valued expression evaluator for the exp(D) column:
// numbers, p, q, alpha, + - * / ^, max(,), abs(), sqrt()
struct Env {
    mpq_class p, q;
    std::optional<ComplexInterval> alpha;
    mpfr_prec_t prec = kDefaultPrecision;
};

class Parser {
public:
    Parser(const std::string& s, const Env& env) : s_(strip_spaces(s)), env_(env) {}

    ComplexInterval parse() {
        ComplexInterval v = expr();
        if (pos_ != s_.size())
            throw std::invalid_argument("trailing input in expression: '" + s_ + "'");
        return v;
    }

private:
    ComplexInterval expr() {
        ComplexInterval v = term();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            char op = s_[pos_++];
            ComplexInterval r = term();
            v = (op == '+') ? v + r : v - r;
        }
        return v;
    }
    ComplexInterval term() {
        ComplexInterval v = unary();
        while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
            char op = s_[pos_++];
            ComplexInterval r = unary();
            v = (op == '*') ? v * r : v / r;
        }
        return v;
    }
    ComplexInterval unary() {
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            ComplexInterval zero(env_.prec);
            return zero - unary();
        }
        ComplexInterval v = primary();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw std::invalid_argument("missing exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            ComplexInterval r = ComplexInterval::exact_mpq(1, 0, env_.prec);
            for (int k = 0; k < e; ++k) r = r * v;
            v = r;
        }
        return v;
    }
    ComplexInterval primary() {
        if (pos_ >= s_.size()) throw std::invalid_argument("unexpected end of expression");
        if (s_[pos_] == '(') {
            ++pos_;
            ComplexInterval v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            return ComplexInterval::exact_mpq(parse_weight(s_.substr(start, pos_ - start)), 0,
                                              env_.prec);
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "p") return ComplexInterval::exact_mpq(env_.p, 0, env_.prec);
        if (id == "q") return ComplexInterval::exact_mpq(env_.q, 0, env_.prec);
        if (id == "alpha") {
            if (!env_.alpha) throw std::invalid_argument("expression uses alpha without alpha-poly");
            return *env_.alpha;
        }
        if (id == "abs" || id == "sqrt" || id == "max") {
            expect('(');
            ComplexInterval a = expr();
            if (id == "max") {
                expect(',');
                ComplexInterval b = expr();
                expect(')');
                require_real(a);
                require_real(b);
                return {RealInterval::max(a.re, b.re), RealInterval(env_.prec)};
            }
            expect(')');
            if (id == "abs") return {a.abs(), RealInterval(env_.prec)};
            require_real(a);
            return {a.re.sqrt(), RealInterval(env_.prec)};
        }
        throw std::invalid_argument("unknown identifier '" + id + "' in expression");
    }
    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in expression");
        ++pos_;
    }
    static void require_real(const ComplexInterval& v) {
        if (!v.im.contains_zero() || v.im.width_double() > 1e-20)
            throw std::invalid_argument("expression value is not real");
    }

    std::string s_;
    size_t pos_ = 0;
    const Env& env_;
};

inline RealInterval eval_real(const std::string& text, const Env& env) {
    ComplexInterval v = Parser(text, env).parse();
    if (!v.im.contains_zero() || v.im.width_double() > 1e-20)
        throw std::invalid_argument("expression did not evaluate to a real value");
    return v.re;
}

} // namespace rowexpr

struct TableRowSpec {
    std::string name;
    std::array<std::string, 4> matrix;
    int expected_order = 0;
    std::vector<std::vector<std::string>> orbits; // point strings per orbit
    std::vector<mpq_class> weights;               // empty when unknown
    std::string expD;                             // empty when unknown
    std::string equality = "none";
    std::string witness;                          // point | "alpha" | "poly:..."
    std::optional<Poly> alpha_poly;
    std::vector<std::string> exclusions; // linear forms in p,q that must be nonzero
    long default_p = 5;
    long default_q = 1;
};

inline std::vector<TableRowSpec> parse_row_records(std::istream& in) {
    std::vector<TableRowSpec> rows;
    TableRowSpec cur;
    bool open = false;
    auto flush = [&]() {
        if (open) rows.push_back(cur);
        cur = TableRowSpec{};
        open = false;
    };
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string stripped = strip_spaces(line);
        if (stripped.empty()) {
            flush();
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("row file line without ':': " + line);
        std::string key = strip_spaces(line.substr(0, colon));
        std::string value = line.substr(colon + 1);
        // trim
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front())))
            value.erase(value.begin());
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back())))
            value.pop_back();
        open = true;
        if (key == "name") {
            cur.name = value;
        } else if (key == "matrix") {
            std::string v = strip_spaces(value);
            size_t semi = v.find(';');
            if (semi == std::string::npos) throw std::invalid_argument("matrix needs ';'");
            std::string top = v.substr(0, semi), bot = v.substr(semi + 1);
            size_t c1 = top.find(','), c2 = bot.find(',');
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw std::invalid_argument("matrix rows need ','");
            cur.matrix = {top.substr(0, c1), top.substr(c1 + 1), bot.substr(0, c2),
                          bot.substr(c2 + 1)};
        } else if (key == "order") {
            cur.expected_order = std::stoi(value);
        } else if (key == "orbits") {
            std::string v = strip_spaces(value);
            size_t i = 0;
            while (i < v.size()) {
                if (v[i] != '{') throw std::invalid_argument("orbit must start with '{'");
                size_t close = v.find('}', i);
                if (close == std::string::npos) throw std::invalid_argument("unterminated orbit");
                std::string body = v.substr(i + 1, close - i - 1);
                std::vector<std::string> pts;
                std::stringstream ss(body);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) pts.push_back(item);
                cur.orbits.push_back(std::move(pts));
                i = close + 1;
            }
        } else if (key == "B") {
            std::stringstream ss(value);
            std::string item;
            while (ss >> item) cur.weights.push_back(parse_weight(item));
        } else if (key == "expD") {
            cur.expD = strip_spaces(value);
        } else if (key == "equality") {
            cur.equality = strip_spaces(value);
        } else if (key == "witness") {
            cur.witness = strip_spaces(value);
        } else if (key == "alpha-poly") {
            cur.alpha_poly = parse_poly(value);
        } else if (key == "exclude") {
            std::stringstream ss(strip_spaces(value));
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cur.exclusions.push_back(item);
        } else if (key == "default-p") {
            cur.default_p = std::stol(value);
        } else if (key == "default-q") {
            cur.default_q = std::stol(value);
        } else {
            throw std::invalid_argument("unknown row file key: '" + key + "'");
        }
    }
    flush();
    return rows;
}

// maximal root: largest |root| among roots with nonnegative imaginary part
inline ComplexInterval max_root(const Poly& f, mpfr_prec_t prec = kDefaultPrecision) {
    Poly sf = squarefree_part(primitive_part(f));
    auto boxes = complex_roots(sf, prec);
    const ComplexInterval* best = nullptr;
    double best_abs = -1;
    for (const auto& b : boxes) {
        if (b.im.hi_double() < -1e-30) continue;
        double a = b.abs().mid_double();
        if (a > best_abs) {
            best_abs = a;
            best = &b;
        }
    }
    if (!best) throw std::runtime_error("no root with nonnegative imaginary part");
    return *best;
}

// minimal polynomial of the maximal root
inline Poly max_root_minpoly(const Poly& f, mpfr_prec_t prec = kDefaultPrecision) {
    ComplexInterval root = max_root(f, prec);
    Poly candidate;
    int hits = 0;
    for (auto& [factor, mult] : factorize(f)) {
        if (factor.eval_ci(root).contains_zero()) {
            candidate = factor;
            ++hits;
        }
    }
    if (hits != 1) throw std::runtime_error("maximal root enclosure does not isolate a factor");
    return candidate;
}

struct RowCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

struct RowReport {
    std::string row;
    bool pass = false;
    std::vector<RowCheck> checks;
    double D_formula = 0;
    double D_estimate = 0;
    CertReport cert;
    std::vector<mpq_class> informational_weights; // unknown-weight rows only
};

inline RowReport verify_table_row(const TableRowSpec& spec, const SamplingConfig& cfg = {},
                                  std::optional<long> p_in = std::nullopt,
                                  std::optional<long> q_in = std::nullopt) {
    long p = p_in.value_or(spec.default_p);
    long q = q_in.value_or(spec.default_q);
    if (q <= 0) throw std::invalid_argument("q must be positive");
    if (gcd(mpz_class(p), mpz_class(q)) != 1)
        throw std::invalid_argument("p and q must be relatively prime");
    for (const auto& ex : spec.exclusions)
        if (eval_linear_pq(ex, p, q) == 0)
            throw std::invalid_argument("row exclusion violated: " + ex + " = 0");
    MobiusMap sigma(eval_linear_pq(spec.matrix[0], p, q), eval_linear_pq(spec.matrix[1], p, q),
                    eval_linear_pq(spec.matrix[2], p, q), eval_linear_pq(spec.matrix[3], p, q));

    RowReport rep;
    rep.row = spec.name;
    FiniteGroup G = FiniteGroup::generate({sigma});

    // (1) order of the generator
    {
        RowCheck c{"order"};
        auto ord = sigma.order();
        c.pass = ord.has_value() && *ord == spec.expected_order;
        c.detail = ord ? std::to_string(*ord) : "infinite";
        rep.checks.push_back(c);
    }
    // (2) computed O matches the declared orbits; keep the declared order so
    // the weights B_i attach to the orbits the row lists them for
    OrbitSetO O = compute_O(G);
    std::vector<Orbit> declared_order;
    {
        RowCheck c{"orbit-set"};
        std::set<Orbit> declared;
        for (const auto& pts : spec.orbits) {
            std::set<ExtendedPoint> s;
            for (const auto& t : pts) s.insert(parse_point(t));
            Orbit o;
            o.points.assign(s.begin(), s.end());
            declared_order.push_back(o);
            declared.insert(std::move(o));
        }
        std::set<Orbit> got(O.orbits.begin(), O.orbits.end());
        c.pass = !O.infinite && declared == got;
        {
            std::ostringstream os;
            os << (O.infinite ? std::string("infinite") : std::to_string(got.size()) + " orbit(s)");
            c.detail = os.str();
        }
        rep.checks.push_back(c);
        if (!c.pass) {
            rep.pass = false;
            return rep;
        }
    }

    rowexpr::Env env;
    env.p = p;
    env.q = q;
    env.prec = cfg.precision_bits;
    if (spec.alpha_poly) env.alpha = max_root(*spec.alpha_poly, cfg.precision_bits);

    const bool known = !spec.weights.empty() && !spec.expD.empty();
    if (!known) {
        // nothing more to verify; report a weight/D estimate informationally
        if (!O.orbits.empty()) {
            std::vector<RationalFunction> phis;
            size_t take = std::min<size_t>(2, declared_order.size());
            for (size_t i = 0; i < take; ++i) phis.push_back(build_phi(G, declared_order[i]));
            rep.informational_weights = optimize_weights(G, phis, cfg);
            PhiSet ps{phis, rep.informational_weights};
            rep.D_estimate = estimate_optimal_D(G, ps, cfg).value;
        }
        rep.pass = rep.checks[0].pass && rep.checks[1].pass;
        return rep;
    }

    if (spec.weights.size() > declared_order.size())
        throw std::invalid_argument("more weights than declared orbits");
    PhiSet ps;
    ps.weights = spec.weights;
    for (size_t i = 0; i < spec.weights.size(); ++i)
        ps.phis.push_back(build_phi(G, declared_order[i]));
    RealInterval expD_val = rowexpr::eval_real(spec.expD, env);
    RealInterval D_formula = expD_val.log();
    rep.D_formula = D_formula.mid_double();

    // (3) optimal-D estimate against the closed form
    {
        RowCheck c{"optimal-D"};
        rep.D_estimate = estimate_optimal_D(G, ps, cfg).value;
        c.pass = std::fabs(rep.D_estimate - rep.D_formula) <= cfg.tol;
        std::ostringstream os;
        os << "estimate " << rep.D_estimate << " vs formula " << rep.D_formula;
        c.detail = os.str();
        rep.checks.push_back(c);
    }
    // (4) equality witness, when the divisibility condition holds
    {
        RowCheck c{"equality-witness"};
        bool holds = false;
        if (spec.equality == "always") {
            holds = true;
        } else if (spec.equality == "none" || spec.equality.empty()) {
            holds = false;
        } else {
            size_t bar = spec.equality.find('|');
            if (bar == std::string::npos)
                throw std::invalid_argument("equality condition needs '|': " + spec.equality);
            mpz_class k(strip_spaces(spec.equality.substr(0, bar)), 10);
            mpz_class v = eval_linear_pq(spec.equality.substr(bar + 1), p, q);
            holds = (v % k == 0);
        }
        if (!holds) {
            c.applicable = false;
            c.detail = "condition not satisfied";
        } else {
            Poly witness_minpoly;
            if (spec.witness == "alpha") {
                witness_minpoly = max_root_minpoly(*spec.alpha_poly, cfg.precision_bits);
            } else if (spec.witness.rfind("poly:", 0) == 0) {
                witness_minpoly = max_root_minpoly(parse_poly(spec.witness.substr(5)),
                                                   cfg.precision_bits);
            } else if (spec.witness == "signp") {
                // the fixed rational witness sign(p) * 1
                witness_minpoly =
                    AlgebraicNumber::from_quad(QuadPoint::rational(p > 0 ? 1 : -1)).minpoly();
            } else {
                ExtendedPoint pt = parse_point(spec.witness);
                witness_minpoly = AlgebraicNumber::from_quad(pt.finite()).minpoly();
            }
            RealInterval h = orbit_height(G, AlgebraicNumber::unchecked(witness_minpoly),
                                          cfg.precision_bits);
            double err = std::fabs(h.mid_double() - rep.D_formula);
            c.pass = err <= 1e-9 + h.width_double() + D_formula.width_double();
            std::ostringstream os;
            os << "h_G(witness) = " << h.mid_double() << ", |diff| = " << err;
            c.detail = os.str();
        }
        rep.checks.push_back(c);
    }
    // (5) sampled certification of the bound itself
    {
        RowCheck c{"certify"};
        rep.cert = certify_lower_bound(G, ps, std::max(0.0, rep.D_formula), cfg);
        c.pass = rep.cert.pass;
        std::ostringstream os;
        os << "observed min " << rep.cert.observed_min << ", margin " << rep.cert.margin;
        c.detail = os.str();
        rep.checks.push_back(c);
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        if (c.applicable && !c.pass) rep.pass = false;
    return rep;
}

} // namespace gorbit
