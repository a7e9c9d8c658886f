// Text grammars shared by the CLI, the bundled table files and the tests.
//
//   rational      "p/q" | "p"
//   polynomial    "x^10+x^9-x^7-1" style (x or z), or "[a0,a1,...,an]"
//   quad point    "a", "a+b*i", "a-b*w", "i", "-w", "inf"
//                 (i = sqrt(-1), w = sqrt(-3); b multiplies the radical)
//   mobius map    "a,b;c,d" with rational entries
//   group         generator matrices joined by '|'
#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorbit/mobius.hpp"
#include "gorbit/poly.hpp"
#include "gorbit/quad_point.hpp"

namespace gorbit {

inline std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

inline mpq_class parse_rational(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        mpq_class q(s);
        q.canonicalize();
        if (q.get_den() <= 0) throw std::invalid_argument("rational with nonpositive denominator");
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

inline std::string format_rational(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

namespace detail {

// one signed rational number starting at position i (digits with optional /)
inline mpq_class scan_rational(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw std::invalid_argument("expected number in '" + s + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t d2 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d2) throw std::invalid_argument("expected denominator in '" + s + "'");
    }
    return parse_rational(s.substr(start, i - start));
}

} // namespace detail

inline ExtendedPoint parse_point(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s == "inf" || s == "oo" || s == "infinity") return ExtendedPoint::infinity();
    if (s.empty()) throw std::invalid_argument("empty point");
    mpq_class a = 0, b = 0;
    int d = 0;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        mpq_class coef = 1;
        bool have_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            coef = detail::scan_rational(s, i);
            have_num = (i > j);
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 'i' || s[i] == 'w')) {
            int unit_d = (s[i] == 'i') ? -1 : -3;
            if (d != 0 && d != unit_d)
                throw std::invalid_argument("point mixes i and w: '" + text + "'");
            d = unit_d;
            b += sign * coef;
            ++i;
        } else {
            if (!have_num) throw std::invalid_argument("cannot parse point: '" + text + "'");
            a += sign * coef;
        }
    }
    return ExtendedPoint(QuadPoint(a, b, d));
}

inline std::string format_point(const ExtendedPoint& p) {
    if (p.is_infinity()) return "inf";
    const QuadPoint& q = p.finite();
    const char unit = (q.d() == -1) ? 'i' : 'w';
    std::ostringstream os;
    if (q.b() == 0) return format_rational(q.a());
    if (q.a() != 0) {
        os << format_rational(q.a());
        os << (q.b() > 0 ? "+" : "-");
    } else if (q.b() < 0) {
        os << "-";
    }
    mpq_class babs = ::abs(q.b());
    if (babs != 1) os << format_rational(babs) << "*";
    os << unit;
    return os.str();
}

inline Poly parse_poly(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    // coefficient-list form [a0,a1,...,an]
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated coefficient list");
        std::vector<mpz_class> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty coefficient in list");
            coeffs.emplace_back(item, 10);
        }
        return Poly(std::move(coeffs));
    }
    char var = 0;
    std::map<int, mpz_class> terms;
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
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            coef = mpz_class(s.substr(start, i - start), 10);
            have_num = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        int deg = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var == 0) var = s[i];
            if (s[i] != var)
                throw std::invalid_argument("polynomial uses more than one variable: '" + text + "'");
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == start) throw std::invalid_argument("missing exponent in '" + text + "'");
                deg = std::stoi(s.substr(start, i - start));
            }
        } else if (!have_num) {
            throw std::invalid_argument("cannot parse polynomial: '" + text + "'");
        }
        terms[deg] += sign * coef;
    }
    int maxdeg = terms.empty() ? -1 : terms.rbegin()->first;
    std::vector<mpz_class> coeffs(maxdeg + 1, 0);
    for (const auto& [dg, c] : terms) coeffs[dg] = c;
    return Poly(std::move(coeffs));
}

inline std::string format_poly(const Poly& f, char var = 'x') {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const mpz_class& c = f.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        mpz_class a = ::abs(c);
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline MobiusMap parse_mobius(const std::string& text) {
    std::string s = strip_spaces(text);
    size_t semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("matrix needs ';': '" + text + "'");
    auto split2 = [&](const std::string& row) {
        size_t comma = row.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("matrix row needs ',': '" + text + "'");
        return std::pair<std::string, std::string>(row.substr(0, comma), row.substr(comma + 1));
    };
    auto [a, b] = split2(s.substr(0, semi));
    auto [c, d] = split2(s.substr(semi + 1));
    return MobiusMap::from_rationals(parse_rational(a), parse_rational(b), parse_rational(c),
                                     parse_rational(d));
}

inline std::string format_mobius(const MobiusMap& s) {
    std::ostringstream os;
    os << s.a() << "," << s.b() << ";" << s.c() << "," << s.d();
    return os.str();
}

// generators joined by '|'
inline FiniteGroup parse_group(const std::string& text) {
    std::vector<MobiusMap> gens;
    std::string s = text;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t bar = s.find('|', pos);
        std::string piece = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        if (!strip_spaces(piece).empty()) gens.push_back(parse_mobius(piece));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    if (gens.empty()) throw std::invalid_argument("no generators in '" + text + "'");
    return FiniteGroup::generate(std::move(gens));
}

} // namespace gorbit
