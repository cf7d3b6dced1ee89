#include "exset/rational.hpp"

#include <cctype>

namespace exset {

Rational pow2(long e) {
    Rational r;
    if (e >= 0) {
        mpq_set_ui(r.get_mpq_t(), 1, 1);
        mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()),
                     static_cast<unsigned long>(e));
    } else {
        mpq_set_ui(r.get_mpq_t(), 1, 1);
        mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()),
                     static_cast<unsigned long>(-e));
    }
    return r;
}

Rational rational_abs(const Rational &q) { return q < 0 ? Rational(-q) : q; }

static bool is_decimal(const std::string &s) { return s.find('.') != std::string::npos; }

Rational parse_rational(const std::string &s) {
    if (s.empty()) throw input_error("empty rational literal");
    if (is_decimal(s)) {
        std::string t = s;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        auto dot = t.find('.');
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("bad decimal literal: " + s);
        Integer num(ip + fp);
        Integer den = int_pow(10, fp.size());
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal: " + s);
    if (r.get_den() == 0) throw input_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational &q) { return q.get_str(); }

GaussianRational gaussian_pow(const GaussianRational &z, unsigned long e) {
    GaussianRational acc(Rational(1)), base = z;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// One additive term: "i", "3i", "1/3i", "2.5i", or a plain rational.
static GaussianRational parse_gaussian_term(const std::string &t) {
    if (t.empty()) throw input_error("empty gaussian term");
    if (t.back() == 'i' || t.back() == 'I') {
        std::string body = t.substr(0, t.size() - 1);
        if (body.empty() || body == "+") return {Rational(0), Rational(1)};
        if (body == "-") return {Rational(0), Rational(-1)};
        // allow "i/3" as well as "1/3i"
        return {Rational(0), parse_rational(body)};
    }
    // "i/3" style: imaginary unit divided by a rational
    if ((t[0] == 'i' || t[0] == 'I') && t.size() > 1 && t[1] == '/')
        return {Rational(0), parse_rational("1" + t.substr(1))};
    if (t.size() > 2 && (t[0] == '+' || t[0] == '-') && (t[1] == 'i' || t[1] == 'I') &&
        t[2] == '/') {
        Rational v = parse_rational("1" + t.substr(2));
        return {Rational(0), t[0] == '-' ? Rational(-v) : v};
    }
    return {parse_rational(t), Rational(0)};
}

GaussianRational parse_gaussian(const std::string &s0) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw input_error("empty gaussian literal");
    // "(a+bi)/d"
    if (s[0] == '(') {
        auto close = s.find(')');
        if (close == std::string::npos) throw input_error("unbalanced paren: " + s0);
        GaussianRational inner = parse_gaussian(s.substr(1, close - 1));
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return inner;
        if (rest[0] != '/') throw input_error("bad gaussian literal: " + s0);
        Rational d = parse_rational(rest.substr(1));
        if (d == 0) throw input_error("division by zero: " + s0);
        return {inner.re / d, inner.im / d};
    }
    // split into at most two additive terms (sign characters not at position 0
    // and not directly after '/' or 'e' start a new term)
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '(') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return parse_gaussian_term(s);
    GaussianRational a = parse_gaussian_term(s.substr(0, split));
    std::string second = s.substr(split);
    GaussianRational b = parse_gaussian_term(second[0] == '+' ? second.substr(1) : second);
    return a + b;
}

std::string gaussian_str(const GaussianRational &z) {
    if (z.im == 0) return rational_str(z.re);
    std::string im = rational_str(z.im) + "i";
    if (z.re == 0) return im;
    return rational_str(z.re) + (z.im > 0 ? "+" : "") + im;
}

}  // namespace exset
