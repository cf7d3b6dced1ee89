#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exset {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an enclosure-based decision cannot be settled before the
/// precision cap (2^16 bits) is reached. Callers never get a guess.
struct undecidable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad JSON numbers, |alpha| >= 1, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rational_floor(const Rational &q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Integer rational_ceil(const Rational &q) {
    return ceil_div(q.get_num(), q.get_den());
}

inline Integer int_pow(const Integer &base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational &base, unsigned long e) {
    return Rational(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

Rational rational_abs(const Rational &q);

/// Parse "p/q", "p", or a decimal string like "-1.414". Throws input_error.
Rational parse_rational(const std::string &s);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_str(const Rational &q);

/// Exact element of Q(i).
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
        Rational n = b.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
};

GaussianRational gaussian_pow(const GaussianRational &z, unsigned long e);

/// Parse "a", "bi", "a+bi", "a-bi", "i", "-i", "(a+bi)/d"; components are
/// rational or decimal strings.
GaussianRational parse_gaussian(const std::string &s);

std::string gaussian_str(const GaussianRational &z);

}  // namespace exset
