#pragma once

#include "exset/rational.hpp"

namespace exset {

// Precision ladder shared by every refinement loop: doubling from 64 bits up
// to the 2^16-bit cap, then undecidable_error.
inline constexpr long kPrecStart = 64;
inline constexpr long kPrecCap = 1L << 16;

/// Closed interval with exact rational endpoints. All operations are outward
/// (the result interval contains every attainable value), so any comparison
/// decided through enclosures is rigorous.
struct RealEnclosure {
    Rational lo, hi;

    RealEnclosure() : lo(0), hi(0) {}
    explicit RealEnclosure(const Rational &x) : lo(x), hi(x) {}
    RealEnclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("RealEnclosure: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational &x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    /// Round endpoints outward to denominators 2^prec.
    RealEnclosure rounded(long prec) const;

    friend RealEnclosure operator+(const RealEnclosure &a, const RealEnclosure &b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RealEnclosure operator-(const RealEnclosure &a, const RealEnclosure &b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RealEnclosure operator-(const RealEnclosure &a) { return {-a.hi, -a.lo}; }
    friend RealEnclosure operator*(const RealEnclosure &a, const RealEnclosure &b);
    friend RealEnclosure operator*(const RealEnclosure &a, const Rational &c) {
        return c >= 0 ? RealEnclosure{a.lo * c, a.hi * c} : RealEnclosure{a.hi * c, a.lo * c};
    }
    friend RealEnclosure operator+(const RealEnclosure &a, const Rational &c) {
        return {a.lo + c, a.hi + c};
    }
};

RealEnclosure enclosure_abs(const RealEnclosure &a);
RealEnclosure enclosure_max(const RealEnclosure &a, const RealEnclosure &b);
RealEnclosure enclosure_max1(const RealEnclosure &a);  // max(1, a)

/// Reciprocal; interval must not contain zero.
RealEnclosure enclosure_recip(const RealEnclosure &a);

RealEnclosure enclosure_pow(const RealEnclosure &a, unsigned long e);

// Certified comparisons (true only when rigorous).
inline bool certainly_lt(const RealEnclosure &a, const RealEnclosure &b) { return a.hi < b.lo; }
inline bool certainly_le(const RealEnclosure &a, const RealEnclosure &b) { return a.hi <= b.lo; }
inline bool certainly_gt(const RealEnclosure &a, const RealEnclosure &b) { return a.lo > b.hi; }
inline bool certainly_positive(const RealEnclosure &a) { return a.lo > 0; }
inline bool certainly_negative(const RealEnclosure &a) { return a.hi < 0; }

/// sqrt over [max(0,lo), hi]; hi must be >= 0.
RealEnclosure enclosure_sqrt(const RealEnclosure &a, long prec);

/// Natural log; requires lo > 0.
RealEnclosure enclosure_log(const RealEnclosure &a, long prec);

RealEnclosure enclosure_exp(const RealEnclosure &a, long prec);

/// Enclosure of log(2) at the given precision.
RealEnclosure log2_enclosure(long prec);

/// Smallest integer m >= 0 with e^m >= n (n >= 1), i.e. ceil(log n).
Integer ceil_log_integer(const Integer &n);

/// Axis-aligned complex box with rational-interval sides.
struct ComplexBox {
    RealEnclosure re, im;

    ComplexBox() = default;
    explicit ComplexBox(const GaussianRational &z)
        : re(RealEnclosure(z.re)), im(RealEnclosure(z.im)) {}
    ComplexBox(RealEnclosure r, RealEnclosure i) : re(std::move(r)), im(std::move(i)) {}

    bool is_point() const { return re.is_point() && im.is_point(); }
    bool contains(const GaussianRational &z) const {
        return re.contains(z.re) && im.contains(z.im);
    }
    ComplexBox conj() const { return {re, -im}; }
    RealEnclosure abs_sq() const { return re * re + im * im; }
    Rational width() const {
        Rational w = re.width(), v = im.width();
        return w > v ? w : v;
    }
    ComplexBox rounded(long prec) const { return {re.rounded(prec), im.rounded(prec)}; }

    friend ComplexBox operator+(const ComplexBox &a, const ComplexBox &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBox operator-(const ComplexBox &a, const ComplexBox &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexBox operator-(const ComplexBox &a) { return {-a.re, -a.im}; }
    friend ComplexBox operator*(const ComplexBox &a, const ComplexBox &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexBox operator*(const ComplexBox &a, const GaussianRational &c) {
        return a * ComplexBox(c);
    }
};

/// Upper/lower bounds on |z| over the box (lower is 0 if the box contains 0).
RealEnclosure box_abs(const ComplexBox &b, long prec);

/// Exact |z|^2 enclosure of the difference of two boxes being disjoint etc.
/// is done by callers via abs_sq comparisons.

}  // namespace exset
