#include "exset/interval.hpp"

#include <map>
#include <mutex>

namespace exset {

namespace {

// Fixed-point helpers: a value v is carried as an Integer v_fp with
// v = v_fp / 2^F. Rounding direction is explicit everywhere.

Integer fp_mul_down(const Integer &a, const Integer &b, long F) {
    Integer p = a * b;
    mpz_fdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(F));
    return p;
}

Integer fp_mul_up(const Integer &a, const Integer &b, long F) {
    Integer p = a * b;
    mpz_cdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(F));
    return p;
}

Integer fp_from_rational_down(const Rational &q, long F) {
    Integer num = q.get_num() << static_cast<unsigned long>(F);
    return floor_div(num, q.get_den());
}

Integer fp_from_rational_up(const Rational &q, long F) {
    Integer num = q.get_num() << static_cast<unsigned long>(F);
    return ceil_div(num, q.get_den());
}

Rational fp_to_rational(const Integer &v, long F) {
    Rational r(v, Integer(1) << static_cast<unsigned long>(F));
    r.canonicalize();
    return r;
}

// Directed sum of atanh(t) = sum t^(2j+1)/(2j+1) for 0 <= t <= 1/3 + ulp.
void atanh_fp(const Integer &tlo, const Integer &thi, long F, long prec, Integer &out_lo,
              Integer &out_hi) {
    Integer sum_lo = tlo, pw_lo = tlo;
    Integer sum_hi = thi, pw_hi = thi;
    const Integer t2_lo = fp_mul_down(tlo, tlo, F);
    const Integer t2_hi = fp_mul_up(thi, thi, F);
    const long tb = F - prec - 8;
    const Integer threshold = tb > 0 ? Integer(Integer(1) << static_cast<unsigned long>(tb))
                                     : Integer(0);
    unsigned long j = 1;
    while (true) {
        pw_lo = fp_mul_down(pw_lo, t2_lo, F);
        pw_hi = fp_mul_up(pw_hi, t2_hi, F);
        sum_lo += floor_div(pw_lo, Integer(2 * j + 1));
        Integer term_hi = ceil_div(pw_hi, Integer(2 * j + 1));
        sum_hi += term_hi;
        if (term_hi <= threshold) break;
        ++j;
        if (j > 1u << 20)
            throw std::logic_error("atanh series did not converge (internal)");
    }
    // tail after term j: (9/8) * t^(2j+3) / (2j+3), since t^2 <= 1/9 + eps
    Integer next_pw = fp_mul_up(pw_hi, t2_hi, F);
    sum_hi += ceil_div(next_pw * 9, Integer(8) * Integer(2 * (j + 1) + 1)) + 1;
    out_lo = sum_lo;
    out_hi = sum_hi;
}

// log q for q > 1, as an enclosure.
RealEnclosure log_above_one(const Rational &q, long prec) {
    const long F = prec + 32;
    long m = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    Rational u = q / pow2(m);
    while (u >= 2) {
        u /= 2;
        ++m;
    }
    while (u < 1) {
        u *= 2;
        --m;
    }
    Rational t = (u - 1) / (u + 1);  // in [0, 1/3)
    Integer alo, ahi;
    atanh_fp(fp_from_rational_down(t, F), fp_from_rational_up(t, F), F, prec, alo, ahi);
    RealEnclosure logu(fp_to_rational(2 * alo, F), fp_to_rational(2 * ahi, F));
    if (m == 0) return logu;
    return logu + log2_enclosure(prec) * Rational(m);
}

RealEnclosure log_point(const Rational &q, long prec) {
    if (q <= 0) throw std::domain_error("log of non-positive value");
    if (q == 1) return RealEnclosure(Rational(0));
    if (q > 1) return log_above_one(q, prec);
    return -log_above_one(Rational(1) / q, prec);
}

RealEnclosure exp_point(const Rational &q, long prec) {
    if (q == 0) return RealEnclosure(Rational(1));
    if (q < 0) {
        RealEnclosure r = exp_point(-q, prec);
        return {Rational(1) / r.hi, Rational(1) / r.lo};
    }
    if (q > (Integer(1) << 22)) throw input_error("exp argument too large");
    long m = 0;
    Rational r = q;
    while (r * 2 > 1) {
        r /= 2;
        ++m;
    }
    const long F = prec + 2 * m + 32;
    Integer rlo = fp_from_rational_down(r, F), rhi = fp_from_rational_up(r, F);
    Integer one = Integer(1) << static_cast<unsigned long>(F);
    Integer sum_lo = one, sum_hi = one, term_lo = one, term_hi = one;
    const long tb = F - prec - 2 * m - 16;
    const Integer threshold = tb > 0 ? Integer(Integer(1) << static_cast<unsigned long>(tb))
                                     : Integer(0);
    unsigned long j = 1;
    while (true) {
        term_lo = floor_div(fp_mul_down(term_lo, rlo, F), Integer(j));
        term_hi = ceil_div(fp_mul_up(term_hi, rhi, F), Integer(j)) + 1;
        sum_lo += term_lo;
        sum_hi += term_hi;
        if (term_hi <= threshold) break;
        ++j;
        if (j > 1u << 20) throw std::logic_error("exp series did not converge (internal)");
    }
    // ratio of consecutive terms is <= 1/2, so the tail is at most one term
    sum_hi += term_hi;
    for (long i = 0; i < m; ++i) {
        sum_lo = fp_mul_down(sum_lo, sum_lo, F);
        sum_hi = fp_mul_up(sum_hi, sum_hi, F) + 1;
    }
    return {fp_to_rational(sum_lo, F), fp_to_rational(sum_hi, F)};
}

Rational sqrt_down(const Rational &x, long prec) {
    if (x <= 0) return Rational(0);
    Integer scaled = (x.get_num() << static_cast<unsigned long>(2 * prec)) / x.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rational r(s, Integer(1) << static_cast<unsigned long>(prec));
    r.canonicalize();
    return r;
}

Rational sqrt_up(const Rational &x, long prec) {
    if (x <= 0) return Rational(0);
    Integer scaled = ceil_div(x.get_num() << static_cast<unsigned long>(2 * prec), x.get_den());
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    if (s * s < scaled) s += 1;
    Rational r(s, Integer(1) << static_cast<unsigned long>(prec));
    r.canonicalize();
    return r;
}

}  // namespace

RealEnclosure RealEnclosure::rounded(long prec) const {
    Integer dl = floor_div(lo.get_num() << static_cast<unsigned long>(prec), lo.get_den());
    Integer dh = ceil_div(hi.get_num() << static_cast<unsigned long>(prec), hi.get_den());
    Rational nl(dl, Integer(1) << static_cast<unsigned long>(prec));
    Rational nh(dh, Integer(1) << static_cast<unsigned long>(prec));
    nl.canonicalize();
    nh.canonicalize();
    return {nl, nh};
}

RealEnclosure operator*(const RealEnclosure &a, const RealEnclosure &b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational *p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return {lo, hi};
}

RealEnclosure enclosure_abs(const RealEnclosure &a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

RealEnclosure enclosure_max(const RealEnclosure &a, const RealEnclosure &b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealEnclosure enclosure_max1(const RealEnclosure &a) {
    return {std::max(Rational(1), a.lo), std::max(Rational(1), a.hi)};
}

RealEnclosure enclosure_recip(const RealEnclosure &a) {
    if (a.contains_zero()) throw std::domain_error("reciprocal of interval containing zero");
    return {Rational(1) / a.hi, Rational(1) / a.lo};
}

RealEnclosure enclosure_pow(const RealEnclosure &a, unsigned long e) {
    if (e == 0) return RealEnclosure(Rational(1));
    Rational pl = rational_pow(a.lo, e), ph = rational_pow(a.hi, e);
    if (e % 2 == 1 || a.lo >= 0) return {pl, ph};
    if (a.hi <= 0) return {ph, pl};
    return {Rational(0), std::max(pl, ph)};
}

RealEnclosure enclosure_sqrt(const RealEnclosure &a, long prec) {
    if (a.hi < 0) throw std::domain_error("sqrt of negative interval");
    return {sqrt_down(a.lo, prec), sqrt_up(a.hi, prec)};
}

RealEnclosure enclosure_log(const RealEnclosure &a, long prec) {
    if (a.lo <= 0) throw std::domain_error("log of interval touching (-inf, 0]");
    if (a.is_point()) return log_point(a.lo, prec);
    return {log_point(a.lo, prec).lo, log_point(a.hi, prec).hi};
}

RealEnclosure enclosure_exp(const RealEnclosure &a, long prec) {
    if (a.is_point()) return exp_point(a.lo, prec);
    return {exp_point(a.lo, prec).lo, exp_point(a.hi, prec).hi};
}

RealEnclosure log2_enclosure(long prec) {
    static std::map<long, RealEnclosure> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    const long F = prec + 32;
    Integer third_lo = floor_div(Integer(1) << static_cast<unsigned long>(F), Integer(3));
    Integer third_hi = third_lo + 1;
    Integer alo, ahi;
    atanh_fp(third_lo, third_hi, F, prec, alo, ahi);
    RealEnclosure r(fp_to_rational(2 * alo, F), fp_to_rational(2 * ahi, F));
    cache.emplace(prec, r);
    return r;
}

Integer ceil_log_integer(const Integer &n) {
    if (n < 1) throw std::domain_error("ceil_log_integer: argument must be >= 1");
    if (n == 1) return 0;
    auto at_least = [&](long m) {
        for (long prec = kPrecStart; prec <= kPrecCap; prec *= 2) {
            RealEnclosure e = exp_point(Rational(m), prec);
            if (e.lo >= n) return true;
            if (e.hi < n) return false;
        }
        throw undecidable_error("ceil_log_integer: undecidable at cap");
    };
    long hi = 1;
    while (!at_least(hi)) hi *= 2;
    long lo = hi / 2;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (at_least(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

RealEnclosure box_abs(const ComplexBox &b, long prec) {
    RealEnclosure re2 = enclosure_pow(b.re, 2), im2 = enclosure_pow(b.im, 2);
    return enclosure_sqrt(re2 + im2, prec);
}

}  // namespace exset
