#pragma once

// Exact complex-rational arithmetic and complex disks with rational centers
// and radii.  All enclosure bookkeeping is exact: square roots are bounded
// by dyadic rationals via integer square roots, and logarithms go through
// MPFR with directed rounding.  No uncontrolled floating point enters any
// certified bound.

#include <mpfr.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/rational.hpp"

namespace multdep {

// floor/ceil of sqrt(q) to k dyadic bits; exact adjustment so that
// lower^2 <= q <= upper^2 always holds.
inline Rational sqrt_lower(const Rational& q, long bits = 96) {
    if (sgn(q) < 0) throw input_error("sqrt of negative rational");
    if (is_zero(q)) return Rational(0);
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Integer scaled_num = num(q) * two_k * two_k;
    Integer a = scaled_num / den(q);  // floor(q * 4^k)
    Integer s;
    mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
    return make_rational(s, two_k);
}

inline Rational sqrt_upper(const Rational& q, long bits = 96) {
    if (sgn(q) < 0) throw input_error("sqrt of negative rational");
    if (is_zero(q)) return Rational(0);
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Integer scaled_num = num(q) * two_k * two_k;
    Integer a;
    mpz_cdiv_q(a.get_mpz_t(), scaled_num.get_mpz_t(), den(q).get_mpz_t());  // ceil
    Integer s;
    mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
    Rational cand = make_rational(s, two_k);
    if (cand * cand >= q) return cand;
    return make_rational(s + 1, two_k);
}

struct QComplex {
    Rational re, im;

    QComplex() = default;
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit QComplex(Rational r) : re(std::move(r)) {}

    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    QComplex operator-() const { return {-re, -im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator/(const QComplex& a, const QComplex& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (is_zero(n2)) throw input_error("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }

    Rational norm2() const { return re * re + im * im; }
    Rational abs_upper(long bits = 96) const { return sqrt_upper(norm2(), bits); }
    Rational abs_lower(long bits = 96) const { return sqrt_lower(norm2(), bits); }
};

// Round a rational to a dyadic with ~bits fractional bits (nearest-ish; the
// direction does not matter, only that the result is an exact dyadic).
inline Rational to_dyadic(const Rational& q, long bits) {
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Integer n = num(q) * two_k;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), den(q).get_mpz_t());
    return make_rational(r, two_k);
}

inline QComplex to_dyadic(const QComplex& z, long bits) {
    return {to_dyadic(z.re, bits), to_dyadic(z.im, bits)};
}

// Closed disk { z : |z - center| <= radius }.
struct Disk {
    QComplex center;
    Rational radius;  // >= 0

    Rational abs_upper(long bits = 96) const { return center.abs_upper(bits) + radius; }
    Rational abs_lower(long bits = 96) const {
        Rational lo = center.abs_lower(bits) - radius;
        return sgn(lo) < 0 ? Rational(0) : lo;
    }
};

inline Disk operator+(const Disk& a, const Disk& b) { return {a.center + b.center, a.radius + b.radius}; }
inline Disk operator-(const Disk& a, const Disk& b) { return {a.center - b.center, a.radius + b.radius}; }

inline Disk operator*(const Disk& a, const Disk& b) {
    Rational r = a.center.abs_upper() * b.radius + b.center.abs_upper() * a.radius + a.radius * b.radius;
    return {a.center * b.center, r};
}

inline Disk exact_disk(QComplex z) { return {std::move(z), Rational(0)}; }
inline Disk exact_disk(Rational x) { return {QComplex(std::move(x)), Rational(0)}; }

inline bool disks_disjoint(const Disk& a, const Disk& b) {
    Rational d2 = (a.center - b.center).norm2();
    Rational rr = a.radius + b.radius;
    return d2 > rr * rr;
}

// Certified real enclosure [lo, hi] with exact rational endpoints.
struct CertReal {
    Rational lo, hi;

    double mid() const { return (Rational((lo + hi) / 2)).get_d(); }
    double width() const { return Rational(hi - lo).get_d(); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool certainly_greater(const CertReal& o) const { return lo > o.hi; }
    bool certainly_greater(const Rational& x) const { return lo > x; }
    bool certainly_less(const Rational& x) const { return hi < x; }
};

// log of a positive rational, outward-rounded to exact dyadic endpoints at
// the given MPFR working precision.
inline CertReal log_enclosure(const Rational& x, long prec_bits = 128) {
    if (sgn(x) <= 0) throw input_error("log of a nonpositive value");
    auto one_side = [&](mpfr_rnd_t rnd) {
        mpfr_t t;
        mpfr_init2(t, static_cast<mpfr_prec_t>(prec_bits + 16));
        mpfr_set_q(t, x.get_mpq_t(), rnd);
        mpfr_log(t, t, rnd);
        mpz_class mant;
        mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), t);
        mpfr_clear(t);
        Rational out(mant);
        if (e >= 0) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
            out *= Rational(p);
        } else {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
            out /= Rational(p);
        }
        return out;
    };
    // mpfr_get_z_2exp is exact, so directed rounding happens inside log only
    return {one_side(MPFR_RNDD), one_side(MPFR_RNDU)};
}

}  // namespace multdep
