#pragma once

// Exact scalars over Q: arbitrary-precision integers and reduced fractions
// (GMP), prime factorization, p-adic valuations, Weil height, and the
// coprime-base refinement that feeds relation lattices.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multdep/errors.hpp"

namespace multdep {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& n) { return mpz_sgn(n.get_mpz_t()) == 0; }
inline bool is_zero(const Rational& q) { return mpq_sgn(q.get_mpq_t()) == 0; }

inline Integer num(const Rational& q) { return Integer(mpq_numref(q.get_mpq_t())); }
inline Integer den(const Rational& q) { return Integer(mpq_denref(q.get_mpq_t())); }

inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Text format everywhere (files, CLI, JSON): optional '-', decimal digits,
// optional '/positive-digits'.  No floating literals.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational { throw parse_error(msg, i); };
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t nstart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == nstart) return fail("expected digits in rational literal");
    Integer n(text.substr(nstart, i - nstart));
    Integer d(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) return fail("expected digits after '/'");
        d = Integer(text.substr(dstart, i - dstart));
        if (is_zero(d)) return fail("zero denominator");
    }
    if (i != text.size()) return fail("trailing characters in rational literal");
    if (negative) n = -n;
    return make_rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

// log of a positive integer, good to double precision.
inline double log_integer(const Integer& n) {
    signed long e = 0;
    double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * M_LN2;
}

// Absolute logarithmic Weil height of a nonzero rational:
// log max(|num|, den) on the reduced fraction.
inline double weil_height(const Rational& q) {
    if (is_zero(q)) throw input_error("weil_height: zero has no height");
    Integer n = abs(num(q));
    Integer d = den(q);
    return log_integer(n > d ? n : d);
}

// ---------------------------------------------------------------------------
// Primality and factorization.  Trial division to 10^4, then Pollard-Brent
// rho with Miller-Rabin primality (deterministic bases below 3.3e24; the
// same bases act as a strong probable-prime test above, which is ample for
// desk-scale inputs).
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 10000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p <= limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
        }
        return out;
    }();
    return primes;
}

inline bool miller_rabin_witness(const Integer& n, const Integer& base, const Integer& d, unsigned long r) {
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace detail

inline bool is_prime(const Integer& n_in) {
    Integer n = abs(n_in);
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (detail::miller_rabin_witness(n, Integer(a), d, r)) return false;
    }
    return true;
}

namespace detail {

// Pollard-Brent rho; n odd composite, not a prime power of a tiny prime.
// The polynomial offset walks 1, 2, 3, ... so runs are deterministic.
inline Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y(2), g(1), q(1), x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long steps = std::min(m, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated for this offset; retry with the next c
    }
}

inline void factor_into(Integer n, std::map<Integer, long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// sign * prod p^e, keys prime, ascending, exponents > 0 for integers.
struct Factorization {
    int sign = 1;
    std::map<Integer, long> exponents;

    Integer reconstruct() const {
        Integer v(sign);
        for (const auto& [p, e] : exponents) {
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
            v *= pe;
        }
        return v;
    }
};

inline Factorization factor_integer(const Integer& n_in) {
    if (is_zero(n_in)) throw input_error("factor_integer: n must be nonzero");
    Factorization f;
    f.sign = sgn(n_in) < 0 ? -1 : 1;
    Integer n = abs(n_in);
    for (unsigned long p : detail::small_primes()) {
        if (n == 1) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
        f.exponents[Integer(p)] = static_cast<long>(e);
    }
    detail::factor_into(n, f.exponents);
    return f;
}

// Additive valuation v_p(q) of a nonzero rational at a prime p.
inline long valuation(const Rational& q, const Integer& p) {
    if (is_zero(q)) throw input_error("valuation: undefined at zero");
    if (!is_prime(p)) throw input_error("valuation: " + to_string(p) + " is not prime");
    Integer tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num(q).get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den(q).get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

// q = sign * prod base_i^{v_i} over a caller-supplied ordered prime base.
// Signals which primes are missing when the base does not cover q.
struct ExponentVector {
    std::vector<long> exponents;
    int sign = 1;
};

inline ExponentVector exponent_vector(const Rational& q, const std::vector<Integer>& base) {
    if (is_zero(q)) throw input_error("exponent_vector: zero has no exponent vector");
    ExponentVector out;
    out.sign = sgn(q) < 0 ? -1 : 1;
    Integer n = abs(num(q)), d = den(q);
    for (const Integer& p : base) {
        if (!is_prime(p)) throw input_error("exponent_vector: base entry " + to_string(p) + " is not prime");
        long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
        long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()));
        out.exponents.push_back(vn - vd);
    }
    if (n != 1 || d != 1) {
        std::string missing;
        for (const auto& [p, e] : factor_integer(n * d).exponents) {
            if (!missing.empty()) missing += ", ";
            missing += to_string(p);
        }
        throw input_error("exponent_vector: base incomplete, missing primes {" + missing + "}");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coprime base refinement over Z.  Produces pairwise coprime integers > 1
// such that every input is exactly a signed product of base powers.  Pairwise
// coprime integers > 1 are multiplicatively independent, so the exponent
// matrix over this base spans the same relation lattice as the one over
// primes -- without ever factoring hard cofactors.
// ---------------------------------------------------------------------------

struct IntegerExponentMatrix {
    std::vector<Integer> base;              // pairwise coprime, each > 1, ascending
    std::vector<std::vector<long>> rows;    // rows[i][j] = exponent of base[i] in value j
    std::vector<int> signs;                 // sign of value j
};

namespace detail {

inline void coprime_insert(std::vector<Integer>& base, Integer x) {
    std::vector<Integer> pending{std::move(x)};
    while (!pending.empty()) {
        Integer v = pending.back();
        pending.pop_back();
        if (v == 1) continue;
        bool requeued = false;
        for (std::size_t i = 0; i < base.size(); ++i) {
            Integer g = gcd(v, base[i]);
            if (g == 1) continue;
            if (g == base[i]) {
                // strip whole copies of base[i]; the leftover may still share
                // a proper factor with it
                mpz_remove(v.get_mpz_t(), v.get_mpz_t(), base[i].get_mpz_t());
                if (v == 1) { requeued = true; break; }
                g = gcd(v, base[i]);
                if (g == 1) continue;
            }
            // proper common part: refine base[i] and requeue the pieces
            Integer b = base[i];
            base.erase(base.begin() + static_cast<long>(i));
            pending.push_back(b / g);
            pending.push_back(g);
            pending.push_back(v);
            requeued = true;
            break;
        }
        if (!requeued) base.push_back(v);
    }
}

}  // namespace detail

inline IntegerExponentMatrix integer_exponent_matrix(const std::vector<Rational>& values) {
    IntegerExponentMatrix m;
    for (const Rational& v : values) {
        if (is_zero(v)) throw input_error("integer_exponent_matrix: zero value");
        Integer n = abs(num(v));
        if (n != 1) detail::coprime_insert(m.base, n);
        Integer d = den(v);
        if (d != 1) detail::coprime_insert(m.base, d);
    }
    std::sort(m.base.begin(), m.base.end());
    m.rows.assign(m.base.size(), std::vector<long>(values.size(), 0));
    for (std::size_t j = 0; j < values.size(); ++j) {
        m.signs.push_back(sgn(values[j]) < 0 ? -1 : 1);
        Integer n = abs(num(values[j])), d = den(values[j]);
        for (std::size_t i = 0; i < m.base.size(); ++i) {
            long vn = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), m.base[i].get_mpz_t()));
            long vd = static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), m.base[i].get_mpz_t()));
            m.rows[i][j] = vn - vd;
        }
        if (n != 1 || d != 1)
            throw internal_error("coprime refinement failed to cover an input");
    }
    return m;
}

// Exact rational power with integer (possibly negative) exponent.
inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(q)) throw input_error("pow_rational: 0 to a nonzero power");
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), k);
    return out;
}

}  // namespace multdep
