#pragma once

// Small dense polynomial arithmetic over F_p for word-size primes, used for
// gcd triviality certificates and irreducibility tests.  Coefficients are
// reduced machine words; products go through 128-bit intermediates.

#include <gmpxx.h>

#include <vector>

#include "multdep/errors.hpp"

namespace multdep::fp {

using Poly = std::vector<unsigned long>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline unsigned long inv_mod(unsigned long x, unsigned long p) {
    long t = 0, newt = 1;
    long r = static_cast<long>(p), newr = static_cast<long>(x % p);
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw internal_error("inverse of a noninvertible residue");
    return static_cast<unsigned long>((t % static_cast<long>(p) + static_cast<long>(p)) %
                                      static_cast<long>(p));
}

inline Poly reduce(const std::vector<mpz_class>& f, unsigned long p) {
    Poly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    trim(out);
    return out;
}

inline Poly rem(Poly a, const Poly& b, unsigned long p) {
    trim(a);
    if (b.empty()) throw internal_error("fp::rem by zero");
    unsigned long lbinv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        unsigned long c =
            static_cast<unsigned long>(static_cast<unsigned __int128>(a.back()) * lbinv % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned __int128 sub = static_cast<unsigned __int128>(c) * b[i] % p;
            a[i + shift] =
                static_cast<unsigned long>((a[i + shift] + p - static_cast<unsigned long>(sub)) % p);
        }
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            unsigned __int128 t = static_cast<unsigned __int128>(a[i]) * b[j] + c[i + j];
            c[i + j] = static_cast<unsigned long>(t % p);
        }
    }
    trim(c);
    return rem(std::move(c), m, p);
}

inline Poly gcd(Poly a, Poly b, unsigned long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly derivative(const Poly& f, unsigned long p) {
    if (f.size() <= 1) return {};
    Poly df(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        df[i - 1] = static_cast<unsigned long>(static_cast<unsigned __int128>(f[i]) * (i % p) % p);
    trim(df);
    return df;
}

}  // namespace multdep::fp
