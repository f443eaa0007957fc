#pragma once

// Term counting and a certified upper bound for the sparsity S(phi): the
// smallest total number of terms over all representations phi = f/g, with f
// and g not required to be coprime.  The exact minimum ranges over all
// representations, so only an upper bound is computed: the best total count
// over a concrete cofactor family h of degree <= D,
//   S(phi) <= term_count(f*h) + term_count(g*h).
// The family is products of binomials (X^a - c) with c drawn from divisors
// of the input coefficients, plus small dense cofactors.  The FZ lower bound
// of the iterate-term-count inequality is evaluated directly.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "multdep/polynomial.hpp"
#include "multdep/rational_function.hpp"

namespace multdep {

inline std::size_t term_count(const QPoly& p) { return p.term_count(); }

namespace detail {

inline std::vector<Rational> cofactor_constants(const QFunc& phi, std::size_t cap = 64) {
    std::set<Rational> cs;
    cs.insert(Rational(1));
    cs.insert(Rational(-1));
    auto add_divisors = [&](const Rational& coeff) {
        if (is_zero(coeff) || cs.size() > 4 * cap) return;
        Integer n = abs(num(coeff));
        for (Integer d(1); d * d <= n && d < 4096; ++d) {
            if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
            for (const Integer& v : {Integer(d), Integer(n / d)}) {
                cs.insert(Rational(v));
                cs.insert(Rational(-v));
            }
        }
    };
    for (const Rational& c : phi.num().coefficients()) add_divisors(c);
    for (const Rational& c : phi.den().coefficients()) add_divisors(c);
    std::vector<Rational> out(cs.begin(), cs.end());
    if (out.size() > cap) out.resize(cap);
    return out;
}

inline void enumerate_binomial_products(const std::vector<Rational>& constants, long remaining_degree,
                                        long min_power, const QPoly& acc,
                                        std::vector<QPoly>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    out.push_back(acc);
    for (long a = min_power; a <= remaining_degree; ++a) {
        for (const Rational& c : constants) {
            QPoly binom = QPoly::monomial(Rational(1), static_cast<std::size_t>(a)) - QPoly::constant(c);
            enumerate_binomial_products(constants, remaining_degree - a, a, acc * binom, out, cap);
            if (out.size() >= cap) return;
        }
    }
}

}  // namespace detail

// Upper bound on S(phi) over cofactors of degree <= D; monotone nonincreasing
// in D because the family only grows with D.
inline std::size_t sparsity_upper(const QFunc& phi, long cofactor_degree) {
    if (cofactor_degree < 0) throw input_error("sparsity_upper: D must be >= 0");
    if (phi.is_zero_function()) return 0;
    std::size_t best = term_count(phi.num()) + term_count(phi.den());

    std::vector<QPoly> cofactors;
    const std::size_t cap = 20000;
    auto constants = detail::cofactor_constants(phi);
    detail::enumerate_binomial_products(constants, cofactor_degree, 1,
                                        QPoly::constant(Rational(1)), cofactors, cap);
    // dense cofactors of degree <= min(D, 2) with coefficients in {-1, 0, 1}
    long dd = std::min<long>(cofactor_degree, 2);
    for (long mask = 0; mask < std::pow(3, dd + 1); ++mask) {
        long m = mask;
        std::vector<Rational> cs;
        for (long k = 0; k <= dd; ++k) {
            cs.emplace_back(m % 3 - 1);
            m /= 3;
        }
        QPoly h{std::move(cs)};
        if (!h.is_zero_poly()) cofactors.push_back(h);
    }

    for (const QPoly& h : cofactors) {
        if (h.is_zero_poly() || h.degree() > cofactor_degree) continue;
        std::size_t total = term_count(phi.num() * h) + term_count(phi.den() * h);
        best = std::min(best, total);
    }
    return best;
}

// ((n-5) log d - log 2016) / log 5; may be negative.
inline double fz_lower_bound(long n, long d) {
    if (n < 1) throw input_error("fz_lower_bound: n must be >= 1");
    if (d < 2) throw input_error("fz_lower_bound: d must be >= 2");
    return (static_cast<double>(n - 5) * std::log(static_cast<double>(d)) - std::log(2016.0)) /
           std::log(5.0);
}

}  // namespace multdep
