#pragma once

// Chebyshev polynomials normalized by T_d(X + X^{-1}) = X^d + X^{-d}, and
// cyclotomic polynomials.

#include <map>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/polynomial.hpp"

namespace multdep {

// T_1 = X, T_2 = X^2 - 2, T_{d+1} = X*T_d - T_{d-1}.  (T_0 = 2.)
inline QPoly chebyshev(long d) {
    if (d < 1) throw input_error("chebyshev: d must be >= 1");
    QPoly t0 = QPoly::constant(Rational(2));
    QPoly t1 = QPoly::monomial(Rational(1), 1);
    if (d == 0) return t0;
    QPoly x = t1;
    for (long k = 1; k < d; ++k) {
        QPoly t2 = x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

// Phi_n, computed as (X^n - 1) divided by the lower cyclotomics.
inline QPoly cyclotomic(long n) {
    if (n < 1) throw input_error("cyclotomic: n must be >= 1");
    static std::map<long, QPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xn(static_cast<std::size_t>(n) + 1);
    xn[0] = Rational(-1);
    xn[static_cast<std::size_t>(n)] = Rational(1);
    QPoly p{std::vector<Rational>(xn)};
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic(d));
        if (!r.is_zero_poly()) throw internal_error("cyclotomic division not exact");
        p = std::move(q);
    }
    cache[n] = p;
    return p;
}

}  // namespace multdep
