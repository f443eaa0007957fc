#pragma once

// Integer linear algebra on exact matrices: column echelon reduction with a
// tracked unimodular transform, kernel bases, and the small enumerative
// search for a canonical shortest kernel vector.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/rational.hpp"

namespace multdep {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;  // row major

// Basis of { k : A k = 0 } as columns of the unimodular transform that zeroes
// the corresponding echelon columns.  The column count is explicit so that a
// matrix with no rows (kernel = everything) is handled.
inline std::vector<ZVec> kernel_basis(const ZMat& a, std::size_t cols) {
    const std::size_t rows = a.size();
    if (cols == 0) return {};
    if (rows != 0 && a[0].size() != cols) throw internal_error("kernel_basis: column mismatch");
    // column-major working copies
    std::vector<ZVec> w(cols, ZVec(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[j][i] = a[i][j];
    std::vector<ZVec> u(cols, ZVec(cols));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

    std::size_t pivots = 0;
    for (std::size_t i = 0; i < rows && pivots < cols; ++i) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = pivots; j < cols; ++j) {
                if (is_zero(w[j][i])) continue;
                if (best == cols || mpz_cmpabs(w[j][i].get_mpz_t(), w[best][i].get_mpz_t()) < 0) best = j;
            }
            if (best == cols) break;  // row i clear on active columns
            bool reduced_any = false;
            for (std::size_t j = pivots; j < cols; ++j) {
                if (j == best || is_zero(w[j][i])) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), w[j][i].get_mpz_t(), w[best][i].get_mpz_t());
                if (!is_zero(q)) {
                    for (std::size_t r = 0; r < rows; ++r) w[j][r] -= q * w[best][r];
                    for (std::size_t r = 0; r < cols; ++r) u[j][r] -= q * u[best][r];
                }
                reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(w[best], w[pivots]);
                std::swap(u[best], u[pivots]);
                ++pivots;
                break;
            }
        }
    }
    std::vector<ZVec> kernel;
    for (std::size_t j = pivots; j < cols; ++j) {
        bool zero = true;
        for (std::size_t r = 0; r < rows && zero; ++r) zero = is_zero(w[j][r]);
        if (zero) kernel.push_back(u[j]);
    }
    return kernel;
}

namespace detail {

inline int cmpabs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

inline Integer max_norm(const ZVec& v) {
    Integer m(0);
    for (const Integer& x : v)
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    return m;
}

// Canonical orientation: first nonzero entry positive.
inline ZVec sign_normalize(ZVec v) {
    for (const Integer& x : v) {
        if (is_zero(x)) continue;
        if (sgn(x) < 0)
            for (Integer& y : v) y = -y;
        break;
    }
    return v;
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// (max-norm, lex) on sign-normalized vectors.
inline bool canonical_less(const ZVec& a, const ZVec& b) {
    Integer na = max_norm(a), nb = max_norm(b);
    int c = cmp(na, nb);
    if (c != 0) return c < 0;
    return lex_less(a, b);
}

}  // namespace detail

// Canonical representative of the smallest nonzero lattice vector satisfying
// an optional predicate, searched over small integer combinations of the
// kernel basis.  The coefficient box is capped so the search stays bounded;
// the basis vectors (and their doubles, for parity constraints) are always
// candidates.
inline std::optional<ZVec> minimal_kernel_vector(
    const std::vector<ZVec>& basis,
    const std::function<bool(const ZVec&)>& accept = nullptr) {
    if (basis.empty()) return std::nullopt;
    const std::size_t dim = basis.size();
    const std::size_t len = basis[0].size();

    long box = dim <= 2 ? 12 : dim <= 4 ? 6 : dim <= 6 ? 2 : 1;
    Integer basis_norm(0);
    for (const ZVec& b : basis) basis_norm = std::max(basis_norm, detail::max_norm(b));
    Integer cap = 10 * basis_norm;

    std::optional<ZVec> best;
    auto consider = [&](const ZVec& v) {
        bool zero = true;
        for (const Integer& x : v) zero = zero && is_zero(x);
        if (zero) return;
        if (cmp(detail::max_norm(v), cap) > 0) return;
        if (accept && !accept(v)) return;
        ZVec n = detail::sign_normalize(v);
        if (!best || detail::canonical_less(n, *best)) best = n;
    };

    std::vector<long> lambda(dim, -box);
    while (true) {
        ZVec v(len, Integer(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (lambda[i] == 0) continue;
            for (std::size_t j = 0; j < len; ++j) v[j] += lambda[i] * basis[i][j];
        }
        consider(v);
        std::size_t pos = 0;
        while (pos < dim && lambda[pos] == box) lambda[pos++] = -box;
        if (pos == dim) break;
        ++lambda[pos];
    }
    // doubled basis vectors satisfy any parity constraint
    for (const ZVec& b : basis) {
        ZVec v(len);
        for (std::size_t j = 0; j < len; ++j) v[j] = 2 * b[j];
        consider(v);
    }
    return best;
}

}  // namespace multdep
