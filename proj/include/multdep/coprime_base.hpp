#pragma once

// Coprime bases for families of rational functions: a set of pairwise
// coprime, squarefree, monic, non-constant polynomials together with an
// integer exponent matrix and leading constants reconstructing every input
// exactly.  Divisor multiplicities can then be read off matrix entries,
// which is what the linear-fractional-power decisions need.

#include <algorithm>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/polynomial.hpp"
#include "multdep/rational_function.hpp"

namespace multdep {

struct CoprimeBase {
    std::vector<QPoly> elements;          // pairwise coprime squarefree monic, deg >= 1
    std::vector<std::vector<long>> rows;  // rows[i][j] = exponent of elements[i] in input j
    std::vector<Rational> constants;      // input j = constants[j] * prod elements^rows[.][j]
};

namespace detail {

inline bool poly_lex_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c < 0;
    }
    return false;
}

// Worklist refinement by pairwise gcd; inputs and outputs monic squarefree.
inline void coprime_insert_poly(std::vector<QPoly>& base, QPoly x) {
    std::vector<QPoly> pending{std::move(x)};
    while (!pending.empty()) {
        QPoly v = std::move(pending.back());
        pending.pop_back();
        if (v.degree() < 1) continue;
        bool requeued = false;
        for (std::size_t i = 0; i < base.size(); ++i) {
            QPoly g = gcd_poly(v, base[i]);
            if (g.degree() < 1) continue;
            if (g == base[i]) {
                // strip whole copies; the leftover may still share a proper
                // factor with base[i]
                do {
                    auto [q, r] = divmod(v, g);
                    if (!r.is_zero_poly()) break;
                    v = std::move(q);
                } while (v.degree() >= g.degree());
                if (v.degree() < 1) { requeued = true; break; }
                g = gcd_poly(v, base[i]);
                if (g.degree() < 1) continue;
            }
            QPoly b = base[i];
            base.erase(base.begin() + static_cast<long>(i));
            pending.push_back(divmod(b, g).first);
            pending.push_back(g);
            pending.push_back(std::move(v));
            requeued = true;
            break;
        }
        if (!requeued) base.push_back(std::move(v));
    }
}

inline long extract_exponent(QPoly& part, const QPoly& element) {
    long e = 0;
    while (part.degree() >= element.degree()) {
        auto [q, r] = divmod(part, element);
        if (!r.is_zero_poly()) break;
        part = std::move(q);
        ++e;
    }
    return e;
}

}  // namespace detail

inline CoprimeBase coprime_base(const std::vector<QFunc>& inputs) {
    if (inputs.empty()) throw input_error("coprime_base: empty input list");
    CoprimeBase out;
    for (const QFunc& f : inputs) {
        if (f.is_zero_function()) throw input_error("coprime_base: zero function");
        for (const QPoly* part : {&f.num(), &f.den()})
            for (const auto& [factor, mult] : squarefree_decomposition(*part))
                detail::coprime_insert_poly(out.elements, factor);
    }
    std::sort(out.elements.begin(), out.elements.end(), detail::poly_lex_less);

    out.rows.assign(out.elements.size(), std::vector<long>(inputs.size(), 0));
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        // canonical form keeps den monic, so the leading unit lives in num
        Rational unit = inputs[j].num().lead();
        out.constants.push_back(unit);
        QPoly n = (Rational(1) / unit) * inputs[j].num();
        QPoly d = inputs[j].den();
        for (std::size_t i = 0; i < out.elements.size(); ++i) {
            long en = detail::extract_exponent(n, out.elements[i]);
            long ed = detail::extract_exponent(d, out.elements[i]);
            out.rows[i][j] = en - ed;
        }
        if (n.degree() != 0 || d.degree() != 0)
            throw internal_error("coprime_base: refinement failed to cover an input");
    }

    // soundness: reconstruct every input exactly
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        QPoly rn = QPoly::constant(out.constants[j]);
        QPoly rd = QPoly::constant(Rational(1));
        for (std::size_t i = 0; i < out.elements.size(); ++i) {
            long e = out.rows[i][j];
            if (e > 0) rn *= out.elements[i].pow(static_cast<unsigned long>(e));
            if (e < 0) rd *= out.elements[i].pow(static_cast<unsigned long>(-e));
        }
        if (QFunc::reduce(rn, rd) != inputs[j])
            throw internal_error("coprime_base: reconstruction mismatch");
    }
    return out;
}

}  // namespace multdep
