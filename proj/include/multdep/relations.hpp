#pragma once

// Multiplicative-dependence decision procedures.
//
// Over Q the decision is complete: values factor exactly over a pairwise
// coprime integer base (refined by gcds, never by hard factorizations), a
// sign-parity row handles -1, and dependence is a nontrivial integer kernel
// of the exponent matrix.  Pairwise coprime integers > 1 are multiplicatively
// independent, so this kernel is exactly the relation lattice.
//
// In a number field the search is exhaustive over bounded exponent vectors,
// with a root-of-unity witness certifying each relation; verdicts record the
// bound rather than claiming completeness.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/lattice.hpp"
#include "multdep/numberfield.hpp"
#include "multdep/rational.hpp"

namespace multdep {

// Exponent vector k (not all zero) with prod values^k equal to a root of
// unity of order witness_order; w = 1 means the product is exactly 1.
struct Relation {
    std::vector<long> exponents;
    unsigned long witness_order = 1;
    bool certified = false;
};

enum class DecisionMethod { complete_lattice, bounded_search };

struct IndependenceVerdict {
    bool dependent = false;
    std::optional<Relation> relation;
    DecisionMethod method = DecisionMethod::complete_lattice;
    std::optional<long> bound;          // bounded_search only
    std::optional<Rational> constant;   // modulo-constants checks
    long lattice_rank = 0;              // dimension of the relation lattice
};

namespace detail {

inline std::vector<long> to_longs(const ZVec& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const Integer& x : v) {
        if (!x.fits_slong_p()) throw internal_error("relation exponent exceeds long range");
        out.push_back(x.get_si());
    }
    return out;
}

}  // namespace detail

// Complete decision over Q.  The returned relation minimizes max-norm (then
// lexicographic order after sign normalization) among certified products
// equal to exactly 1.
inline IndependenceVerdict rational_dependence(const std::vector<Rational>& values) {
    if (values.empty()) throw input_error("rational_dependence: empty value list");
    for (const Rational& v : values)
        if (is_zero(v)) throw input_error("rational_dependence: zero value");

    IntegerExponentMatrix m = integer_exponent_matrix(values);
    ZMat a(m.rows.size(), ZVec(values.size()));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j) a[i][j] = m.rows[i][j];

    IndependenceVerdict verdict;
    verdict.method = DecisionMethod::complete_lattice;
    std::vector<ZVec> kernel = kernel_basis(a, values.size());
    verdict.lattice_rank = static_cast<long>(kernel.size());
    if (kernel.empty()) return verdict;

    // parity: prod sign_j^{k_j} must be +1
    auto parity_ok = [&](const ZVec& k) {
        int parity = 0;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (m.signs[j] < 0 && mpz_odd_p(k[j].get_mpz_t())) parity ^= 1;
        return parity == 0;
    };
    std::optional<ZVec> best = minimal_kernel_vector(kernel, parity_ok);
    if (!best) throw internal_error("parity-satisfying kernel vector not found");

    Relation rel;
    rel.exponents = detail::to_longs(*best);
    rel.witness_order = 1;
    // certify by exact product
    Rational prod(1);
    for (std::size_t j = 0; j < values.size(); ++j) prod *= pow_rational(values[j], rel.exponents[j]);
    if (prod != 1) throw internal_error("relation failed exact certification");
    rel.certified = true;
    verdict.dependent = true;
    verdict.relation = std::move(rel);
    return verdict;
}

// ----- bounded search with root-of-unity witness ---------------------------

namespace detail {

// Shell enumeration: 0 < max|k| <= B, graded by max-norm, lexicographic
// within a shell.  Returns the first k accepted by the visitor.
template <class Visit>
std::optional<std::vector<long>> graded_lex_search(std::size_t s, long bound, Visit&& visit) {
    std::vector<long> k(s);
    for (long r = 1; r <= bound; ++r) {
        for (long& x : k) x = -r;
        while (true) {
            bool on_shell = false;
            for (long x : k)
                if (x == r || x == -r) { on_shell = true; break; }
            if (on_shell && visit(k)) return k;
            std::size_t pos = s;
            while (pos > 0 && k[pos - 1] == r) k[--pos] = -r;
            if (pos == 0) break;
            ++k[pos - 1];
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Exhaustive bounded-exponent search in one number field.  The verdict is
// "independent up to B", never a completeness claim.
inline IndependenceVerdict bounded_field_dependence(const std::vector<FieldElement>& values, long bound,
                                                    long candidate_cap = 10000000) {
    if (values.empty()) throw input_error("bounded_field_dependence: empty value list");
    if (bound < 1) throw input_error("bounded_field_dependence: bound must be >= 1");
    const NumberField* field = nullptr;
    for (const FieldElement& v : values) {
        if (is_zero(v)) throw input_error("bounded_field_dependence: zero value");
        if (!field) field = v.field();
        else if (!field->same_field(*v.field()))
            throw input_error("bounded_field_dependence: values from different fields");
    }
    const std::size_t s = values.size();
    double count = 1;
    for (std::size_t i = 0; i < s; ++i) count *= 2.0 * static_cast<double>(bound) + 1.0;
    if (count - 1.0 > static_cast<double>(candidate_cap))
        throw budget_error("bounded_field_dependence: candidate count exceeds cap", bound);

    // power tables values[i]^e for |e| <= B
    std::vector<std::vector<FieldElement>> pows(s, std::vector<FieldElement>(2 * bound + 1));
    FieldElement one = FieldElement::constant(*field, Rational(1));
    for (std::size_t i = 0; i < s; ++i) {
        pows[i][static_cast<std::size_t>(bound)] = one;
        FieldElement inv = values[i].inverse();
        for (long e = 1; e <= bound; ++e) {
            pows[i][static_cast<std::size_t>(bound + e)] = pows[i][static_cast<std::size_t>(bound + e - 1)] * values[i];
            pows[i][static_cast<std::size_t>(bound - e)] = pows[i][static_cast<std::size_t>(bound - e + 1)] * inv;
        }
    }

    IndependenceVerdict verdict;
    verdict.method = DecisionMethod::bounded_search;
    verdict.bound = bound;

    std::optional<unsigned long> witness;
    auto accept = [&](const std::vector<long>& k) {
        FieldElement prod = one;
        for (std::size_t i = 0; i < s; ++i) {
            if (k[i] == 0) continue;
            prod = prod * pows[i][static_cast<std::size_t>(bound + k[i])];
        }
        if (is_zero(prod)) throw internal_error("zero product of nonzero field elements");
        witness = is_root_of_unity(prod);
        return witness.has_value();
    };
    auto found = detail::graded_lex_search(s, bound, accept);
    if (!found) return verdict;  // independent up to B

    Relation rel;
    rel.exponents = *found;
    rel.witness_order = *witness;
    // re-certify: (prod)^w == 1 exactly
    FieldElement prod = one;
    for (std::size_t i = 0; i < s; ++i)
        if (rel.exponents[i] != 0) prod = prod * pow_element(values[i], rel.exponents[i]);
    if (pow_element(prod, static_cast<long>(rel.witness_order)) != one)
        throw internal_error("field relation failed exact certification");
    rel.certified = true;
    verdict.dependent = true;
    verdict.relation = std::move(rel);
    return verdict;
}

}  // namespace multdep
