#pragma once

// Exact function-field checkers: multiplicative independence modulo
// constants, the power-of-linear-fractional decision, and whether a family
// can multiplicatively generate a power of a linear fractional function.
// All three reduce to integer linear algebra on the coprime-base divisor
// matrix; a product of squarefree base elements is a power of a linear
// fractional function exactly when its divisor is supported on at most two
// degree-one points (or is zero, the constant case).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multdep/coprime_base.hpp"
#include "multdep/lattice.hpp"
#include "multdep/relations.hpp"

namespace multdep {

// Complete decision of dependence modulo constants over the finite places.
inline IndependenceVerdict mult_indep_mod_constants(const std::vector<QFunc>& functions) {
    if (functions.empty()) throw input_error("mult_indep_mod_constants: empty function list");
    CoprimeBase base = coprime_base(functions);
    ZMat a(base.rows.size(), ZVec(functions.size()));
    for (std::size_t i = 0; i < base.rows.size(); ++i)
        for (std::size_t j = 0; j < functions.size(); ++j) a[i][j] = base.rows[i][j];

    IndependenceVerdict verdict;
    verdict.method = DecisionMethod::complete_lattice;
    std::vector<ZVec> kernel = kernel_basis(a, functions.size());
    verdict.lattice_rank = static_cast<long>(kernel.size());
    if (kernel.empty()) return verdict;

    std::optional<ZVec> best = minimal_kernel_vector(kernel);
    if (!best) throw internal_error("nontrivial kernel without a representative");
    Relation rel;
    rel.exponents = detail::to_longs(*best);

    // certify: the exact product must be the predicted constant
    Rational constant(1);
    for (std::size_t j = 0; j < functions.size(); ++j)
        constant *= pow_rational(base.constants[j], rel.exponents[j]);
    QFunc prod = QFunc::from_poly(QPoly::constant(Rational(1)));
    for (std::size_t j = 0; j < functions.size(); ++j)
        prod = prod * functions[j].pow(rel.exponents[j]);
    if (!prod.is_constant() || prod.num().coeff(0) / prod.den().coeff(0) != constant)
        throw internal_error("mod-constants relation failed certification");
    rel.certified = true;
    rel.witness_order = 1;

    verdict.dependent = true;
    verdict.relation = std::move(rel);
    verdict.constant = constant;
    return verdict;
}

// phi = scale * ell(X)^power with deg ell <= 1 (over the algebraic closure;
// a linear polynomial power over Q forces a rational root, so rational data
// decide the question exactly).
struct LinFracWitness {
    bool is_power = false;
    long power = 0;
    Rational scale;
    std::optional<QPoly> ell_num, ell_den;  // at most degree 1, monic

    std::string describe() const {
        if (!is_power) return "not a power of a linear fractional function";
        std::string ell = "1";
        if (ell_num && ell_den)
            ell = "(" + poly_to_string(*ell_num) + ")/(" + poly_to_string(*ell_den) + ")";
        else if (ell_num)
            ell = poly_to_string(*ell_num);
        else if (ell_den)
            ell = "1/(" + poly_to_string(*ell_den) + ")";
        return to_string(scale) + " * (" + ell + ")^" + std::to_string(power);
    }
};

namespace detail {

// p monic = (X - beta)^k exactly? beta is forced by the subleading
// coefficient, then verified.
inline std::optional<Rational> linear_power_root(const QPoly& p) {
    const long k = p.degree();
    if (k == 0) return std::nullopt;
    Rational beta = -p.coeff(static_cast<std::size_t>(k - 1)) / Rational(k);
    QPoly lin = QPoly::monomial(Rational(1), 1) - QPoly::constant(beta);
    if (lin.pow(static_cast<unsigned long>(k)) == p) return beta;
    return std::nullopt;
}

}  // namespace detail

inline LinFracWitness is_power_of_linear_fractional(const QFunc& phi) {
    if (phi.is_zero_function()) throw input_error("is_power_of_linear_fractional: zero function");
    LinFracWitness w;
    Rational unit = phi.num().lead();
    QPoly n = (Rational(1) / unit) * phi.num();  // monic
    const QPoly& d = phi.den();                  // monic by canonical form
    w.scale = unit;
    if (n.degree() == 0 && d.degree() == 0) {
        w.is_power = true;
        w.power = 0;
        return w;
    }
    std::optional<Rational> bn, bd;
    if (n.degree() > 0) {
        bn = detail::linear_power_root(n);
        if (!bn) return w;
    }
    if (d.degree() > 0) {
        bd = detail::linear_power_root(d);
        if (!bd) return w;
    }
    if (n.degree() > 0 && d.degree() > 0 && n.degree() != d.degree()) return w;
    w.is_power = true;
    w.power = std::max(n.degree(), d.degree());
    if (n.degree() > 0) w.ell_num = QPoly::monomial(Rational(1), 1) - QPoly::constant(*bn);
    if (d.degree() > 0) w.ell_den = QPoly::monomial(Rational(1), 1) - QPoly::constant(*bd);
    return w;
}

// Witness for Definition-style generation of a power of a linear fractional
// function: exponents k (not all zero) with prod phi^k = scale * ell^power.
struct GeneratesWitness {
    bool generates = false;
    std::vector<long> exponents;
    LinFracWitness product;  // certification of the generated function
};

inline GeneratesWitness generates_power_linear_fractional(const std::vector<QFunc>& functions) {
    if (functions.empty()) throw input_error("generates_power_linear_fractional: empty function list");
    CoprimeBase base = coprime_base(functions);
    const std::size_t s = functions.size();
    const std::size_t r = base.elements.size();

    // finite rows plus the place at infinity (degree bookkeeping)
    ZMat m(r + 1, ZVec(s));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) m[i][j] = base.rows[i][j];
    for (std::size_t j = 0; j < s; ++j)
        m[r][j] = functions[j].den().degree() - functions[j].num().degree();

    auto certify = [&](const ZVec& k) -> std::optional<GeneratesWitness> {
        GeneratesWitness w;
        w.exponents = detail::to_longs(k);
        QFunc prod = QFunc::from_poly(QPoly::constant(Rational(1)));
        for (std::size_t j = 0; j < s; ++j) prod = prod * functions[j].pow(w.exponents[j]);
        w.product = is_power_of_linear_fractional(prod);
        if (!w.product.is_power) return std::nullopt;
        w.generates = true;
        return w;
    };

    // constant case: kernel of the full divisor matrix
    std::vector<ZVec> kernel = kernel_basis(m, s);
    if (!kernel.empty()) {
        std::optional<ZVec> best = minimal_kernel_vector(kernel);
        if (best) {
            auto w = certify(*best);
            if (!w) throw internal_error("kernel vector is not constant");
            return *w;
        }
    }

    // support-pair case: candidate points are degree-1 base elements and the
    // place at infinity; solve M k = t (e_P - e_Q) via the augmented kernel
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < r; ++i)
        if (base.elements[i].degree() == 1) candidates.push_back(i);
    candidates.push_back(r);  // infinity row

    for (std::size_t pi = 0; pi < candidates.size(); ++pi) {
        for (std::size_t qi = 0; qi < candidates.size(); ++qi) {
            if (pi == qi) continue;
            ZMat aug(r + 1, ZVec(s + 1));
            for (std::size_t i = 0; i <= r; ++i) {
                for (std::size_t j = 0; j < s; ++j) aug[i][j] = m[i][j];
                Integer c(0);
                if (i == candidates[pi]) c = 1;
                if (i == candidates[qi]) c -= 1;
                aug[i][s] = -c;
            }
            std::vector<ZVec> ker = kernel_basis(aug, s + 1);
            auto nonzero_t = [&](const ZVec& v) { return !is_zero(v[s]); };
            std::optional<ZVec> sol = minimal_kernel_vector(ker, nonzero_t);
            if (!sol) continue;
            ZVec k(sol->begin(), sol->end() - 1);
            auto w = certify(k);
            if (w) return *w;
            throw internal_error("support-pair solution failed linear-fractional certification");
        }
    }
    return GeneratesWitness{};
}

}  // namespace multdep
