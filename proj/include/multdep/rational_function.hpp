#pragma once

// Reduced quotients of polynomials.  Canonical form: gcd(num, den) = 1 and
// den monic, with the leading unit absorbed into the numerator.  The degree
// is max(deg num, deg den).

#include <optional>
#include <string>
#include <utility>

#include "multdep/errors.hpp"
#include "multdep/polynomial.hpp"

namespace multdep {

struct iterate_limit_error : budget_error {
    using budget_error::budget_error;
};

template <class T>
class RationalFunction {
  public:
    RationalFunction() = default;

    static RationalFunction reduce(Polynomial<T> numerator, Polynomial<T> denominator) {
        if (denominator.is_zero_poly()) throw input_error("rational function with zero denominator");
        RationalFunction out;
        if (numerator.is_zero_poly()) {
            T one = denominator.lead() / denominator.lead();
            out.num_ = Polynomial<T>();
            out.den_ = Polynomial<T>::constant(one);
            return out;
        }
        Polynomial<T> g = gcd_poly(numerator, denominator);
        if (g.degree() > 0) {
            numerator = divmod(numerator, g).first;
            denominator = divmod(denominator, g).first;
        }
        T unit = denominator.lead();
        T inv = (unit / unit) / unit;
        out.num_ = inv * numerator;
        out.den_ = inv * denominator;
        return out;
    }

    static RationalFunction from_poly(Polynomial<T> p) {
        if (p.is_zero_poly()) throw input_error("zero is not a valid rational function here");
        T one = p.lead() / p.lead();
        RationalFunction out;
        out.num_ = std::move(p);
        out.den_ = Polynomial<T>::constant(one);
        return out;
    }

    static RationalFunction identity(const T& exemplar_one) {
        RationalFunction out;
        out.num_ = Polynomial<T>::monomial(exemplar_one, 1);
        out.den_ = Polynomial<T>::constant(exemplar_one);
        return out;
    }

    const Polynomial<T>& num() const { return num_; }
    const Polynomial<T>& den() const { return den_; }

    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_zero_function() const { return num_.is_zero_poly(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Both numerator and denominator monic.
    bool is_monic() const {
        return !num_.is_zero_poly() && num_.lead() == den_.lead();
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero_function()) throw input_error("division by the zero function");
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction pow(long e) const {
        if (e == 0) {
            T one = den_.lead() / den_.lead();
            return from_poly(Polynomial<T>::constant(one));
        }
        const RationalFunction base = e < 0 ? reduce(den_, num_) : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        return reduce(base.num_.pow(k), base.den_.pow(k));
    }

    // Exact evaluation; nullopt when x is a pole.
    std::optional<T> eval(const T& x) const {
        T dv = den_.eval(x);
        if (is_zero(dv)) return std::nullopt;
        return num_.eval(x) / dv;
    }

  private:
    Polynomial<T> num_, den_;
};

// outer(inner), reduced.  Signals the indeterminate 0/0 that arises when the
// inner function is constant and sits on a pole of the outer one.
template <class T>
RationalFunction<T> compose(const RationalFunction<T>& outer, const RationalFunction<T>& inner) {
    // outer = f/g; result = sum f_i p^i q^{n-i} / sum g_j p^j q^{n-j}
    const Polynomial<T>& p = inner.num();
    const Polynomial<T>& q = inner.den();
    int n = std::max(outer.num().degree(), outer.den().degree());
    if (n < 0) throw input_error("composition with zero function");
    // powers of p and q up to n
    std::vector<Polynomial<T>> pp(static_cast<std::size_t>(n) + 1), qq(pp.size());
    T one = q.lead() / q.lead();
    pp[0] = Polynomial<T>::constant(one);
    qq[0] = pp[0];
    for (std::size_t i = 1; i < pp.size(); ++i) {
        pp[i] = pp[i - 1] * p;
        qq[i] = qq[i - 1] * q;
    }
    Polynomial<T> fn, gn;
    for (std::size_t i = 0; i < pp.size(); ++i) {
        T fc = outer.num().coeff(i);
        if (!is_zero(fc)) fn += Polynomial<T>::constant(fc) * pp[i] * qq[pp.size() - 1 - i];
        T gc = outer.den().coeff(i);
        if (!is_zero(gc)) gn += Polynomial<T>::constant(gc) * pp[i] * qq[pp.size() - 1 - i];
    }
    if (gn.is_zero_poly()) {
        if (fn.is_zero_poly())
            throw input_error("composition is the indeterminate 0/0 (constant inner value on an outer pole)");
        throw input_error("composition has identically zero denominator");
    }
    return RationalFunction<T>::reduce(std::move(fn), std::move(gn));
}

template <class T>
RationalFunction<T> compose(const Polynomial<T>& outer, const RationalFunction<T>& inner) {
    return compose(RationalFunction<T>::from_poly(outer), inner);
}

// phi^{(n)} with phi^{(0)} = X.  Guards against coefficient blowup via a
// configurable degree cap; the error reports the last completed iterate.
template <class T>
RationalFunction<T> iterate(const RationalFunction<T>& phi, long n, long max_degree = 10000) {
    if (n < 0) throw input_error("iterate: n must be nonnegative");
    if (phi.is_zero_function()) throw input_error("iterate: zero function");
    T one = phi.den().lead() / phi.den().lead();
    RationalFunction<T> acc = RationalFunction<T>::identity(one);
    for (long k = 1; k <= n; ++k) {
        acc = compose(phi, acc);
        if (acc.degree() > max_degree)
            throw iterate_limit_error("iterate: size limit exceeded", k);
    }
    return acc;
}

template <class T>
Polynomial<T> iterate_poly(const Polynomial<T>& f, long n, long max_degree = 10000) {
    if (n < 0) throw input_error("iterate: n must be nonnegative");
    if (f.is_zero_poly()) throw input_error("iterate: zero polynomial");
    T one = f.lead() / f.lead();
    Polynomial<T> acc = Polynomial<T>::monomial(one, 1);
    for (long k = 1; k <= n; ++k) {
        acc = f.compose_poly(acc);
        if (acc.degree() > max_degree)
            throw iterate_limit_error("iterate: size limit exceeded", k);
    }
    return acc;
}

using QFunc = RationalFunction<Rational>;

inline std::string func_to_string(const QFunc& phi, const std::string& var = "X") {
    if (phi.is_polynomial()) return poly_to_string(phi.num(), var);
    return "(" + poly_to_string(phi.num(), var) + ")/(" + poly_to_string(phi.den(), var) + ")";
}

}  // namespace multdep
