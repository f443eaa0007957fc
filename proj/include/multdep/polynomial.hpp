#pragma once

// Dense exact-coefficient univariate polynomials over a field scalar T
// (Rational, or a number-field element).  Canonical form: no trailing zero
// coefficients; degree of the zero polynomial is -1.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multdep/errors.hpp"
#include "multdep/modular.hpp"
#include "multdep/rational.hpp"

namespace multdep {

// Scalar-by-machine-integer product; overload for scalars not constructible
// from long.
template <class T>
T times_int(const T& x, long k) {
    return x * T(k);
}

template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
    // v * X^k
    static Polynomial monomial(T v, std::size_t k) {
        std::vector<T> c(k + 1);
        c[k] = std::move(v);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<T>& coefficients() const { return c_; }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
    const T& lead() const {
        if (c_.empty()) throw input_error("lead of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        std::vector<T> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) c[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) c[i] = a.c_[i];
            else c[i] = b.c_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Polynomial();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (is_zero(b.c_[j])) continue;
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> c(p.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division; the divisor's leading coefficient must be a unit.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero_poly()) throw input_error("polynomial division by zero");
        Polynomial r = a;
        if (a.degree() < b.degree()) return {Polynomial(), r};
        std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        while (!r.is_zero_poly() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            T factor = r.lead() / b.lead();
            q[shift] = factor;
            // r -= factor * X^shift * b, done in place on the tail
            std::vector<T> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] = rc[i + shift] - factor * b.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), r};
    }

    T eval(const T& x) const {
        T acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = times_int(c_[i], static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned long e) const;

    // p(q(X)) by Horner over polynomials.
    Polynomial compose_poly(const Polynomial& q) const {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * q;
            acc += constant(c_[i]);
        }
        return acc;
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const T& c : c_) {
            if (!is_zero(c)) ++n;
        }
        return n;
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
Polynomial<T> Polynomial<T>::pow(unsigned long e) const {
    if (e == 0) {
        if (is_zero_poly()) throw input_error("0^0 polynomial power");
        return constant(lead() / lead());
    }
    Polynomial base = *this, acc;
    bool started = false;
    while (e > 0) {
        if (e & 1) {
            acc = started ? acc * base : base;
            started = true;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class T>
Polynomial<T> gcd_poly(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    T inv = a.lead() / (a.lead() * a.lead());
    return inv * a;  // monic
}

// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <class T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> xgcd_poly(Polynomial<T> a, Polynomial<T> b) {
    using P = Polynomial<T>;
    P r0 = a, r1 = b;
    P s0, s1, t0, t1;
    bool have_unit = !a.is_zero_poly() || !b.is_zero_poly();
    if (!have_unit) return {P(), P(), P()};
    const T& some = a.is_zero_poly() ? b.lead() : a.lead();
    T one = some / some;
    s0 = P::constant(one);
    t1 = P::constant(one);
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    T inv = one / r0.lead();
    return {inv * r0, inv * s0, inv * t0};
}

// Yun's squarefree decomposition (characteristic 0): returns the list of
// (squarefree factor, multiplicity), factors monic and pairwise coprime.
template <class T>
std::vector<std::pair<Polynomial<T>, long>> squarefree_decomposition(const Polynomial<T>& f) {
    std::vector<std::pair<Polynomial<T>, long>> out;
    if (f.degree() < 1) return out;
    T inv = f.lead() / (f.lead() * f.lead());
    Polynomial<T> p = inv * f;
    Polynomial<T> dp = p.derivative();
    Polynomial<T> a = gcd_poly(p, dp);
    Polynomial<T> b = divmod(p, a).first;
    Polynomial<T> c = divmod(dp, a).first;
    Polynomial<T> d = c - b.derivative();
    long mult = 1;
    while (b.degree() > 0) {
        Polynomial<T> g = gcd_poly(b, d);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& f) {
    Polynomial<T> out;
    bool first = true;
    for (const auto& [g, m] : squarefree_decomposition(f)) {
        out = first ? g : out * g;
        first = false;
    }
    return out;
}

template <class T>
bool has_multiple_roots(const Polynomial<T>& f) {
    if (f.degree() < 2) return false;
    return gcd_poly(f, f.derivative()).degree() > 0;
}

// ----- Q-specific helpers -----------------------------------------------

using QPoly = Polynomial<Rational>;

// Clearing denominators and content: f = (unit/denominator) * primitive
// integer polynomial with positive leading coefficient.
struct IntegerPoly {
    std::vector<Integer> coeffs;  // primitive, positive leading coefficient
    Rational scale;               // f = scale * coeffs
};

inline IntegerPoly to_integer_poly(const QPoly& f) {
    IntegerPoly out;
    if (f.is_zero_poly()) {
        out.scale = Rational(0);
        return out;
    }
    Integer d(1);
    for (const Rational& c : f.coefficients()) d = lcm(d, den(c));
    std::vector<Integer> ic;
    ic.reserve(f.coefficients().size());
    Integer content(0);
    for (const Rational& c : f.coefficients()) {
        Integer v = num(c) * (d / den(c));
        content = gcd(content, v);
        ic.push_back(v);
    }
    if (sgn(ic.back()) < 0) content = -content;
    for (Integer& v : ic) v /= content;
    out.coeffs = std::move(ic);
    out.scale = make_rational(content, d);
    return out;
}

inline QPoly from_integer_poly(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const Integer& v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

// Exact rational evaluation of an arbitrary-degree polynomial at p/q via the
// homogeneous form sum a_i p^i q^{d-i} / q^d.
inline Rational eval_at_rational(const QPoly& f, const Rational& x) { return f.eval(x); }

// ----- integer polynomials and resultants ---------------------------------

namespace detail {

inline int zdeg(const std::vector<Integer>& p) { return static_cast<int>(p.size()) - 1; }

inline void ztrim(std::vector<Integer>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline Integer zcontent(const std::vector<Integer>& p) {
    Integer c(0);
    for (const Integer& v : p) c = gcd(c, v);
    return c;  // nonnegative
}

inline Integer zpow(const Integer& b, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Integer zdivexact(const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw internal_error("inexact division in subresultant chain");
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// lc(b)^{deg a - deg b + 1} * a  mod  b
inline std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    long e = zdeg(a) - zdeg(b) + 1;
    const Integer& lb = b.back();
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        std::size_t shift = static_cast<std::size_t>(zdeg(a) - zdeg(b));
        Integer la = a.back();
        for (Integer& v : a) v *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        ztrim(a);
        --e;
    }
    if (e > 0) {
        Integer f = zpow(lb, e);
        for (Integer& v : a) v *= f;
    }
    return a;
}

}  // namespace detail

// Resultant of two integer polynomials via the subresultant PRS.
inline Integer resultant_z(std::vector<Integer> a, std::vector<Integer> b) {
    detail::ztrim(a);
    detail::ztrim(b);
    if (a.empty() || b.empty()) return Integer(0);
    int sign = 1;
    if (detail::zdeg(a) < detail::zdeg(b)) {
        if ((detail::zdeg(a) & 1) && (detail::zdeg(b) & 1)) sign = -sign;
        std::swap(a, b);
    }
    Integer ca = detail::zcontent(a), cb = detail::zcontent(b);
    for (Integer& v : a) v /= ca;
    for (Integer& v : b) v /= cb;
    Integer t = detail::zpow(ca, detail::zdeg(b)) * detail::zpow(cb, detail::zdeg(a));
    if (detail::zdeg(a) == 0) return sign * t;  // both constants
    if (detail::zdeg(b) == 0) return sign * t * detail::zpow(b[0], detail::zdeg(a));

    Integer g(1), h(1);
    while (true) {
        long delta = detail::zdeg(a) - detail::zdeg(b);
        if ((detail::zdeg(a) & 1) && (detail::zdeg(b) & 1)) sign = -sign;
        std::vector<Integer> r = detail::pseudo_rem(a, b);
        a = std::move(b);
        Integer div = g * detail::zpow(h, delta);
        for (Integer& v : r) v = detail::zdivexact(v, div);
        b = std::move(r);
        g = a.back();
        if (delta > 0) h = detail::zdivexact(detail::zpow(g, delta), detail::zpow(h, delta - 1));
        if (b.empty()) return Integer(0);
        if (detail::zdeg(b) == 0) break;
    }
    long da = detail::zdeg(a);
    Integer res_prim = detail::zdivexact(detail::zpow(b[0], da), detail::zpow(h, da - 1));
    return sign * t * res_prim;
}

// gcd over Q via a mod-p triviality certificate plus a primitive PRS over Z.
// Plain rational Euclid suffers catastrophic coefficient growth at moderate
// degree; this overload supersedes the generic template for Q coefficients.
inline QPoly gcd_poly(const QPoly& a, const QPoly& b) {
    auto monic = [](const QPoly& p) {
        if (p.is_zero_poly()) return p;
        return (Rational(1) / p.lead()) * p;
    };
    if (a.is_zero_poly()) return monic(b);
    if (b.is_zero_poly()) return monic(a);
    std::vector<Integer> za = to_integer_poly(a).coeffs;
    std::vector<Integer> zb = to_integer_poly(b).coeffs;
    // a prime not dividing either leading coefficient bounds deg gcd from
    // above by the mod-p gcd degree
    for (unsigned long p : {1000003ul, 1000033ul, 1000037ul}) {
        if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0) continue;
        if (fp::gcd(fp::reduce(za, p), fp::reduce(zb, p), p).size() <= 1)
            return monic(QPoly::constant(Rational(1)));
        break;
    }
    if (detail::zdeg(za) < detail::zdeg(zb)) std::swap(za, zb);
    while (!zb.empty()) {
        std::vector<Integer> r = detail::pseudo_rem(za, zb);
        detail::ztrim(r);
        if (!r.empty()) {
            Integer c = detail::zcontent(r);
            for (Integer& v : r) v /= c;
        }
        za = std::move(zb);
        zb = std::move(r);
    }
    QPoly g = monic(from_integer_poly(za));
    if (!divmod(a, g).second.is_zero_poly() || !divmod(b, g).second.is_zero_poly())
        throw internal_error("primitive PRS produced a non-divisor");
    return g;
}

// Resultant over Q; f need not be primitive.  Res(f, g) with f, g rational.
inline Rational resultant_q(const QPoly& f, const QPoly& g) {
    if (f.is_zero_poly() || g.is_zero_poly()) return Rational(0);
    IntegerPoly fi = to_integer_poly(f), gi = to_integer_poly(g);
    Rational scale = pow_rational(fi.scale, g.degree()) * pow_rational(gi.scale, f.degree());
    return scale * Rational(resultant_z(fi.coeffs, gi.coeffs));
}

inline std::string poly_to_string(const QPoly& f, const std::string& var = "X") {
    if (f.is_zero_poly()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Rational c = f.coeff(static_cast<std::size_t>(i));
        if (is_zero(c)) continue;
        bool first = out.empty();
        bool negative = sgn(c) < 0;
        Rational a = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = a == 1;
        if (i == 0 || !unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace multdep
