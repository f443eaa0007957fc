#pragma once

// Arithmetic in K = Q[x]/(m(x)) for monic m asserted irreducible: element
// operations, minimal polynomials, norms via resultants, certified complex
// embeddings, house and Weil height, root-of-unity and algebraic-integer
// tests.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multdep/cdisk.hpp"
#include "multdep/errors.hpp"
#include "multdep/families.hpp"
#include "multdep/modular.hpp"
#include "multdep/polynomial.hpp"
#include "multdep/roots.hpp"

namespace multdep {

namespace detail {

inline bool has_rational_root(const std::vector<Integer>& p) {
    // candidates r/s with r | p_0, s | p_d
    if (p.size() < 2) return false;
    if (is_zero(p.front())) return true;  // root 0
    Integer a0 = abs(p.front()), ad = abs(p.back());
    std::vector<Integer> rs, ss;
    for (Integer d(1); d * d <= a0; ++d)
        if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) {
            rs.push_back(d);
            rs.push_back(a0 / d);
        }
    for (Integer d(1); d * d <= ad; ++d)
        if (mpz_divisible_p(ad.get_mpz_t(), d.get_mpz_t())) {
            ss.push_back(d);
            ss.push_back(ad / d);
        }
    QPoly f = from_integer_poly(p);
    for (const Integer& r : rs)
        for (const Integer& s : ss) {
            Rational cand = make_rational(r, s);
            if (is_zero(f.eval(cand)) || is_zero(f.eval(-cand))) return true;
        }
    return false;
}

// distinct-degree sweep mod p: true when f stays irreducible mod p (proves
// irreducibility over Q for primitive integral f with lc not divisible by p)
inline bool irreducible_mod_p(const std::vector<Integer>& f, unsigned long p);

}  // namespace detail

class NumberField {
  public:
    enum class Irreducibility { proven, asserted };

    explicit NumberField(QPoly modulus, std::string label = "")
        : modulus_(std::move(modulus)), label_(std::move(label)) {
        if (modulus_.degree() < 1) throw input_error("field modulus must have degree >= 1");
        if (modulus_.lead() != 1) throw input_error("field modulus must be monic");
        IntegerPoly ip = to_integer_poly(modulus_);
        integral_ = ip.scale == 1;
        if (integral_) zmod_ = ip.coeffs;
        irr_ = classify();
        if (label_.empty()) label_ = poly_to_string(modulus_, "x");
    }

    static NumberField cyclotomic_field(long n) {
        NumberField k(cyclotomic(n), "cyclotomic:" + std::to_string(n));
        k.irr_ = Irreducibility::proven;
        return k;
    }

    const QPoly& modulus() const { return modulus_; }
    long degree() const { return modulus_.degree(); }
    Irreducibility irreducibility() const { return irr_; }
    bool integral_modulus() const { return integral_; }
    const std::vector<Integer>& modulus_z() const { return zmod_; }
    const std::string& label() const { return label_; }

    bool same_field(const NumberField& o) const { return modulus_ == o.modulus_; }

    // certified root disks of the modulus, cached per precision
    const std::vector<Disk>& embeddings(long prec_bits = 128) const {
        if (emb_prec_ < prec_bits) {
            emb_ = certified_roots(modulus_, prec_bits);
            emb_prec_ = prec_bits;
        }
        return emb_;
    }

  private:
    Irreducibility classify() const {
        const long d = degree();
        if (d == 1) return Irreducibility::proven;
        if (integral_) {
            if (detail::has_rational_root(zmod_))
                throw input_error("field modulus is reducible (rational root)");
            if (d <= 3) return Irreducibility::proven;
            for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
                if (mpz_divisible_ui_p(zmod_.back().get_mpz_t(), p)) continue;
                if (detail::irreducible_mod_p(zmod_, p)) return Irreducibility::proven;
            }
        }
        return Irreducibility::asserted;
    }

    QPoly modulus_;
    std::string label_;
    bool integral_ = false;
    std::vector<Integer> zmod_;
    Irreducibility irr_ = Irreducibility::asserted;
    mutable long emb_prec_ = 0;
    mutable std::vector<Disk> emb_;
};

// Residue-class vector in Q[x]/(m).  A default-constructed element is the
// zero of any field, so generic polynomial code can use T{}.
class FieldElement {
  public:
    FieldElement() = default;

    FieldElement(const NumberField& field, std::vector<Rational> coords) : field_(&field) {
        QPoly p{std::move(coords)};
        if (p.degree() >= field.degree()) p = divmod(p, field.modulus()).second;
        coords_ = pad(p, field.degree());
        normalize();
    }

    static FieldElement from_poly(const NumberField& field, const QPoly& p) {
        return FieldElement(field, p.coefficients());
    }
    static FieldElement constant(const NumberField& field, Rational c) {
        return FieldElement(field, std::vector<Rational>{std::move(c)});
    }
    static FieldElement generator(const NumberField& field) {
        return FieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
    }

    bool is_zero_elem() const { return field_ == nullptr; }
    const NumberField* field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    QPoly as_poly() const {
        return field_ ? QPoly(coords_) : QPoly();
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.is_zero_elem()) return b.is_zero_elem();
        if (b.is_zero_elem()) return false;
        a.check_same(b);
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement operator-() const {
        if (is_zero_elem()) return {};
        FieldElement out = *this;
        for (Rational& c : out.coords_) c = -c;
        return out;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        if (a.is_zero_elem()) return b;
        if (b.is_zero_elem()) return a;
        a.check_same(b);
        FieldElement out = a;
        for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] += b.coords_[i];
        out.normalize();
        return out;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        if (a.is_zero_elem() || b.is_zero_elem()) return {};
        a.check_same(b);
        QPoly prod = divmod(a.as_poly() * b.as_poly(), a.field_->modulus()).second;
        return from_reduced(*a.field_, prod);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        if (b.is_zero_elem()) throw input_error("field division by zero");
        if (a.is_zero_elem()) return {};
        a.check_same(b);
        return a * b.inverse();
    }

    FieldElement inverse() const {
        if (is_zero_elem()) throw input_error("field inverse of zero");
        auto [g, u, v] = xgcd_poly(as_poly(), field_->modulus());
        if (g.degree() != 0)
            throw input_error("modulus is reducible: encountered a zero divisor");
        QPoly inv = divmod(u, field_->modulus()).second;
        return from_reduced(*field_, (Rational(1) / g.coeff(0)) * inv);
    }

    // rational value when the element is a constant
    std::optional<Rational> as_rational() const {
        if (is_zero_elem()) return Rational(0);
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!is_zero(coords_[i])) return std::nullopt;
        return coords_[0];
    }

  private:
    static std::vector<Rational> pad(const QPoly& p, long degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i);
        return c;
    }
    static FieldElement from_reduced(const NumberField& field, const QPoly& p) {
        FieldElement out;
        out.field_ = &field;
        out.coords_ = pad(p, field.degree());
        out.normalize();
        return out;
    }
    void normalize() {
        for (const Rational& c : coords_)
            if (!is_zero(c)) return;
        field_ = nullptr;
        coords_.clear();
    }
    void check_same(const FieldElement& o) const {
        if (!field_->same_field(*o.field_)) throw input_error("field elements from different fields");
    }

    friend FieldElement times_int(const FieldElement& x, long k);

    const NumberField* field_ = nullptr;
    std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero_elem(); }

inline FieldElement times_int(const FieldElement& x, long k) {
    if (x.is_zero_elem() || k == 0) return {};
    FieldElement out = x;
    for (Rational& c : out.coords_) c *= k;
    return out;
}

inline FieldElement pow_element(const FieldElement& a, long e) {
    if (e == 0) {
        if (a.is_zero_elem()) throw input_error("0^0 in a number field");
        return FieldElement::constant(*a.field(), Rational(1));
    }
    FieldElement base = e < 0 ? a.inverse() : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement acc;
    bool started = false;
    while (k > 0) {
        if (k & 1) {
            acc = started ? acc * base : base;
            started = true;
        }
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

inline std::string to_string(const FieldElement& a) {
    if (a.is_zero_elem()) return "0";
    return poly_to_string(a.as_poly(), "x");
}

// ----- norms, minimal polynomials -----------------------------------------

// N_{K/Q}(a) = Res(m, A) for monic m; exact.
inline Rational field_norm(const FieldElement& a) {
    if (a.is_zero_elem()) return Rational(0);
    return resultant_q(a.field()->modulus(), a.as_poly());
}

// Monic minimal polynomial over Q by linear algebra on the powers 1, a, ...
inline QPoly minimal_polynomial(const FieldElement& a) {
    if (a.is_zero_elem()) return QPoly::monomial(Rational(1), 1);  // X
    const NumberField& k = *a.field();
    const std::size_t d = static_cast<std::size_t>(k.degree());

    struct Row {
        std::vector<Rational> vec;    // reduced coordinates
        std::vector<Rational> combo;  // expression over powers of a
        std::size_t pivot;
    };
    std::vector<Row> echelon;
    FieldElement power = FieldElement::constant(k, Rational(1));
    for (std::size_t step = 0;; ++step) {
        std::vector<Rational> vec(d, Rational(0));
        if (!power.is_zero_elem())
            for (std::size_t i = 0; i < d; ++i) vec[i] = power.coords()[i];
        std::vector<Rational> combo(step + 1, Rational(0));
        combo[step] = Rational(1);
        for (const Row& row : echelon) {
            const Rational& c = vec[row.pivot];
            if (is_zero(c)) continue;
            Rational f = c;  // row.vec has pivot 1
            for (std::size_t i = 0; i < d; ++i) vec[i] -= f * row.vec[i];
            for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= f * row.combo[i];
        }
        std::size_t pivot = d;
        for (std::size_t i = 0; i < d; ++i)
            if (!is_zero(vec[i])) {
                pivot = i;
                break;
            }
        if (pivot == d) return QPoly(std::move(combo));  // monic by construction
        Rational inv = Rational(1) / vec[pivot];
        for (std::size_t i = 0; i < d; ++i) vec[i] *= inv;
        for (std::size_t i = 0; i < combo.size(); ++i) combo[i] *= inv;
        echelon.push_back(Row{std::move(vec), std::move(combo), pivot});
        power = power * a;
    }
}

// ----- root of unity, integrality ------------------------------------------

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Smallest w with a^w = 1, if any; complete because torsion in a degree-d
// field has phi(order) <= d, so candidates are exhausted.
inline std::optional<unsigned long> is_root_of_unity(const FieldElement& a) {
    if (a.is_zero_elem()) throw input_error("is_root_of_unity: zero input");
    const long d = a.field()->degree();
    if (auto c = a.as_rational()) {
        if (*c == 1) return 1;
        if (*c == -1) return 2;
        return std::nullopt;
    }
    Rational n = field_norm(a);
    if (abs(num(n)) != den(n)) return std::nullopt;  // |N(a)| != 1
    unsigned long wmax = 2;
    for (unsigned long w = 1; w <= 4 * static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 4; ++w)
        if (euler_phi(w) <= static_cast<unsigned long>(d)) wmax = w;
    FieldElement one = FieldElement::constant(*a.field(), Rational(1));
    FieldElement cur = a;
    for (unsigned long w = 1; w <= wmax; ++w) {
        if (cur == one) return w;
        cur = cur * a;
    }
    return std::nullopt;
}

// True iff the monic minimal polynomial has integer coefficients.  Fast
// paths when the modulus is integral: integer coordinates give membership in
// Z[theta]; a norm with leftover denominator rules integrality out.
inline bool is_algebraic_integer(const FieldElement& a) {
    if (a.is_zero_elem()) return true;
    if (auto c = a.as_rational()) return den(*c) == 1;
    const NumberField& k = *a.field();
    if (k.integral_modulus()) {
        Integer d(1);
        for (const Rational& c : a.coords()) d = lcm(d, den(c));
        if (d == 1) return true;  // a in Z[theta]
        // norm denominator test: N(a) = Res(m, D*A)/D^deg must be integral
        Rational nm = field_norm(a);
        if (den(nm) != 1) return false;
    }
    QPoly mp = minimal_polynomial(a);
    for (const Rational& c : mp.coefficients())
        if (den(c) != 1) return false;
    return true;
}

// ----- house and Weil height ----------------------------------------------

// max |sigma(a)| over all conjugates, as a certified enclosure.
inline CertReal house(const FieldElement& a, long prec_bits = 128) {
    if (a.is_zero_elem()) throw input_error("house: zero input");
    if (auto c = a.as_rational()) {
        Rational v = abs(*c);
        return {v, v};
    }
    QPoly mp = minimal_polynomial(a);
    return max_root_abs(certified_roots(mp, prec_bits));
}

// (1/deg)(log |lead| + sum log max(1, |root|)) of the primitive integral
// minimal polynomial: the absolute logarithmic Weil height, certified.
inline CertReal weil_height_alg(const FieldElement& a, long prec_bits = 128) {
    if (a.is_zero_elem()) throw input_error("weil_height_alg: zero input");
    QPoly mp = minimal_polynomial(a);
    IntegerPoly ip = to_integer_poly(mp);
    const long e = mp.degree();
    Integer lead = ip.coeffs.back();
    CertReal total = log_enclosure(Rational(abs(lead)), prec_bits);
    if (e >= 1) {
        for (const Disk& disk : certified_roots(mp, prec_bits)) {
            Rational lo = disk.abs_lower(prec_bits + 16), hi = disk.abs_upper(prec_bits + 16);
            if (hi <= 1) continue;  // contributes log max(1,.) = 0 on both ends
            CertReal upper_log = log_enclosure(hi, prec_bits);
            total.hi += upper_log.hi;
            if (lo > 1) total.lo += log_enclosure(lo, prec_bits).lo;
        }
    }
    Rational inv_deg = make_rational(Integer(1), Integer(e));
    CertReal out{total.lo * inv_deg, total.hi * inv_deg};
    if (sgn(out.lo) < 0) out.lo = Rational(0);  // heights are nonnegative
    return out;
}

namespace detail {

// Distinct-degree sweep mod p: f irreducible mod p (with full degree and
// squarefree image) proves irreducibility over Q.
inline bool irreducible_mod_p(const std::vector<Integer>& f, unsigned long p) {
    fp::Poly fbar = fp::reduce(f, p);
    if (fbar.size() != f.size()) return false;  // degree dropped
    const std::size_t d = fbar.size() - 1;
    fp::Poly df = fp::derivative(fbar, p);
    if (df.empty() || fp::gcd(fbar, df, p).size() > 1) return false;
    // x^{p^k} mod f by repeated p-th powering of x
    fp::Poly xp{0, 1};
    for (std::size_t k = 1; 2 * k <= d; ++k) {
        fp::Poly base = xp, acc{1};
        unsigned long e = p;
        while (e > 0) {
            if (e & 1) acc = fp::mulmod(acc, base, fbar, p);
            e >>= 1;
            if (e) base = fp::mulmod(base, base, fbar, p);
        }
        xp = std::move(acc);
        // gcd(x^{p^k} - x, f) must be trivial
        fp::Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp::trim(diff);
        if (diff.empty()) return false;  // every factor degree divides k < d
        if (fp::gcd(fbar, diff, p).size() > 1) return false;
    }
    return true;
}

}  // namespace detail

}  // namespace multdep
