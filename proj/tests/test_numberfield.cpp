#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "multdep/numberfield.hpp"
#include "multdep/parse.hpp"

using namespace multdep;

namespace {

FieldElement C(const NumberField& k, long n, long d = 1) {
    return FieldElement::constant(k, make_rational(Integer(n), Integer(d)));
}

}  // namespace

TEST_CASE("field arithmetic worked examples") {
    NumberField gauss(parse_polynomial("X^2+1"));
    FieldElement i = FieldElement::generator(gauss);
    CHECK(i * i == C(gauss, -1));
    CHECK(i * i * i * i == C(gauss, 1));

    NumberField sqrt2(parse_polynomial("X^2-2"));
    FieldElement x = FieldElement::generator(sqrt2);
    FieldElement q = (C(sqrt2, 1) + x) / (C(sqrt2, 1) - x);
    CHECK(q == FieldElement(sqrt2, {Rational(-3), Rational(-2)}));
    // verify (-3-2x)(1-x) = 1+x mod x^2-2
    CHECK(q * (C(sqrt2, 1) - x) == C(sqrt2, 1) + x);

    CHECK_THROWS_AS(C(sqrt2, 1) / FieldElement(), input_error);
    CHECK_THROWS_AS(i + x, input_error);  // field mismatch
}

TEST_CASE("field axioms on random elements") {
    NumberField k = NumberField::cyclotomic_field(5);
    std::mt19937_64 rng(20240301);
    std::uniform_int_distribution<long> dist(-5, 5);
    auto random_elem = [&] {
        std::vector<Rational> c(4);
        for (auto& v : c) v = make_rational(Integer(dist(rng)), Integer(1 + std::abs(dist(rng))));
        return FieldElement(k, std::move(c));
    };
    for (int trial = 0; trial < 50; ++trial) {
        FieldElement a = random_elem(), b = random_elem(), c = random_elem();
        if (!is_zero(b)) CHECK((a * b) / b == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("minimal polynomial examples") {
    NumberField sqrt2(parse_polynomial("X^2-2"));
    CHECK(minimal_polynomial(FieldElement::generator(sqrt2)) == parse_polynomial("X^2-2"));
    CHECK(minimal_polynomial(C(sqrt2, 3)) == parse_polynomial("X-3"));
    FieldElement a = C(sqrt2, 1) + FieldElement::generator(sqrt2);
    QPoly mp = minimal_polynomial(a);
    CHECK(mp == parse_polynomial("X^2-2*X-1"));
    // substitution oracle: mp(a) = 0 in the field
    FieldElement acc;
    for (std::size_t i = mp.coefficients().size(); i-- > 0;)
        acc = acc * a + FieldElement::constant(sqrt2, mp.coeff(i));
    CHECK(is_zero(acc));
}

TEST_CASE("house examples") {
    NumberField k5 = NumberField::cyclotomic_field(5);
    CertReal h5 = house(FieldElement::generator(k5));
    CHECK(h5.contains(Rational(1)));
    CHECK(h5.width() < 1e-20);

    NumberField sqrt2(parse_polynomial("X^2-2"));
    CHECK(house(C(sqrt2, 3)).contains(Rational(3)));
    CertReal h = house(C(sqrt2, 1) + FieldElement::generator(sqrt2));
    CHECK_THAT(h.mid(), Catch::Matchers::WithinAbs(1.0 + std::sqrt(2.0), 1e-12));
}

TEST_CASE("algebraic Weil height examples") {
    NumberField sqrt2(parse_polynomial("X^2-2"));
    CHECK(weil_height_alg(C(sqrt2, 1)).hi == 0);
    CertReal h23 = weil_height_alg(C(sqrt2, 2, 3));
    CHECK_THAT(h23.mid(), Catch::Matchers::WithinAbs(std::log(3.0), 1e-12));
    CHECK_THAT(h23.mid(), Catch::Matchers::WithinAbs(weil_height(make_rational(Integer(2), Integer(3))), 1e-12));

    NumberField k8 = NumberField::cyclotomic_field(8);
    CertReal h8 = weil_height_alg(FieldElement::generator(k8));
    CHECK(h8.lo == 0);
    CHECK(h8.hi.get_d() < 1e-20);
}

TEST_CASE("height consistency shrinks with precision") {
    NumberField k(parse_polynomial("X^2-2"));
    Rational v = make_rational(Integer(-14), Integer(9));
    double exact = weil_height(v);
    for (long prec : {64L, 128L, 192L}) {
        CertReal h = weil_height_alg(FieldElement::constant(k, v), prec);
        CHECK(h.lo.get_d() <= exact + 1e-15);
        CHECK(h.hi.get_d() >= exact - 1e-15);
        CHECK(h.width() <= std::ldexp(1.0, static_cast<int>(-prec / 2)));
    }
}

TEST_CASE("root of unity detection") {
    NumberField gauss(parse_polynomial("X^2+1"));
    CHECK(*is_root_of_unity(FieldElement::generator(gauss)) == 4);
    CHECK(*is_root_of_unity(C(gauss, -1)) == 2);
    CHECK_FALSE(is_root_of_unity(C(gauss, 1) + FieldElement::generator(gauss)).has_value());

    NumberField sqrt2(parse_polynomial("X^2-2"));
    CHECK_FALSE(is_root_of_unity(C(sqrt2, 1) + FieldElement::generator(sqrt2)).has_value());
}

TEST_CASE("root of unity completeness over cyclotomic fields") {
    for (long n = 1; n <= 60; ++n) {
        NumberField k = NumberField::cyclotomic_field(n);
        FieldElement z = FieldElement::generator(k);
        auto order = is_root_of_unity(z);
        REQUIRE(order.has_value());
        CHECK(*order == static_cast<unsigned long>(n == 1 ? 1 : n));
    }
}

TEST_CASE("Kronecker: height zero exactly at torsion") {
    std::mt19937_64 rng(20240302);
    std::uniform_int_distribution<long> ndist(3, 12);
    std::uniform_int_distribution<long> edist(0, 30);
    std::uniform_int_distribution<long> cdist(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        long n = ndist(rng);
        NumberField k = NumberField::cyclotomic_field(n);
        FieldElement z = FieldElement::generator(k);
        FieldElement a = trial % 2 == 0 ? pow_element(z, edist(rng) % n + 1) : [&] {
            std::vector<Rational> c(static_cast<std::size_t>(k.degree()));
            for (auto& v : c) v = Rational(cdist(rng));
            return FieldElement(k, std::move(c));
        }();
        if (is_zero(a)) continue;
        bool torsion = is_root_of_unity(a).has_value();
        CertReal h = weil_height_alg(a);
        if (torsion) {
            CHECK(h.lo == 0);
            CHECK(h.hi.get_d() < 1e-20);
        } else {
            CHECK(h.lo > 0);
        }
    }
}

TEST_CASE("algebraic integer tests") {
    NumberField sqrt2(parse_polynomial("X^2-2"));
    CHECK_FALSE(is_algebraic_integer(C(sqrt2, 1, 2)));
    CHECK(is_algebraic_integer(FieldElement::generator(sqrt2)));
    // golden-ratio style element with non-integral coordinates is integral
    NumberField sqrt5(parse_polynomial("X^2-5"));
    CHECK(is_algebraic_integer(FieldElement(sqrt5, {make_rational(Integer(1), Integer(2)),
                                                    make_rational(Integer(1), Integer(2))})));
    // zeta_6: 6 = 2*3 has two distinct prime factors, so 1/(zeta-1) is integral
    NumberField k6 = NumberField::cyclotomic_field(6);
    FieldElement z6 = FieldElement::generator(k6);
    CHECK(is_algebraic_integer(C(k6, 1) / (z6 - C(k6, 1))));
}

TEST_CASE("zeta_n - 1 unit law on a sample") {
    for (long n : {2L, 3L, 4L, 6L, 9L, 10L, 12L, 15L, 16L, 25L, 30L, 36L, 49L, 60L}) {
        NumberField k = NumberField::cyclotomic_field(n);
        FieldElement z = FieldElement::generator(k);
        bool integral = is_algebraic_integer(C(k, 1) / (z - C(k, 1)));
        bool prime_power = cyclotomic(n).eval(Rational(1)) != 1;
        INFO("n = " << n);
        CHECK(integral == !prime_power);
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(NumberField(parse_polynomial("2*X^2-2")), input_error);   // not monic
    CHECK_THROWS_AS(NumberField(parse_polynomial("X^2-1")), input_error);     // rational root
    NumberField k(parse_polynomial("X^4+X+1"));  // irreducible mod 2
    CHECK(k.irreducibility() == NumberField::Irreducibility::proven);
    NumberField q(parse_polynomial("X"), "Q");
    CHECK(q.degree() == 1);
    CHECK(*FieldElement::constant(q, Rational(7)).as_rational() == 7);
}
