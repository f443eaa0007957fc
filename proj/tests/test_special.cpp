#include <catch_amalgamated.hpp>

#include <random>

#include "multdep/parse.hpp"
#include "multdep/special.hpp"

using namespace multdep;

TEST_CASE("special detection worked examples") {
    auto t3 = is_special(chebyshev(3));
    REQUIRE(t3.has_value());
    CHECK(t3->target == SpecialTarget::plus_cheb);
    CHECK(t3->a == 1);
    CHECK(t3->b == 0);

    auto half = is_special(parse_polynomial("2*X^2-1"));
    REQUIRE(half.has_value());
    CHECK(half->target == SpecialTarget::plus_cheb);
    CHECK(half->a == make_rational(Integer(1), Integer(2)));
    CHECK(half->b == 0);
    CHECK(conjugate_by_affine(chebyshev(2), half->a, half->b) == parse_polynomial("2*X^2-1"));

    CHECK_FALSE(is_special(parse_polynomial("X^2+1")).has_value());
    CHECK_FALSE(is_special(parse_polynomial("X^3+X+1")).has_value());
}

TEST_CASE("quadratic classification: X^2 + c special iff c in {0, -2}") {
    for (long c = -5; c <= 5; ++c) {
        QPoly f = parse_polynomial("X^2") + QPoly::constant(Rational(c));
        bool expected = c == 0 || c == -2;
        CHECK(is_special(f).has_value() == expected);
    }
}

TEST_CASE("special detection round trip on random conjugates") {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<long> ddist(2, 6);
    std::uniform_int_distribution<long> numdist(-6, 6);
    std::uniform_int_distribution<long> dendist(1, 4);
    std::uniform_int_distribution<int> tdist(0, 3);
    const SpecialTarget targets[] = {SpecialTarget::plus_power, SpecialTarget::minus_power,
                                     SpecialTarget::plus_cheb, SpecialTarget::minus_cheb};
    for (int trial = 0; trial < 60; ++trial) {
        long d = ddist(rng);
        SpecialTarget t = targets[tdist(rng)];
        Rational a(0), b;
        while (is_zero(a)) a = make_rational(Integer(numdist(rng)), Integer(dendist(rng)));
        b = make_rational(Integer(numdist(rng)), Integer(dendist(rng)));
        QPoly f = conjugate_by_affine(target_polynomial(t, d), a, b);
        auto w = is_special(f);
        REQUIRE(w.has_value());
        CHECK(canonical_target_class(w->target, d) == canonical_target_class(t, d));
        CHECK(conjugate_by_affine(target_polynomial(w->target, d), w->a, w->b) == f);
    }
}

TEST_CASE("compositional square root of T_4") {
    SqrtT4Result r = compositional_sqrt_T4();
    CHECK(r.f == parse_polynomial("X^2-2"));
    CHECK(r.f == chebyshev(2));
    CHECK(r.f.compose_poly(r.f) == chebyshev(4));
    CHECK(r.f.compose_poly(r.f) == parse_polynomial("X^4-4*X^2+2"));
    CHECK_FALSE(r.trace.empty());
    // negative control: X^2 - 1 composed with itself misses T_4
    QPoly g = parse_polynomial("X^2-1");
    CHECK(g.compose_poly(g) == parse_polynomial("X^4-2*X^2"));
    CHECK(g.compose_poly(g) != chebyshev(4));
}
