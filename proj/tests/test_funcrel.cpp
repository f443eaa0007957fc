#include <catch_amalgamated.hpp>

#include <random>

#include "multdep/coprime_base.hpp"
#include "multdep/funcrel.hpp"
#include "multdep/parse.hpp"

using namespace multdep;

namespace {

QPoly P(const std::string& s) { return parse_polynomial(s); }
QFunc F(const std::string& s) { return parse_rational_function(s); }

QPoly random_nonmonomial(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> cdist(-4, 4);
    while (true) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = Rational(cdist(rng));
        if (is_zero(c.back())) continue;
        QPoly f(std::move(c));
        if (f.degree() == degree && f.term_count() >= 2) return f;
    }
}

}  // namespace

TEST_CASE("coprime base worked examples") {
    // [X^2-1, X-1] -> base {X-1, X+1}, exponent columns (1,1) and (1,0)
    CoprimeBase cb = coprime_base({F("X^2-1"), F("X-1")});
    REQUIRE(cb.elements.size() == 2);
    CHECK(cb.elements[0] == P("X-1"));
    CHECK(cb.elements[1] == P("X+1"));
    CHECK(cb.rows[0] == std::vector<long>{1, 1});
    CHECK(cb.rows[1] == std::vector<long>{1, 0});

    CoprimeBase single = coprime_base({F("X")});
    REQUIRE(single.elements.size() == 1);
    CHECK(single.elements[0] == P("X"));
    CHECK(single.rows[0] == std::vector<long>{1});

    // the worked triple: constants split out, exponents by inspection
    CoprimeBase triple = coprime_base({F("X+1"), F("X-1"), F("2*(X^2-1)")});
    REQUIRE(triple.elements.size() == 2);
    CHECK(triple.constants == std::vector<Rational>{Rational(1), Rational(1), Rational(2)});
    CHECK(triple.rows[0] == std::vector<long>{0, 1, 1});  // X-1
    CHECK(triple.rows[1] == std::vector<long>{1, 0, 1});  // X+1
}

TEST_CASE("coprime base soundness on random products") {
    std::mt19937_64 rng(20240201);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<long> expo(1, 3);
    const std::vector<QPoly> atoms{P("X"), P("X+1"), P("X-2"), P("X^2+1")};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<QFunc> inputs;
        for (int j = 0; j < 3; ++j) {
            QPoly n = P("1"), d = P("1");
            for (int a = 0; a < 3; ++a) {
                QPoly atom = atoms[static_cast<std::size_t>(pick(rng))];
                if (pick(rng) % 2)
                    n *= atom.pow(static_cast<unsigned long>(expo(rng)));
                else
                    d *= atom.pow(static_cast<unsigned long>(expo(rng)));
            }
            inputs.push_back(QFunc::reduce(n, d));
        }
        CoprimeBase cb = coprime_base(inputs);  // reconstruction checked internally
        for (std::size_t i = 0; i < cb.elements.size(); ++i)
            for (std::size_t j = i + 1; j < cb.elements.size(); ++j)
                CHECK(gcd_poly(cb.elements[i], cb.elements[j]).degree() == 0);
    }
}

TEST_CASE("independence modulo constants: worked examples") {
    auto triple = mult_indep_mod_constants({F("X+1"), F("X-1"), F("2*(X^2-1)")});
    CHECK(triple.dependent);
    CHECK(triple.relation->exponents == std::vector<long>{1, 1, -1});
    CHECK(*triple.constant == make_rational(Integer(1), Integer(2)));

    auto pair = mult_indep_mod_constants({F("X"), F("X+1")});
    CHECK_FALSE(pair.dependent);

    auto powers = mult_indep_mod_constants({F("X^2"), F("X^3")});
    CHECK(powers.dependent);
    CHECK(powers.relation->exponents == std::vector<long>{3, -2});
    CHECK(*powers.constant == 1);
}

TEST_CASE("power of a linear fractional function") {
    auto cube = is_power_of_linear_fractional(F("(X+1)^3"));
    CHECK(cube.is_power);
    CHECK(cube.power == 3);
    CHECK(*cube.ell_num == P("X+1"));
    CHECK_FALSE(cube.ell_den.has_value());

    CHECK_FALSE(is_power_of_linear_fractional(F("X^2+1")).is_power);

    auto frac = is_power_of_linear_fractional(F("(2*X+1)/(X-3)"));
    CHECK(frac.is_power);
    CHECK(frac.power == 1);
    CHECK(frac.scale == 2);

    CHECK(is_power_of_linear_fractional(F("7")).is_power);
    CHECK(is_power_of_linear_fractional(F("7")).power == 0);

    // mixed degrees are not powers of one linear fractional
    CHECK_FALSE(is_power_of_linear_fractional(F("(X+1)^2/(X-1)")).is_power);
}

TEST_CASE("multiplicative generation of linear fractional powers") {
    auto triple = generates_power_linear_fractional({F("X+1"), F("X-1"), F("2*(X^2-1)")});
    CHECK(triple.generates);
    CHECK(triple.product.power == 0);  // the constant case

    auto pair = generates_power_linear_fractional({F("X"), F("X+1")});
    CHECK(pair.generates);  // X alone is a first power of a linear function

    CHECK_FALSE(generates_power_linear_fractional({F("X^2+1")}).generates);
}

TEST_CASE("iterates of non-monomial polynomials are independent modulo constants") {
    std::mt19937_64 rng(20240202);
    std::uniform_int_distribution<int> deg(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly f = random_nonmonomial(rng, deg(rng));
        std::vector<QFunc> iterates;
        for (long n = 1; n <= 4; ++n) iterates.push_back(QFunc::from_poly(iterate_poly(f, n)));
        auto verdict = mult_indep_mod_constants(iterates);
        INFO("f = " << poly_to_string(f));
        CHECK_FALSE(verdict.dependent);
    }
}

TEST_CASE("generator verdict false implies independence modulo constants") {
    std::mt19937_64 rng(20240203);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<QFunc> funcs;
        int s = count(rng);
        for (int i = 0; i < s; ++i) funcs.push_back(QFunc::from_poly(random_nonmonomial(rng, 2 + (trial % 2))));
        auto gen = generates_power_linear_fractional(funcs);
        if (!gen.generates) {
            auto verdict = mult_indep_mod_constants(funcs);
            CHECK_FALSE(verdict.dependent);
        }
    }
}
