#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "multdep/rational.hpp"

using namespace multdep;

namespace {

// independent trial-division oracle, test-side only
std::map<Integer, long> trial_division_oracle(Integer n) {
    std::map<Integer, long> out;
    n = abs(n);
    for (Integer p(2); p * p <= n; ++p)
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            out[p] += 1;
            n /= p;
        }
    if (n > 1) out[n] += 1;
    return out;
}

}  // namespace

TEST_CASE("factor_integer on the worked examples") {
    auto f1 = factor_integer(Integer(1));
    CHECK(f1.sign == 1);
    CHECK(f1.exponents.empty());

    auto f12 = factor_integer(Integer(12));
    CHECK(f12.sign == 1);
    CHECK(f12.exponents == std::map<Integer, long>{{Integer(2), 2}, {Integer(3), 1}});

    // 2016 appears as the constant log 2016 in the term-count lower bound
    auto f2016 = factor_integer(Integer(2016));
    CHECK(f2016.exponents == trial_division_oracle(Integer(2016)));
    CHECK(f2016.exponents == std::map<Integer, long>{{Integer(2), 5}, {Integer(3), 2}, {Integer(7), 1}});

    auto fneg = factor_integer(Integer(-45));
    CHECK(fneg.sign == -1);
    CHECK(fneg.reconstruct() == -45);

    CHECK_THROWS_AS(factor_integer(Integer(0)), input_error);
}

TEST_CASE("factorization round trip on random integers") {
    std::mt19937_64 rng(20240001);
    std::uniform_int_distribution<long> dist(1, 1000000000000L);
    std::bernoulli_distribution coin;
    for (int i = 0; i < 10000; ++i) {
        Integer n(dist(rng));
        if (coin(rng)) n = -n;
        CHECK(factor_integer(n).reconstruct() == n);
    }
}

TEST_CASE("valuation examples and guards") {
    CHECK(valuation(make_rational(Integer(3), Integer(8)), Integer(2)) == -3);
    CHECK(valuation(Rational(9), Integer(3)) == 2);
    CHECK(valuation(make_rational(Integer(10), Integer(21)), Integer(7)) == -1);
    CHECK_THROWS_AS(valuation(Rational(0), Integer(2)), input_error);
    CHECK_THROWS_AS(valuation(Rational(5), Integer(6)), input_error);
}

TEST_CASE("valuation agrees with the factorization exponent") {
    std::mt19937_64 rng(20240002);
    std::uniform_int_distribution<long> dist(1, 100000);
    for (int i = 0; i < 200; ++i) {
        Rational q = make_rational(Integer(dist(rng)), Integer(dist(rng)));
        if (is_zero(q)) continue;
        auto fn = factor_integer(num(q));
        auto fd = factor_integer(den(q));
        for (const Integer& p : {Integer(2), Integer(3), Integer(5), Integer(7), Integer(11)}) {
            long expected = 0;
            if (auto it = fn.exponents.find(p); it != fn.exponents.end()) expected += it->second;
            if (auto it = fd.exponents.find(p); it != fd.exponents.end()) expected -= it->second;
            CHECK(valuation(q, p) == expected);
        }
    }
}

TEST_CASE("weil height examples") {
    CHECK(weil_height(Rational(1)) == 0.0);
    CHECK_THAT(weil_height(make_rational(Integer(2), Integer(3))),
               Catch::Matchers::WithinAbs(std::log(3.0), 1e-12));
    CHECK_THAT(weil_height(make_rational(Integer(-14), Integer(9))),
               Catch::Matchers::WithinAbs(std::log(14.0), 1e-12));
    CHECK_THROWS_AS(weil_height(Rational(0)), input_error);
}

TEST_CASE("weil height subadditivity on products") {
    std::mt19937_64 rng(20240003);
    std::uniform_int_distribution<long> dist(-2000, 2000);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        if (a == 0 || b == 0 || c == 0 || d == 0) continue;
        Rational q1 = make_rational(Integer(a), Integer(std::abs(b)));
        Rational q2 = make_rational(Integer(c), Integer(std::abs(d)));
        CHECK(weil_height(q1 * q2) <= weil_height(q1) + weil_height(q2) + 1e-9);
    }
}

TEST_CASE("exponent vector examples") {
    auto e1 = exponent_vector(Rational(4), {Integer(2)});
    CHECK(e1.exponents == std::vector<long>{2});
    CHECK(e1.sign == 1);

    auto e2 = exponent_vector(make_rational(Integer(-2), Integer(15)), {Integer(2), Integer(3), Integer(5)});
    CHECK(e2.exponents == std::vector<long>{1, -1, -1});
    CHECK(e2.sign == -1);

    auto e3 = exponent_vector(Rational(1), {Integer(2), Integer(3)});
    CHECK(e3.exponents == std::vector<long>{0, 0});
    CHECK(e3.sign == 1);

    CHECK_THROWS_WITH(exponent_vector(make_rational(Integer(10), Integer(21)), {Integer(2), Integer(5)}),
                      Catch::Matchers::ContainsSubstring("missing primes") &&
                          Catch::Matchers::ContainsSubstring("3") &&
                          Catch::Matchers::ContainsSubstring("7"));
}

TEST_CASE("rational text format") {
    CHECK(parse_rational("-14/9") == make_rational(Integer(-14), Integer(9)));
    CHECK(parse_rational("4/2") == Rational(2));  // canonicalized
    CHECK(to_string(make_rational(Integer(-14), Integer(9))) == "-14/9");
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
    CHECK_THROWS_AS(parse_rational("3/0"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("coprime integer base covers inputs exactly") {
    std::mt19937_64 rng(20240004);
    std::uniform_int_distribution<long> dist(2, 5000);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> values;
        for (int i = 0; i < 4; ++i)
            values.push_back(make_rational(Integer(dist(rng)), Integer(dist(rng))));
        IntegerExponentMatrix m = integer_exponent_matrix(values);
        for (std::size_t i = 0; i < m.base.size(); ++i) {
            CHECK(m.base[i] > 1);
            for (std::size_t j = i + 1; j < m.base.size(); ++j)
                CHECK(gcd(m.base[i], m.base[j]) == 1);
        }
        for (std::size_t j = 0; j < values.size(); ++j) {
            Rational rec(m.signs[j]);
            for (std::size_t i = 0; i < m.base.size(); ++i)
                rec *= pow_rational(Rational(m.base[i]), m.rows[i][j]);
            CHECK(rec == values[j]);
        }
    }
}
