#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "eulergen/exactmath.hpp"
#include "support.hpp"

using namespace eulergen::exactmath;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == Int(-1));
    CHECK(Rational(3, -6).den() == Int(2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == Int(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    // re-normalizing a canonical value is the identity
    Rational r(-22, 8);
    CHECK(Rational(r.num(), r.den()) == r);
    CHECK(r.str() == "-11/4");
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("22/8") == Rational(11, 4));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+5/10") == Rational(1, 2));
    for (const char* bad : {"1/0", "x", "1/", "/2", "1.5", "", "1/2/3", "1 2", "--1"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    testsupport::RationalGen gen(42);
    for (int i = 0; i < 300; ++i) {
        Rational a = gen.next(), b = gen.next(), c = gen.next();
        CHECK(a + (-a) == Rational(0));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("rational powers and ordering") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(2, 1) == Rational(2));
    CHECK(binomial(5, -1) == Rational(0));
    CHECK(binomial(5, 7) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(binomial(61, 30) == binomial(61, 31));
}

TEST_CASE("bernoulli oracle values") {
    auto b = bernoulli_oracle(4);
    REQUIRE(b.size() == 5);
    CHECK(b[0] == Rational(1));
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == Rational(0));
    CHECK(b[4] == Rational(-1, 30));
}

TEST_CASE("bernoulli oracle: odd entries vanish, even entries alternate") {
    auto b = bernoulli_oracle(60);
    for (std::size_t m = 1; 2 * m + 1 <= 60; ++m) CHECK(b[2 * m + 1] == Rational(0));
    for (std::size_t m = 1; 2 * m <= 60; ++m)
        CHECK(b[2 * m].sign() == (m % 2 == 1 ? 1 : -1));
}

TEST_CASE("product expand") {
    using Factor = std::pair<Rational, Rational>;
    std::vector<Factor> empty;
    CHECK(product_expand(empty) == Polynomial::constant(Rational(1)));

    // factors of the degree-2 row-sum polynomial: 1, x, 2x - 1
    std::vector<Factor> p2 = {{Rational(0), Rational(1)},
                              {Rational(1), Rational(0)},
                              {Rational(2), Rational(-1)}};
    CHECK(product_expand(p2) == Polynomial({Rational(0), Rational(-1), Rational(2)}));

    // x and 2x + 1
    std::vector<Factor> m3 = {{Rational(1), Rational(0)}, {Rational(2), Rational(1)}};
    CHECK(product_expand(m3) == Polynomial({Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("product expand splits multiplicatively") {
    using Factor = std::pair<Rational, Rational>;
    testsupport::RationalGen gen(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Factor> f1, f2;
        for (int i = 0; i < 3; ++i) f1.emplace_back(gen.next(5, 5), gen.next(5, 5));
        for (int i = 0; i < 4; ++i) f2.emplace_back(gen.next(5, 5), gen.next(5, 5));
        std::vector<Factor> joined = f1;
        joined.insert(joined.end(), f2.begin(), f2.end());
        CHECK(product_expand(joined) == product_expand(f1) * product_expand(f2));
    }
}

TEST_CASE("polynomial arithmetic and division") {
    Polynomial x = Polynomial::variable();
    Polynomial p = x * x - Polynomial::constant(Rational(1));
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(p.derivative() == Rational(2) * x);
    CHECK((p - p).is_zero());
    CHECK(Polynomial().degree() == -1);

    auto [q, r] = poly_divmod(p, x - Polynomial::constant(Rational(1)));
    CHECK(q == x + Polynomial::constant(Rational(1)));
    CHECK(r.is_zero());

    testsupport::RationalGen gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> nc(6), dc(3);
        for (auto& c : nc) c = gen.next(6, 4);
        for (auto& c : dc) c = gen.next(6, 4);
        Polynomial num(nc), den(dc);
        if (den.is_zero()) continue;
        auto [quot, rem] = poly_divmod(num, den);
        CHECK(quot * den + rem == num);
        CHECK(rem.degree() < den.degree());
    }
}

TEST_CASE("exact rational powers") {
    auto check_value = [](std::optional<Rational> got, const Rational& want) {
        REQUIRE(got.has_value());
        CHECK(*got == want);
    };
    check_value(exact_pow(Rational(1, 4), Rational(1, 2)), Rational(1, 2));
    check_value(exact_pow(Rational(4, 9), Rational(3, 2)), Rational(8, 27));
    check_value(exact_pow(Rational(1, 4), Rational(-1, 2)), Rational(2));
    check_value(exact_pow(Rational(-2), Rational(3)), Rational(-8));
    check_value(exact_pow(Rational(0), Rational(0)), Rational(1));
    check_value(exact_pow(Rational(0), Rational(1, 2)), Rational(0));
    check_value(exact_pow(Rational(8, 27), Rational(2, 3)), Rational(4, 9));

    CHECK_FALSE(exact_pow(Rational(2), Rational(1, 2)).has_value());
    CHECK_FALSE(exact_pow(Rational(1, 3), Rational(1, 2)).has_value());
    CHECK_FALSE(exact_pow(Rational(-8), Rational(1, 3)).has_value());  // negative base, fractional exponent
    CHECK_FALSE(exact_pow(Rational(0), Rational(-1)).has_value());
    CHECK_FALSE(exact_pow(Rational(0), Rational(-1, 2)).has_value());
}
