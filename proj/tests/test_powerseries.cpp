#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "eulergen/powerseries.hpp"
#include "support.hpp"

using namespace eulergen::powerseries;
using eulergen::exactmath::Rational;
using eulergen::exactmath::bernoulli_oracle;

namespace {

Series random_series(testsupport::RationalGen& gen, std::size_t order, bool zero_constant) {
    std::vector<Rational> c(order);
    for (std::size_t j = zero_constant ? 1 : 0; j < order; ++j) c[j] = gen.next(6, 6);
    return Series(std::move(c));
}

Series from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return Series(std::move(c));
}

}  // namespace

TEST_CASE("addition and multiplication basics") {
    Series one_plus = from_strings({"1", "1", "0", "0"});
    Series one_minus = from_strings({"1", "-1", "0", "0"});
    CHECK(mul(one_plus, one_minus) == from_strings({"1", "0", "-1", "0"}));

    Series e = exp_w(4);
    CHECK(mul(e, e) == from_strings({"1", "2", "2", "4/3"}));

    testsupport::RationalGen gen(5);
    Series a = random_series(gen, 6, false);
    CHECK(add(a, Series::zero(6)) == a);
}

TEST_CASE("orders shrink to the smaller operand") {
    Series a = Series::constant(Rational(1), 8);
    Series b = Series::constant(Rational(1), 5);
    CHECK(add(a, b).order() == 5);
    CHECK(mul(a, b).order() == 5);
}

TEST_CASE("division") {
    Series num = from_strings({"0", "1", "1", "0"});  // w + w^2
    CHECK(div(num, Series::identity(4)) == from_strings({"1", "1", "0"}));

    const std::size_t m = 8;
    Series bern = div(Series::identity(m), sub(exp_w(m), Series::constant(Rational(1), m)));
    CHECK(bern == from_strings({"1", "-1/2", "1/12", "0", "-1/720", "0", "1/30240"}));

    Series geom = div(Series::constant(Rational(1), 5),
                      from_strings({"1", "-1", "0", "0", "0"}));
    CHECK(geom == from_strings({"1", "1", "1", "1", "1"}));

    CHECK_THROWS_AS(div(Series::constant(Rational(1), 4), Series::identity(4)),
                    std::domain_error);  // non-removable pole
    CHECK_THROWS_AS(div(Series::identity(4), Series::zero(4)), std::domain_error);
}

TEST_CASE("exp and log1p") {
    CHECK(exp(Series::zero(5)) == Series::constant(Rational(1), 5));
    CHECK_THROWS_AS(exp(Series::constant(Rational(1), 4)), std::domain_error);
    CHECK_THROWS_AS(log1p(Series::constant(Rational(1), 4)), std::domain_error);

    Series em1 = sub(exp_w(10), Series::constant(Rational(1), 10));
    CHECK(log1p(em1) == Series::identity(10));

    // log(2/(e^w+1)) = -log1p((e^w-1)/2)
    Series logh = negate(log1p(scale(Rational(1, 2), sub(exp_w(5), Series::constant(Rational(1), 5)))));
    CHECK(logh == from_strings({"0", "-1/2", "-1/8", "0", "1/192"}));
}

TEST_CASE("exp is a homomorphism on random inputs") {
    testsupport::RationalGen gen(77);
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(gen, 12, true);
        Series b = random_series(gen, 12, true);
        CHECK(exp(add(a, b)) == mul(exp(a), exp(b)));
        CHECK(log1p(sub(exp(a), Series::constant(Rational(1), 12))) == a);
    }
}

TEST_CASE("ring laws at order 16") {
    testsupport::RationalGen gen(99);
    for (int trial = 0; trial < 8; ++trial) {
        Series a = random_series(gen, 16, false);
        Series b = random_series(gen, 16, false);
        Series c = random_series(gen, 16, false);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
    }
}

TEST_CASE("composition and reversion") {
    CHECK(revert(Series::identity(8)) == Series::identity(8));

    Series a = from_strings({"0", "1", "1", "0", "0", "0", "0", "0"});  // w + w^2
    CHECK(compose(a, revert(a)) == Series::identity(8));
    CHECK(compose(revert(a), a) == Series::identity(8));

    CHECK_THROWS_AS(revert(Series::constant(Rational(1), 4)), std::domain_error);
    CHECK_THROWS_AS(revert(from_strings({"0", "0", "1", "0"})), std::domain_error);
    CHECK_THROWS_AS(compose(a, Series::constant(Rational(1), 8)), std::domain_error);

    testsupport::RationalGen gen(31);
    for (int trial = 0; trial < 6; ++trial) {
        Series s = random_series(gen, 16, true);
        if (s.coeff(1).is_zero()) continue;
        CHECK(compose(s, revert(s)) == Series::identity(16));
        CHECK(compose(revert(s), s) == Series::identity(16));
    }
}

TEST_CASE("reversion of the second-order inverse series") {
    Series z = testsupport::second_order_inverse_series(10);
    CHECK(z.coeff(0) == Rational(0));
    CHECK(z.coeff(1) == Rational(8));
    CHECK(revert(z).coeff(1) == Rational(1, 8));
}

TEST_CASE("bernoulli numbers from the series agree with the recurrence") {
    auto from_series = bernoulli_from_series(60);
    auto oracle = bernoulli_oracle(60);
    REQUIRE(from_series.size() == oracle.size());
    for (std::size_t n = 0; n < oracle.size(); ++n) CHECK(from_series[n] == oracle[n]);
    CHECK(from_series[2] == Rational(1, 6));
    CHECK(from_series[5] == Rational(0));
    CHECK(from_series[8] == Rational(-1, 30));
}

TEST_CASE("closed-form f series coefficients") {
    Series f = f_series(10);
    const std::vector<std::string> fn = {"1/2",  "-4/15", "0",    "4/21", "1/8",
                                         "-4/15", "-1/2", "20/33", "21/8", "-2764/1365"};
    Rational fact(1);
    for (std::size_t n = 0; n < fn.size(); ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        CHECK(fact * f.coeff(n) == Rational::parse(fn[n]));
    }
}

TEST_CASE("solution series at the expansion point") {
    CHECK(logistic_series(4) == from_strings({"1/2", "-1/4", "0", "1/48"}));

    Series m = mobius_square_series(Rational(3), 3);
    CHECK(m.coeff(0) == Rational(1, 4));
    CHECK(m.coeff(1) == Rational(-3, 8));
    CHECK_THROWS_AS(mobius_square_series(Rational(-1), 4), std::invalid_argument);

    CHECK(sine_series(6) == from_strings({"0", "1", "0", "-1/6", "0", "1/120"}));
}
