#include "eulergen/integrate.hpp"

#include <utility>
#include <vector>

#include "eulergen/powerseries.hpp"

namespace eulergen::integrate {

using exactmath::Int;
using twobase::OdeSpec;
using twobase::TwoBaseExpr;

std::string QPi::str() const {
    if (pi.is_zero()) return rat.str();
    std::string pi_part = (pi == Rational(1) ? std::string("pi") : pi.str() + "*pi");
    if (rat.is_zero()) return pi_part;
    return rat.str() + " + " + pi_part;
}

namespace {

bool is_nonneg_int(const Rational& x) { return x.is_integer() && x.sign() >= 0; }

bool is_half_odd_nonneg(const Rational& x) {
    // in Z_{>=0} + 1/2, i.e. x = i + 1/2 with integer i >= 0
    return x.den() == 2 && x.sign() > 0;
}

// beta! / prod_{j=1}^{beta+1} (alpha + j) for nonnegative integer beta.
Rational one_integer_case(const Rational& alpha, long beta) {
    Rational value(exactmath::factorial(static_cast<unsigned long>(beta)));
    for (long j = 1; j <= beta + 1; ++j) value /= alpha + Rational(j);
    return value;
}

// Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi); this returns the rational part.
Rational gamma_half(long m) {
    Rational num(exactmath::factorial(static_cast<unsigned long>(2 * m)));
    Rational den = Rational(4).pow(m) * Rational(exactmath::factorial(static_cast<unsigned long>(m)));
    return num / den;
}

}  // namespace

QPi beta_integral(const Rational& alpha, const Rational& beta) {
    if (is_nonneg_int(beta)) {
        if (!(alpha > Rational(-1)))
            throw NotExactlyIntegrable("beta integral diverges: alpha = " + alpha.str() +
                                       " <= -1");
        return {one_integer_case(alpha, beta.to_long()), Rational(0)};
    }
    if (is_nonneg_int(alpha)) {
        if (!(beta > Rational(-1)))
            throw NotExactlyIntegrable("beta integral diverges: beta = " + beta.str() +
                                       " <= -1");
        return {one_integer_case(beta, alpha.to_long()), Rational(0)};
    }
    if (is_half_odd_nonneg(alpha) && is_half_odd_nonneg(beta)) {
        // B(alpha+1, beta+1) with alpha = i + 1/2, beta = j + 1/2:
        // Gamma(i+3/2) Gamma(j+3/2) / (i+j+2)!  ->  rational * pi
        long m1 = (alpha + Rational(1, 2)).to_long();  // i + 1
        long m2 = (beta + Rational(1, 2)).to_long();
        Rational coeff = gamma_half(m1) * gamma_half(m2) /
                         Rational(exactmath::factorial(static_cast<unsigned long>(m1 + m2)));
        return {Rational(0), coeff};
    }
    throw NotExactlyIntegrable("unsupported beta-integral exponents alpha = " + alpha.str() +
                               ", beta = " + beta.str());
}

QPi integrate_expr(const TwoBaseExpr& expr) {
    const OdeSpec& ode = expr.ode();
    QPi acc{Rational(0), Rational(0)};
    if (!ode.real_form) {
        if (!(ode.a == Rational(0)) || !(ode.b == Rational(1)))
            throw NotExactlyIntegrable(
                "complex-form integration is supported over [0,1] only (a=0, b=1)");
        for (const auto& t : expr.terms()) {
            // (u-1)^q = (-1)^q (1-u)^q needs an integer q
            if (!t.q.is_integer())
                throw NotExactlyIntegrable("non-integer (u-1) exponent " + t.q.str() +
                                           " in term " + t.coeff.str() + "*(u-a)^" +
                                           t.p.str() + "*(u-b)^" + t.q.str());
            Rational sign = t.q.to_long() % 2 == 0 ? Rational(1) : Rational(-1);
            acc += (t.coeff * sign) * beta_integral(t.p, t.q);
        }
        return acc;
    }
    // Real form over [a,b]: v = a + (b-a) t maps onto [0,1] and contributes
    // a factor (b-a)^{p+q+1} per term.
    const Rational width = ode.b - ode.a;
    for (const auto& t : expr.terms()) {
        auto factor = exactmath::exact_pow(width, t.p + t.q + Rational(1));
        if (!factor)
            throw NotExactlyIntegrable("interval width " + width.str() +
                                       " has no exact rational power " +
                                       (t.p + t.q + Rational(1)).str());
        acc += (t.coeff * *factor) * beta_integral(t.p, t.q);
    }
    return acc;
}

QPi integrate_gn(const OdeSpec& ode, long n, const triangles::Triangle& triangle) {
    return integrate_expr(twobase::g_expr(ode, n, triangle));
}

CheckReport verify_c4(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_c4 needs n_max >= 1");
    const OdeSpec ode{Rational(1), Rational(0), Rational(1), Rational(1), Rational(1), false};
    triangles::Triangle triangle({ode.w1, ode.w2}, n_max);
    const auto bern = exactmath::bernoulli_oracle(static_cast<std::size_t>(n_max) + 1);

    CheckReport report;
    report.identity = "c4";
    report.params = "w1=1 w2=1";
    for (long n = 1; n <= n_max; ++n) {
        QPi expected{-bern[static_cast<std::size_t>(n) + 1], Rational(0)};
        QPi computed = integrate_gn(ode, n, triangle);
        report.items.push_back({n, expected.str(), computed.str(), computed == expected});
    }
    return report;
}

CheckReport verify_e4(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_e4 needs n_max >= 1");
    triangles::Triangle triangle({Rational(1), Rational(1)}, n_max);
    const auto bern = exactmath::bernoulli_oracle(static_cast<std::size_t>(n_max) + 1);

    CheckReport report;
    report.identity = "e4";
    report.params = "w1=1 w2=1";
    for (long n = 1; n <= n_max; ++n) {
        Rational sum(0);
        auto row = triangle.row(n);
        for (long k = 0; k < n; ++k) {
            Rational term = row[static_cast<std::size_t>(k)] /
                            exactmath::binomial(static_cast<unsigned long>(n + 1), k + 1);
            sum += (n - k + 1) % 2 == 0 ? term : -term;
        }
        Rational expected = Rational(n + 2) * bern[static_cast<std::size_t>(n) + 1];
        report.items.push_back({n, expected.str(), sum.str(), sum == expected});
    }
    return report;
}

CheckReport verify_q4(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_q4 needs n_max >= 1");
    const OdeSpec ode{Rational(1), Rational(0), Rational(1), Rational(1), Rational(2), false};
    triangles::Triangle triangle({ode.w1, ode.w2}, n_max);
    const auto bern = exactmath::bernoulli_oracle(static_cast<std::size_t>(n_max) + 1);

    CheckReport report;
    report.identity = "q4";
    report.params = "w1=1 w2=2";
    report.conjecture = true;
    for (long n = 1; n <= n_max; ++n) {
        const Rational& b = bern[static_cast<std::size_t>(n) + 1];

        QPi expected_integral{b / Rational(n + 1), Rational(0)};
        QPi integral = integrate_gn(ode, n, triangle);
        report.items.push_back(
            {n, expected_integral.str(), integral.str(), integral == expected_integral});

        Rational sum(0);
        auto row = triangle.row(n);
        for (long k = 0; k < n; ++k) {
            Rational term = row[static_cast<std::size_t>(k)] /
                            exactmath::binomial(static_cast<unsigned long>(2 * n + 1), k + 1);
            sum += k % 2 == 0 ? term : -term;
        }
        Rational expected_sum = Rational(2) * b;
        report.items.push_back({n, expected_sum.str(), sum.str(), sum == expected_sum});
    }
    return report;
}

TanhPoly gv_poly(long m) {
    if (m < 1) throw std::invalid_argument("gv_poly needs m >= 1");
    const Polynomial sech2({Rational(1), Rational(0), Rational(-1)});  // 1 - t^2
    Polynomial y = sech2;
    for (long i = 1; i < m; ++i) y = sech2 * y.derivative();
    return {std::move(y)};
}

namespace {

// ∫_{-1}^{1} p(t) dt: odd powers cancel, even powers give 2 c_j / (j+1).
Rational integrate_symmetric_unit(const Polynomial& p) {
    Rational acc(0);
    for (std::size_t j = 0; j < p.coeffs().size(); j += 2)
        acc += Rational(2) * p.coeffs()[j] / Rational(static_cast<long>(j) + 1);
    return acc;
}

}  // namespace

CheckReport gv_verify(long m_max) {
    if (m_max < 1) throw std::invalid_argument("gv_verify needs m_max >= 1");
    const auto bern = exactmath::bernoulli_oracle(static_cast<std::size_t>(2 * m_max));
    const Polynomial sech2({Rational(1), Rational(0), Rational(-1)});

    CheckReport report;
    report.identity = "gv";
    for (long m = 1; m <= m_max; ++m) {
        const TanhPoly y = gv_poly(m);
        auto [quot, rem] = exactmath::poly_divmod(y.in_t * y.in_t, sech2);
        if (!rem.is_zero())
            throw std::logic_error("squared tanh polynomial not divisible by 1 - t^2");
        Rational integral = integrate_symmetric_unit(quot);
        Rational expected = Rational(2).pow(2 * m + 1) * bern[static_cast<std::size_t>(2 * m)];
        if (m % 2 == 0) expected = -expected;
        report.items.push_back({m, expected.str(), integral.str(), integral == expected});
    }
    return report;
}

CheckReport verify_example2(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_example2 needs n_max >= 1");
    const OdeSpec ode{Rational(1), Rational(-1), Rational(1),
                      Rational(1, 2), Rational(1, 2), true};
    triangles::Triangle triangle({ode.w1, ode.w2}, n_max);

    CheckReport report;
    report.identity = "example2";
    report.params = "real form, w1=1/2 w2=1/2, interval [-1,1]";
    for (long n = 1; n <= n_max; ++n) {
        QPi expected{Rational(0), Rational(0)};
        if (n % 2 == 1) {
            expected.pi = Rational(1, 2);
            if (((n - 1) / 2) % 2 == 1) expected.pi = -expected.pi;
        }
        QPi computed = integrate_gn(ode, n, triangle);
        report.items.push_back({n, expected.str(), computed.str(), computed == expected});
    }
    return report;
}

CheckReport verify_example3(long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_example3 needs n_max >= 1");
    const OdeSpec ode{Rational(1), Rational(0), Rational(1), Rational(1, 2), Rational(1), false};
    triangles::Triangle triangle({ode.w1, ode.w2}, n_max);
    const auto series = powerseries::f_series(static_cast<std::size_t>(n_max) + 1);

    CheckReport report;
    report.identity = "example3";
    report.params = "w1=1/2 w2=1";
    Rational fact(1);
    for (long n = 1; n <= n_max; ++n) {
        fact *= Rational(n);
        QPi expected{fact * series.coeff(static_cast<std::size_t>(n)), Rational(0)};
        QPi computed = integrate_gn(ode, n, triangle);
        report.items.push_back({n, expected.str(), computed.str(), computed == expected});
    }
    return report;
}

}  // namespace eulergen::integrate
