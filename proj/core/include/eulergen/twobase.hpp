#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eulergen/exactmath.hpp"
#include "eulergen/powerseries.hpp"
#include "eulergen/report.hpp"
#include "eulergen/triangles.hpp"

namespace eulergen::twobase {

using exactmath::Rational;

/// The autonomous equation u' = r (u - a)^{w1} (u - b)^{w2}, or in the real
/// form v' = r (v - a)^{w1} (b - v)^{w2} (the coefficient is then usually
/// written s).  Requires r != 0 and a != b.
struct OdeSpec {
    Rational r;
    Rational a;
    Rational b;
    Rational w1;
    Rational w2;
    bool real_form = false;

    void validate() const;

    friend bool operator==(const OdeSpec&, const OdeSpec&) = default;
};

/// coeff * (u-a)^p * (u-b)^q  (real form: coeff * (v-a)^p * (b-v)^q).
struct TwoBaseTerm {
    Rational coeff;
    Rational p;
    Rational q;

    friend bool operator==(const TwoBaseTerm&, const TwoBaseTerm&) = default;
};

/// Finite sum of two-base terms, normalized: terms sorted by (p, q), equal
/// exponent pairs merged, zero coefficients dropped.  Equality is structural.
class TwoBaseExpr {
public:
    explicit TwoBaseExpr(OdeSpec ode) : ode_(std::move(ode)) { ode_.validate(); }
    TwoBaseExpr(OdeSpec ode, std::vector<TwoBaseTerm> terms);

    const OdeSpec& ode() const { return ode_; }
    const std::vector<TwoBaseTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    TwoBaseExpr scaled(const Rational& c) const;

    /// Rendering like "3/2*(u-a)^2*(u-b)^1/2 + ...", for reports and errors.
    std::string str() const;

    friend TwoBaseExpr operator+(const TwoBaseExpr& x, const TwoBaseExpr& y);
    friend bool operator==(const TwoBaseExpr&, const TwoBaseExpr&) = default;

private:
    OdeSpec ode_;
    std::vector<TwoBaseTerm> terms_;
};

/// Raised when a point evaluation hits a base/exponent pair with no exact
/// rational value.
class NonRationalPower : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The sum G_n(u) = sum_k G(n,k) (u-a)^{n w1 - n + k + 1} (u-b)^{n w2 - k};
/// the real form carries (-1)^k signs and second base (b - v).  The triangle
/// must have been built with the ode's (w1, w2) and at least n rows.
TwoBaseExpr g_expr(const OdeSpec& ode, long n, const triangles::Triangle& triangle);

/// The right-hand side of the equation itself: the single term
/// r * (u-a)^{w1} * (u-b)^{w2}, seed of the derivative iteration.
TwoBaseExpr first_derivative_expr(const OdeSpec& ode);

/// One application of d/dz under the substitution u' = r (u-a)^{w1}(u-b)^{w2}:
///   c (u-a)^p (u-b)^q  ->  r c p (u-a)^{p-1+w1}(u-b)^{q+w2}
///                        + r c q (u-a)^{p+w1}(u-b)^{q-1+w2};
/// the real form differentiates (b-v)^q to -q (b-v)^{q-1}, giving the second
/// summand a minus sign.  The r factor accumulates in the coefficients.
TwoBaseExpr derive_once(const TwoBaseExpr& expr);

/// Exact value at u0; every base must have an exact rational power for its
/// exponent, otherwise NonRationalPower is thrown naming the term.
Rational eval_expr(const TwoBaseExpr& expr, const Rational& u0);

/// Checks, for n = 1..n_max, that the (n-1)-fold derivative of the equation's
/// right-hand side equals r^n * G_n term for term.
CheckReport verify_theorem1(const OdeSpec& ode, long n_max);

/// Checks n! * coeff_n(series) = eval of r^n * G_n (or H_n) at u0 for
/// 1 <= n < order.  The series must be the solution's expansion at the point
/// where it takes the value u0.
CheckReport taylor_compare(const OdeSpec& ode, const powerseries::Series& series,
                           const Rational& u0, std::size_t order);

}  // namespace eulergen::twobase
