#pragma once

#include <stdexcept>
#include <string>

#include "eulergen/exactmath.hpp"
#include "eulergen/report.hpp"
#include "eulergen/triangles.hpp"
#include "eulergen/twobase.hpp"

namespace eulergen::integrate {

using exactmath::Polynomial;
using exactmath::Rational;

/// Exact value rat + pi * π.  Addition and rational scaling are
/// componentwise; no product of two QPi values ever arises here, so π²
/// terms cannot appear.
struct QPi {
    Rational rat;
    Rational pi;

    QPi& operator+=(const QPi& o) {
        rat += o.rat;
        pi += o.pi;
        return *this;
    }
    friend QPi operator+(QPi a, const QPi& b) { return a += b; }
    friend QPi operator*(const Rational& c, const QPi& v) { return {c * v.rat, c * v.pi}; }
    QPi operator-() const { return {-rat, -pi}; }
    friend bool operator==(const QPi&, const QPi&) = default;

    bool is_zero() const { return rat.is_zero() && pi.is_zero(); }
    std::string str() const;
};

/// Raised when an exponent pair falls outside the exactly integrable cases.
class NotExactlyIntegrable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// ∫_0^1 u^alpha (1-u)^beta du, exact in Q + Qπ.  Supported: one exponent a
/// nonnegative integer with the other rational > -1 (rational value), or
/// both exponents in Z_{>=0} + 1/2 (rational multiple of π).  Anything else
/// throws NotExactlyIntegrable.
QPi beta_integral(const Rational& alpha, const Rational& beta);

/// Exact integral of a two-base expression over its parameter interval:
/// [0,1] directly for the complex form (which requires a=0, b=1), and [a,b]
/// for the real form via the affine substitution onto [0,1].  Linear in the
/// expression.
QPi integrate_expr(const twobase::TwoBaseExpr& expr);

/// integrate_expr of G_n (or H_n) built from the triangle.
QPi integrate_gn(const twobase::OdeSpec& ode, long n, const triangles::Triangle& triangle);

/// ∫_0^1 G_n = -B_{n+1} for the Eulerian parameters (r=1, a=0, b=1, w1=w2=1);
/// by the substitution u = u(z) this also certifies the equal-value improper
/// integral over the real line (with a sign flip from the decreasing
/// solution), so a passing report covers both printed forms.
CheckReport verify_c4(long n_max);

/// sum_k (-1)^{n-k+1} <n,k> / C(n+1,k+1) = (n+2) B_{n+1}.
CheckReport verify_e4(long n_max);

/// Conjectured second-order Eulerian identities, checked exactly per n:
/// ∫_0^1 sum_k <<n,k>> u^{k+1}(u-1)^{2n-k} du = B_{n+1}/(n+1) and the
/// companion sum_k (-1)^k <<n,k>> / C(2n+1,k+1) = 2 B_{n+1}.  The report is
/// flagged as conjecture evidence.
CheckReport verify_q4(long n_max);

/// y_m(t): the (m-1)st derivative of sech^2 x written as a polynomial in
/// t = tanh x.  Every y_m is divisible by 1 - t^2.
struct TanhPoly {
    Polynomial in_t;
};

/// y_1 = 1 - t^2;  y_{m+1} = (1 - t^2) dy_m/dt.
TanhPoly gv_poly(long m);

/// ∫_R (d^{m-1} sech^2 x / dx^{m-1})^2 dx = (-1)^{m-1} 2^{2m+1} B_{2m},
/// computed as ∫_{-1}^{1} y_m(t)^2/(1-t^2) dt by exact polynomial division
/// (a nonzero remainder is a hard error) and termwise integration.
CheckReport gv_verify(long m_max);

/// ∫_{-1}^{1} H_n dv = 0 for even n and (-1)^{(n-1)/2} π/2 for odd n, for
/// the real-form parameters (s=1, a=-1, b=1, w1=w2=1/2).
CheckReport verify_example2(long n_max);

/// ∫_0^1 G_n du for the (1/2, 1) parameters equals n! times the nth
/// coefficient of the closed-form series f_series.
CheckReport verify_example3(long n_max);

}  // namespace eulergen::integrate
