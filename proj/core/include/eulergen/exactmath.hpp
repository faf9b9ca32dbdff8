#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eulergen::exactmath {

using Int = mpz_class;

/// Exact rational number kept in canonical form: denominator positive and
/// coprime to the numerator, zero represented as 0/1.  Equality and ordering
/// are therefore structural, which makes rationals usable as map keys
/// (the two-base expressions key their terms by exact exponent pairs).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : value_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "p" or "p/q" with optional leading sign.  Throws
    /// std::invalid_argument on anything else, including a zero denominator.
    static Rational parse(std::string_view text);

    Int num() const { return value_.get_num(); }
    Int den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Numerator as a machine integer; throws std::overflow_error when it
    /// does not fit.  Only meaningful for is_integer() values (exponents).
    long to_long() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Int factorial(unsigned long n);

/// C(n, k); zero outside 0 <= k <= n.
Rational binomial(unsigned long n, long k);

/// B_0..B_nMax from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
/// Uses the B_1 = -1/2 convention (the one the generating function
/// w/(e^w - 1) produces); entries for n >= 2 are convention-independent.
std::vector<Rational> bernoulli_oracle(std::size_t n_max);

/// base^exponent when the value is an exact rational, std::nullopt otherwise.
/// An exponent j/d requires the base to be an exact d-th power of a rational;
/// negative bases with fractional exponents and negative powers of zero are
/// not representable.
std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent);

/// Dense univariate polynomial over Rational; coefficient i belongs to x^i,
/// trailing zeros trimmed, the zero polynomial stores no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial variable();

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact polynomial division (divisor nonzero).
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den);

/// Expands prod_i (slope_i * x + intercept_i); the empty product is 1.
Polynomial product_expand(std::span<const std::pair<Rational, Rational>> factors);

}  // namespace eulergen::exactmath
