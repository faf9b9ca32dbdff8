#pragma once

#include <cstddef>
#include <vector>

#include "eulergen/exactmath.hpp"

namespace eulergen::powerseries {

using exactmath::Rational;

/// Truncated formal power series over Rational: coeffs()[j] is the
/// coefficient of w^j, valid exactly for j < order().  Arithmetic results
/// carry the minimum order of the operands; division additionally loses the
/// cancelled valuation of the denominator.
class Series {
public:
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(std::size_t order);
    static Series constant(const Rational& c, std::size_t order);
    static Series identity(std::size_t order);  // the series w

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t j) const;

    /// Index of the first nonzero coefficient; order() when none is stored.
    std::size_t valuation() const;

    Series truncated(std::size_t order) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Rational& c, const Series& a);
Series mul(const Series& a, const Series& b);

/// Exact quotient; a removable singularity (valuation(num) >= valuation(den))
/// is cancelled, shortening the order by valuation(den).  Throws on a
/// denominator that is zero within truncation or a non-removable pole.
Series div(const Series& num, const Series& den);

/// exp(a) for a with zero constant term.
Series exp(const Series& a);

/// log(1 + a) for a with zero constant term.
Series log1p(const Series& a);

/// outer(inner) for inner with zero constant term.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse: compose(a, revert(a)) = w.  Needs a[0] = 0, a[1] != 0.
Series revert(const Series& a);

Series derivative(const Series& a);

/// Termwise antiderivative with zero constant term; order grows by one.
Series antiderivative(const Series& a);

Series exp_w(std::size_t order);

/// B_0..B_nMax read off w/(e^w - 1); independent of the recurrence oracle.
std::vector<Rational> bernoulli_from_series(std::size_t n_max);

/// Taylor series of the closed form
///   [16 (e^{2w} + 4 e^w + 1) e^w log(2/(e^w+1))
///      + (e^w - 1)(e^{3w} + 33 e^{2w} + 15 e^w - 1)] / (e^w - 1)^4,
/// the integrated shifted-solution generating function of the (1/2, 1)
/// parameter family.  The numerator must vanish to fourth order (checked),
/// so the quotient is regular at w = 0.
Series f_series(std::size_t order);

/// Solution series 1/(1 + e^w): the logistic-type solution expanded where it
/// takes the value 1/2.
Series logistic_series(std::size_t order);

/// ((c - e^w)/(c + e^w))^2 for rational c != -1.
Series mobius_square_series(const Rational& c, std::size_t order);

Series sine_series(std::size_t order);

}  // namespace eulergen::powerseries
