#include "eulergen/powerseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulergen::powerseries {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs order >= 1");
}

Series Series::zero(std::size_t order) {
    return Series(std::vector<Rational>(order));
}

Series Series::constant(const Rational& c, std::size_t order) {
    std::vector<Rational> v(order);
    v.at(0) = c;
    return Series(std::move(v));
}

Series Series::identity(std::size_t order) {
    std::vector<Rational> v(order);
    v.at(1) = Rational(1);
    return Series(std::move(v));
}

const Rational& Series::coeff(std::size_t j) const {
    if (j >= coeffs_.size())
        throw std::out_of_range("series coefficient " + std::to_string(j) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[j];
}

std::size_t Series::valuation() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return j;
    return coeffs_.size();
}

Series Series::truncated(std::size_t order) const {
    if (order > coeffs_.size())
        throw std::invalid_argument("cannot extend a truncated series");
    return Series(std::vector<Rational>(coeffs_.begin(),
                                        coeffs_.begin() + static_cast<long>(order)));
}

Series add(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = a.coeffs()[j] + b.coeffs()[j];
    return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series negate(const Series& a) {
    std::vector<Rational> c(a.order());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = -a.coeffs()[j];
    return Series(std::move(c));
}

Series scale(const Rational& s, const Series& a) {
    std::vector<Rational> c(a.order());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = s * a.coeffs()[j];
    return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return Series(std::move(c));
}

Series div(const Series& num, const Series& den) {
    const std::size_t v = den.valuation();
    if (v == den.order())
        throw std::domain_error("division by a series that is zero within truncation");
    if (num.valuation() < v)
        throw std::domain_error("series division with a non-removable pole");
    const std::size_t n = std::min(num.order(), den.order()) - v;
    if (n == 0) throw std::domain_error("series division leaves no valid coefficients");
    std::vector<Rational> q(n);
    const auto& nc = num.coeffs();
    const auto& dc = den.coeffs();
    const Rational& lead = dc[v];
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = j + v < nc.size() ? nc[j + v] : Rational(0);
        for (std::size_t i = 1; i <= j; ++i) acc -= dc[v + i] * q[j - i];
        q[j] = acc / lead;
    }
    return Series(std::move(q));
}

Series exp(const Series& a) {
    if (!a.coeffs()[0].is_zero())
        throw std::domain_error("series exp needs a zero constant term");
    std::vector<Rational> b(a.order());
    b[0] = Rational(1);
    for (std::size_t n = 1; n < b.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rational(static_cast<long>(k)) * a.coeffs()[k] * b[n - k];
        b[n] = acc / Rational(static_cast<long>(n));
    }
    return Series(std::move(b));
}

Series log1p(const Series& a) {
    if (!a.coeffs()[0].is_zero())
        throw std::domain_error("series log1p needs a zero constant term");
    if (a.order() == 1) return Series::zero(1);
    Series one_plus = add(Series::constant(Rational(1), a.order()), a);
    return antiderivative(div(derivative(a), one_plus.truncated(a.order() - 1)));
}

Series compose(const Series& outer, const Series& inner) {
    if (!inner.coeffs()[0].is_zero())
        throw std::domain_error("series composition needs inner constant term zero");
    const std::size_t n = std::min(outer.order(), inner.order());
    Series inner_t = inner.truncated(n);
    Series acc = Series::constant(outer.coeffs()[n - 1], n);
    for (std::size_t i = n - 1; i-- > 0;)
        acc = add(mul(acc, inner_t), Series::constant(outer.coeffs()[i], n));
    return acc;
}

Series revert(const Series& a) {
    if (!a.coeffs()[0].is_zero())
        throw std::domain_error("series reversion needs a zero constant term");
    if (a.order() < 2 || a.coeffs()[1].is_zero())
        throw std::domain_error("series reversion needs a nonzero linear term");
    const std::size_t n = a.order();
    const Rational& lead = a.coeffs()[1];
    std::vector<Rational> b(n);
    b[1] = lead.inverse();
    for (std::size_t m = 2; m < n; ++m) {
        // With b known below m, [w^m] a(b) = (residual) + a[1]*b[m]; solve for b[m].
        Series partial = compose(a.truncated(m + 1), Series(std::vector<Rational>(
                                                         b.begin(), b.begin() + static_cast<long>(m) + 1)));
        b[m] = -partial.coeffs()[m] / lead;
    }
    return Series(std::move(b));
}

Series derivative(const Series& a) {
    if (a.order() < 2) return Series::zero(1);
    std::vector<Rational> d(a.order() - 1);
    for (std::size_t j = 1; j < a.order(); ++j)
        d[j - 1] = Rational(static_cast<long>(j)) * a.coeffs()[j];
    return Series(std::move(d));
}

Series antiderivative(const Series& a) {
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t j = 0; j < a.order(); ++j)
        c[j + 1] = a.coeffs()[j] / Rational(static_cast<long>(j + 1));
    return Series(std::move(c));
}

Series exp_w(std::size_t order) {
    std::vector<Rational> c(order);
    Rational f(1);
    for (std::size_t j = 0; j < order; ++j) {
        if (j > 0) f /= Rational(static_cast<long>(j));
        c[j] = f;
    }
    return Series(std::move(c));
}

std::vector<Rational> bernoulli_from_series(std::size_t n_max) {
    const std::size_t m = n_max + 2;
    Series q = div(Series::identity(m),
                   sub(exp_w(m), Series::constant(Rational(1), m)));
    std::vector<Rational> b(n_max + 1);
    Rational fact(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        b[n] = fact * q.coeff(n);
    }
    return b;
}

Series f_series(std::size_t order) {
    if (order < 1) throw std::invalid_argument("f_series needs order >= 1");
    const std::size_t m = order + 4;
    const Series one = Series::constant(Rational(1), m);
    const Series e1 = exp_w(m);
    const Series e2 = mul(e1, e1);
    const Series e3 = mul(e2, e1);
    const Series em1 = sub(e1, one);

    Series log_term = negate(log1p(scale(Rational(1, 2), em1)));
    Series numerator = add(
        mul(scale(Rational(16), add(add(e2, scale(Rational(4), e1)), one)),
            mul(e1, log_term)),
        mul(em1, sub(add(e3, add(scale(Rational(33), e2), scale(Rational(15), e1))), one)));
    if (numerator.valuation() < 4)
        throw std::logic_error("f_series numerator fails to vanish to fourth order");

    Series den = mul(mul(em1, em1), mul(em1, em1));
    return div(numerator, den);
}

Series logistic_series(std::size_t order) {
    return div(Series::constant(Rational(1), order),
               add(Series::constant(Rational(1), order), exp_w(order)));
}

Series mobius_square_series(const Rational& c, std::size_t order) {
    if (c == Rational(-1))
        throw std::invalid_argument("mobius square series undefined for c = -1");
    const Series cc = Series::constant(c, order);
    const Series e = exp_w(order);
    Series q = div(sub(cc, e), add(cc, e));
    return mul(q, q);
}

Series sine_series(std::size_t order) {
    std::vector<Rational> c(order);
    Rational f(1);
    int sign = 1;
    for (std::size_t j = 0; j < order; ++j) {
        if (j > 0) f /= Rational(static_cast<long>(j));
        if (j % 2 == 1) {
            c[j] = sign > 0 ? f : -f;
            sign = -sign;
        }
    }
    return Series(std::move(c));
}

}  // namespace eulergen::powerseries
