#include "eulergen/exactmath.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace eulergen::exactmath {

namespace {

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // mpz rejects '+'
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) bad_rational(text);
    if (num_end == text.size())
        return Rational(Int(std::string(text)), Int(1));
    if (text[num_end] != '/') bad_rational(text);
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) bad_rational(text);
    Int num(std::string(text.substr(0, num_end)));
    Int den(std::string(text.substr(num_end + 1)));
    if (den == 0) bad_rational(text);
    return Rational(num, den);
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("to_long on non-integer rational " + str());
    mpz_class n = value_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("rational exceeds long range: " + str());
    return n.get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(pn, pd);
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(b);
}

std::vector<Rational> bernoulli_oracle(std::size_t n_max) {
    std::vector<Rational> b;
    b.reserve(n_max + 1);
    b.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k < n; ++k)
            acc += binomial(static_cast<unsigned long>(n + 1), static_cast<long>(k)) * b[k];
        b.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
    return b;
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent) {
    if (exponent.is_integer()) {
        long e;
        try {
            e = exponent.to_long();
        } catch (const std::overflow_error&) {
            return std::nullopt;
        }
        if (base.is_zero()) {
            if (e > 0) return Rational(0);
            if (e == 0) return Rational(1);
            return std::nullopt;
        }
        return base.pow(e);
    }
    if (base.is_zero())
        return exponent.sign() > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    if (base.sign() < 0) return std::nullopt;  // fractional power of a negative base

    Int d = exponent.den();
    if (!d.fits_ulong_p()) return std::nullopt;
    unsigned long root = d.get_ui();
    Int num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), base.num().get_mpz_t(), root) == 0) return std::nullopt;
    if (mpz_root(den_root.get_mpz_t(), base.den().get_mpz_t(), root) == 0) return std::nullopt;
    Int e = exponent.num();
    if (!e.fits_slong_p()) return std::nullopt;
    return Rational(num_root, den_root).pow(e.get_si());
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::variable() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> r(p.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * p.coeffs_[i];
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    long dd = den.degree();
    const Rational lead = den.coeff(static_cast<std::size_t>(dd));
    if (num.degree() < dd) return {Polynomial(), num};
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd) + 1);
    for (long i = num.degree(); i >= dd; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q.is_zero()) continue;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * den.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial product_expand(std::span<const std::pair<Rational, Rational>> factors) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (const auto& [slope, intercept] : factors)
        acc = acc * Polynomial({intercept, slope});
    return acc;
}

}  // namespace eulergen::exactmath
