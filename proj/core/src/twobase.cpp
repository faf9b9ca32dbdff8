#include "eulergen/twobase.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace eulergen::twobase {

void OdeSpec::validate() const {
    if (r.is_zero()) throw std::invalid_argument("ode needs r != 0");
    if (a == b) throw std::invalid_argument("ode needs a != b");
}

namespace {

using ExponentKey = std::pair<Rational, Rational>;

std::vector<TwoBaseTerm> normalize(std::vector<TwoBaseTerm> terms) {
    std::map<ExponentKey, Rational> merged;
    for (auto& t : terms) merged[{t.p, t.q}] += t.coeff;
    std::vector<TwoBaseTerm> out;
    out.reserve(merged.size());
    for (auto& [key, coeff] : merged)
        if (!coeff.is_zero()) out.push_back({coeff, key.first, key.second});
    return out;
}

void render_power(std::ostream& os, const char* base, const Rational& e) {
    os << base;
    if (!(e == Rational(1))) os << '^' << e.str();
}

}  // namespace

TwoBaseExpr::TwoBaseExpr(OdeSpec ode, std::vector<TwoBaseTerm> terms)
    : ode_(std::move(ode)), terms_(normalize(std::move(terms))) {
    ode_.validate();
}

TwoBaseExpr TwoBaseExpr::scaled(const Rational& c) const {
    std::vector<TwoBaseTerm> terms = terms_;
    for (auto& t : terms) t.coeff *= c;
    return TwoBaseExpr(ode_, std::move(terms));
}

std::string TwoBaseExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const char* first_base = ode_.real_form ? "(v-a)" : "(u-a)";
    const char* second_base = ode_.real_form ? "(b-v)" : "(u-b)";
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.str() << '*';
        render_power(os, first_base, t.p);
        os << '*';
        render_power(os, second_base, t.q);
    }
    return os.str();
}

TwoBaseExpr operator+(const TwoBaseExpr& x, const TwoBaseExpr& y) {
    if (!(x.ode_ == y.ode_))
        throw std::invalid_argument("cannot add expressions over different odes");
    std::vector<TwoBaseTerm> terms = x.terms_;
    terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
    return TwoBaseExpr(x.ode_, std::move(terms));
}

TwoBaseExpr g_expr(const OdeSpec& ode, long n, const triangles::Triangle& triangle) {
    ode.validate();
    if (n < 1) throw std::invalid_argument("g_expr needs n >= 1");
    if (!(triangle.params().w1 == ode.w1) || !(triangle.params().w2 == ode.w2))
        throw std::invalid_argument("triangle parameters do not match the ode");
    if (triangle.rows() < n)
        throw std::invalid_argument("triangle has too few rows for n = " + std::to_string(n));

    const Rational nn(n);
    std::vector<TwoBaseTerm> terms;
    auto row = triangle.row(n);
    for (long k = 0; k < n; ++k) {
        Rational c = row[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (ode.real_form && k % 2 == 1) c = -c;
        terms.push_back({std::move(c),
                         nn * ode.w1 - nn + Rational(k + 1),
                         nn * ode.w2 - Rational(k)});
    }
    return TwoBaseExpr(ode, std::move(terms));
}

TwoBaseExpr first_derivative_expr(const OdeSpec& ode) {
    return TwoBaseExpr(ode, {{ode.r, ode.w1, ode.w2}});
}

TwoBaseExpr derive_once(const TwoBaseExpr& expr) {
    const OdeSpec& ode = expr.ode();
    const Rational one(1);
    std::vector<TwoBaseTerm> out;
    out.reserve(expr.terms().size() * 2);
    for (const auto& t : expr.terms()) {
        if (!t.p.is_zero())
            out.push_back({ode.r * t.coeff * t.p, t.p - one + ode.w1, t.q + ode.w2});
        if (!t.q.is_zero()) {
            Rational c = ode.r * t.coeff * t.q;
            if (ode.real_form) c = -c;  // d/dv (b-v)^q = -q (b-v)^{q-1}
            out.push_back({std::move(c), t.p + ode.w1, t.q - one + ode.w2});
        }
    }
    return TwoBaseExpr(ode, std::move(out));
}

Rational eval_expr(const TwoBaseExpr& expr, const Rational& u0) {
    const OdeSpec& ode = expr.ode();
    const Rational base1 = u0 - ode.a;
    const Rational base2 = ode.real_form ? ode.b - u0 : u0 - ode.b;
    Rational acc(0);
    for (const auto& t : expr.terms()) {
        auto f1 = exactmath::exact_pow(base1, t.p);
        auto f2 = exactmath::exact_pow(base2, t.q);
        if (!f1 || !f2)
            throw NonRationalPower("no exact rational power at u0 = " + u0.str() +
                                   " for term " + t.coeff.str() + "*(.)^" + t.p.str() +
                                   "*(.)^" + t.q.str());
        acc += t.coeff * *f1 * *f2;
    }
    return acc;
}

CheckReport verify_theorem1(const OdeSpec& ode, long n_max) {
    ode.validate();
    if (n_max < 1) throw std::invalid_argument("verify_theorem1 needs n_max >= 1");
    triangles::Triangle triangle(triangles::TriangleParams{ode.w1, ode.w2}, n_max);

    CheckReport report;
    report.identity = "theorem1";
    report.params = std::string(ode.real_form ? "real form, " : "") + "r=" + ode.r.str() +
                    " a=" + ode.a.str() + " b=" + ode.b.str() + " w1=" + ode.w1.str() +
                    " w2=" + ode.w2.str();

    TwoBaseExpr derived = first_derivative_expr(ode);
    Rational r_power = ode.r;
    for (long n = 1; n <= n_max; ++n) {
        if (n > 1) {
            derived = derive_once(derived);
            r_power *= ode.r;
        }
        TwoBaseExpr expected = g_expr(ode, n, triangle).scaled(r_power);
        report.items.push_back({n, expected.str(), derived.str(), expected == derived});
    }
    return report;
}

CheckReport taylor_compare(const OdeSpec& ode, const powerseries::Series& series,
                           const Rational& u0, std::size_t order) {
    ode.validate();
    if (order > series.order())
        throw std::invalid_argument("taylor_compare order exceeds the series order");
    const long n_max = static_cast<long>(order) - 1;
    triangles::Triangle triangle(triangles::TriangleParams{ode.w1, ode.w2},
                                 std::max<long>(n_max, 1));

    CheckReport report;
    report.identity = "taylor";
    report.params = "u0=" + u0.str();

    Rational fact(1);
    Rational r_power(1);
    for (long n = 1; n <= n_max; ++n) {
        fact *= Rational(n);
        r_power *= ode.r;
        Rational lhs = fact * series.coeff(static_cast<std::size_t>(n));
        Rational rhs = r_power * eval_expr(g_expr(ode, n, triangle), u0);
        report.items.push_back({n, rhs.str(), lhs.str(), lhs == rhs});
    }
    return report;
}

}  // namespace eulergen::twobase
