#include "eulergen/triangles.hpp"

#include <stdexcept>
#include <utility>

namespace eulergen::triangles {

Triangle::Triangle(TriangleParams params, long n_max) : params_(std::move(params)) {
    if (n_max < 1) throw std::invalid_argument("triangle needs at least one row");
    extend(n_max);
}

void Triangle::extend(long n_max) {
    if (rows_.empty()) rows_.push_back({Rational(1)});  // row 1, from the G(0,0) = 1 seed
    while (rows() < n_max) {
        const long n = rows();  // building row n+1 from row n
        const auto& prev = rows_.back();
        std::vector<Rational> next(static_cast<std::size_t>(n) + 1);
        const Rational nr(n);
        for (long k = 0; k <= n; ++k) {
            Rational v(0);
            if (k < n)
                v += (nr * params_.w1 - nr + Rational(k + 1)) * prev[static_cast<std::size_t>(k)];
            if (k >= 1)
                v += (nr * params_.w2 - Rational(k) + Rational(1)) * prev[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows_.push_back(std::move(next));
    }
}

std::span<const Rational> Triangle::row(long n) const {
    if (n < 1 || n > rows())
        throw std::out_of_range("triangle row " + std::to_string(n) + " not built");
    return rows_[static_cast<std::size_t>(n - 1)];
}

Rational Triangle::g(long n, long k) const {
    if (k < 0 || k >= n) return Rational(0);
    return row(n)[static_cast<std::size_t>(k)];
}

Triangle build_triangle(const TriangleParams& params, long n_max) {
    return Triangle(params, n_max);
}

Triangle classic_triangle(int order, long n_max) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("classic triangle order must be 1, 2 or 3");
    return Triangle(TriangleParams{Rational(1), Rational(order)}, n_max);
}

Rational row_sum(const Triangle& t, long n) {
    Rational acc(0);
    for (const auto& v : t.row(n)) acc += v;
    return acc;
}

Rational row_sum_closed_form(const TriangleParams& params, long n) {
    if (n < 1) throw std::invalid_argument("row sums start at n = 1");
    const Rational x = params.w1 + params.w2;
    Rational acc(1);
    for (long m = 0; m < n; ++m) acc *= Rational(m) * x - Rational(m) + Rational(1);
    return acc;
}

Polynomial row_sum_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("row sums start at n = 1");
    std::vector<std::pair<Rational, Rational>> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (long m = 0; m < n; ++m)
        factors.emplace_back(Rational(m), Rational(1 - m));
    return exactmath::product_expand(factors);
}

MTriangle::MTriangle(long n_max) {
    if (n_max < 1) throw std::invalid_argument("m-triangle needs at least one row");
    rows_.push_back({Rational(1)});
    while (rows() < n_max) {
        const long n = rows();
        const auto& prev = rows_.back();
        std::vector<Rational> next(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            Rational v(0);
            if (k < n) v += Rational(1 - n) * prev[static_cast<std::size_t>(k)];
            if (k >= 1) v += Rational(n) * prev[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows_.push_back(std::move(next));
    }
}

std::span<const Rational> MTriangle::row(long n) const {
    if (n < 1 || n > rows())
        throw std::out_of_range("m-triangle row " + std::to_string(n) + " not built");
    return rows_[static_cast<std::size_t>(n - 1)];
}

MTriangle m_triangle(long n_max) { return MTriangle(n_max); }

}  // namespace eulergen::triangles
