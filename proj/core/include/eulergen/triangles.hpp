#pragma once

#include <span>
#include <vector>

#include "eulergen/exactmath.hpp"

namespace eulergen::triangles {

using exactmath::Polynomial;
using exactmath::Rational;

struct TriangleParams {
    Rational w1;
    Rational w2;
    friend bool operator==(const TriangleParams&, const TriangleParams&) = default;
};

/// Rows n = 1..rows() of the generalized Eulerian array
///   G(n+1,k) = (n*w1 - n + k + 1) G(n,k) + (n*w2 - k + 1) G(n,k-1),
/// seeded by G(0,0) = 1, with G(n,k) = 0 for k < 0 or k >= n.  Row n stores
/// exactly the n entries G(n,0..n-1); extend() grows the array in place so
/// asking for more rows never recomputes the existing ones.
class Triangle {
public:
    Triangle(TriangleParams params, long n_max);

    void extend(long n_max);

    const TriangleParams& params() const { return params_; }
    long rows() const { return static_cast<long>(rows_.size()); }
    std::span<const Rational> row(long n) const;
    /// Zero outside the stored range (the boundary convention).
    Rational g(long n, long k) const;

private:
    TriangleParams params_;
    std::vector<std::vector<Rational>> rows_;
};

Triangle build_triangle(const TriangleParams& params, long n_max);

/// Orders 1, 2, 3 map to parameter pairs (1,1), (1,2), (1,3).
Triangle classic_triangle(int order, long n_max);

Rational row_sum(const Triangle& t, long n);

/// prod_{m=0}^{n-1} (m*(w1+w2) - m + 1), the closed form of the nth row sum.
Rational row_sum_closed_form(const TriangleParams& params, long n);

/// P_{n-1}(x) = prod_{m=0}^{n-1} (m*x - m + 1); for n = 1 the empty product 1.
Polynomial row_sum_polynomial(long n);

/// Rows of M(n+1,k) = (1-n) M(n,k) + n M(n,k-1) with M(1,0) = 1; row n holds
/// M(n,0..n-1) and coincides with the coefficient list of row_sum_polynomial(n).
class MTriangle {
public:
    explicit MTriangle(long n_max);

    long rows() const { return static_cast<long>(rows_.size()); }
    std::span<const Rational> row(long n) const;

private:
    std::vector<std::vector<Rational>> rows_;
};

MTriangle m_triangle(long n_max);

}  // namespace eulergen::triangles
