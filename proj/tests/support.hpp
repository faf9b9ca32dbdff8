#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulergen/exactmath.hpp"
#include "eulergen/powerseries.hpp"

namespace testsupport {

using eulergen::exactmath::Rational;

inline std::vector<std::vector<Rational>> parse_table(const std::vector<std::string>& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        std::istringstream is(row);
        std::vector<Rational> values;
        std::string tok;
        while (is >> tok) values.push_back(Rational::parse(tok));
        out.push_back(std::move(values));
    }
    return out;
}

// Classical Eulerian numbers, rows 1..7.
inline const std::vector<std::string> kEulerianRows = {
    "1",
    "1 1",
    "1 4 1",
    "1 11 11 1",
    "1 26 66 26 1",
    "1 57 302 302 57 1",
    "1 120 1191 2416 1191 120 1",
};

// Second-order Eulerian numbers, rows 1..7.
inline const std::vector<std::string> kSecondOrderRows = {
    "1",
    "1 2",
    "1 8 6",
    "1 22 58 24",
    "1 52 328 444 120",
    "1 114 1452 4400 3708 720",
    "1 240 5610 32120 58140 33984 5040",
};

// M(n,k) rows 1..7 (row-sum polynomial coefficients).
inline const std::vector<std::string> kMRows = {
    "1",
    "0 1",
    "0 -1 2",
    "0 2 -7 6",
    "0 -6 29 -46 24",
    "0 24 -146 329 -326 120",
    "0 -120 874 -2521 3604 -2556 720",
};

// (w1, w2) = (1/2, 1/2), rows 1..8.
inline const std::vector<std::string> kHalfHalfRows = {
    "1",
    "1/2 1/2",
    "0 1 0",
    "0 1/2 1/2 0",
    "0 0 1 0 0",
    "0 0 1/2 1/2 0 0",
    "0 0 0 1 0 0 0",
    "0 0 0 1/2 1/2 0 0 0",
};

// (w1, w2) = (1/2, 1), rows 1..8.
inline const std::vector<std::string> kHalfOneRows = {
    "1",
    "1/2 1",
    "0 2 1",
    "0 1 11/2 1",
    "0 0 17/2 13 1",
    "0 0 17/4 45 57/2 1",
    "0 0 0 62 192 60 1",
    "0 0 0 31 536 726 247/2 1",
};

class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational next(long max_abs_num = 10, long max_den = 10) {
        std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return Rational(num(rng_), den(rng_));
    }

    Rational next_nonzero(long max_abs_num = 10, long max_den = 10) {
        for (;;) {
            Rational r = next(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Series of z(1/2 + s) where z(u) = log(u/(1-u)) + u/(1-u) - 1 is the inverse
// of the solution of u' = u(u-1)^2 through u(0) = 1/2.  Built from series
// primitives only:
//   log((1/2+s)/(1/2-s)) = log1p(2s) - log1p(-2s),
//   (1/2+s)/(1/2-s) - 1  = (1+2s)/(1-2s) - 1.
inline eulergen::powerseries::Series second_order_inverse_series(std::size_t order) {
    namespace ps = eulergen::powerseries;
    const ps::Series two_s = ps::scale(Rational(2), ps::Series::identity(order));
    const ps::Series one = ps::Series::constant(Rational(1), order);
    ps::Series log_part = ps::sub(ps::log1p(two_s), ps::log1p(ps::negate(two_s)));
    ps::Series rat_part = ps::sub(ps::div(ps::add(one, two_s), ps::sub(one, two_s)), one);
    return ps::add(log_part, rat_part);
}

// The solution series itself: 1/2 + revert(z-series).
inline eulergen::powerseries::Series second_order_solution_series(std::size_t order) {
    namespace ps = eulergen::powerseries;
    return ps::add(ps::Series::constant(Rational(1, 2), order),
                   ps::revert(second_order_inverse_series(order)));
}

}  // namespace testsupport
