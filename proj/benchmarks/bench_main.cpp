#include <benchmark/benchmark.h>

#include "eulergen/exactmath.hpp"
#include "eulergen/integrate.hpp"
#include "eulergen/powerseries.hpp"
#include "eulergen/triangles.hpp"
#include "eulergen/twobase.hpp"

namespace {

using eulergen::exactmath::Rational;
using eulergen::triangles::Triangle;
using eulergen::twobase::OdeSpec;

void BM_BuildTriangle(benchmark::State& state) {
    const long rows = state.range(0);
    for (auto _ : state) {
        Triangle t({Rational(1), Rational(2)}, rows);
        benchmark::DoNotOptimize(t.row(rows).data());
    }
}
BENCHMARK(BM_BuildTriangle)->Arg(40)->Arg(120)->Arg(400);

void BM_BuildTriangleFractionalParams(benchmark::State& state) {
    const long rows = state.range(0);
    for (auto _ : state) {
        Triangle t({Rational(3, 7), Rational(-5, 11)}, rows);
        benchmark::DoNotOptimize(t.row(rows).data());
    }
}
BENCHMARK(BM_BuildTriangleFractionalParams)->Arg(40)->Arg(120);

void BM_BernoulliRecurrence(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto b = eulergen::exactmath::bernoulli_oracle(n);
        benchmark::DoNotOptimize(b.data());
    }
}
BENCHMARK(BM_BernoulliRecurrence)->Arg(60)->Arg(120);

void BM_BernoulliSeries(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto b = eulergen::powerseries::bernoulli_from_series(n);
        benchmark::DoNotOptimize(b.data());
    }
}
BENCHMARK(BM_BernoulliSeries)->Arg(60)->Arg(120);

void BM_VerifyTheorem1(benchmark::State& state) {
    const OdeSpec ode{Rational(1), Rational(0), Rational(1), Rational(1), Rational(2), false};
    const long n_max = state.range(0);
    for (auto _ : state) {
        auto report = eulergen::twobase::verify_theorem1(ode, n_max);
        benchmark::DoNotOptimize(report.items.data());
    }
}
BENCHMARK(BM_VerifyTheorem1)->Arg(12)->Arg(24);

void BM_IntegrateRow(benchmark::State& state) {
    const OdeSpec ode{Rational(1), Rational(0), Rational(1), Rational(1), Rational(1), false};
    const long n = state.range(0);
    Triangle t({ode.w1, ode.w2}, n);
    for (auto _ : state) {
        auto v = eulergen::integrate::integrate_gn(ode, n, t);
        benchmark::DoNotOptimize(&v);
    }
}
BENCHMARK(BM_IntegrateRow)->Arg(20)->Arg(60);

void BM_SeriesRevert(benchmark::State& state) {
    namespace ps = eulergen::powerseries;
    const auto order = static_cast<std::size_t>(state.range(0));
    ps::Series target = ps::sub(ps::exp_w(order), ps::Series::constant(Rational(1), order));
    for (auto _ : state) {
        auto r = ps::revert(target);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_SeriesRevert)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
