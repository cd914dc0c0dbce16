#include <benchmark/benchmark.h>

#include "ndslab/fixtures.hpp"
#include "ndslab/hyperspace.hpp"
#include "ndslab/rng.hpp"
#include "ndslab/shadowing.hpp"

using namespace ndslab;

static void BM_ImagePropagation(benchmark::State& state) {
    const MapSchedule& sched = fixture("example31").schedule;
    IntervalUnion v = IntervalUnion::interval(Rational(2, 5), Rational(1, 2));
    const auto horizon = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sched.image_at_time(v, horizon));
    }
}
BENCHMARK(BM_ImagePropagation)->Arg(16)->Arg(64)->Arg(256);

static void BM_OrbitPoint(benchmark::State& state) {
    const MapSchedule& sched = fixture("example32").schedule;
    const auto horizon = static_cast<std::size_t>(state.range(0));
    Rational x(9, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sched.orbit_point(x, horizon));
    }
}
BENCHMARK(BM_OrbitPoint)->Arg(64)->Arg(256);

static void BM_HausdorffDistance(benchmark::State& state) {
    Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(rng.unit(20));
        b.push_back(rng.unit(20));
    }
    FiniteSubset sa(std::move(a)), sb(std::move(b));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hausdorff_distance(sa, sb));
    }
}
BENCHMARK(BM_HausdorffDistance)->Arg(8)->Arg(64)->Arg(512);

static void BM_TracerCarrier(benchmark::State& state) {
    const MapSchedule& sched = fixture("example32").schedule;
    const auto length = static_cast<std::size_t>(state.range(0));
    PseudoOrbit po = perturbed_orbit(sched, Rational(1, 3), Rational(1, 100), length, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tracer_carrier(sched, po.points, Rational(1, 10)));
    }
}
BENCHMARK(BM_TracerCarrier)->Arg(8)->Arg(16)->Arg(32);

static void BM_SampleHausdorffBall(benchmark::State& state) {
    FiniteSubset center({Rational(1, 4), Rational(9, 20), Rational(3, 4)});
    HyperNeighborhood nbhd{center, Rational(1, 20)};
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_hausdorff_ball(nbhd, count, 7));
    }
}
BENCHMARK(BM_SampleHausdorffBall)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
