#include "modelspace/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace k = modelspace::kernels;
using k::Complex;

namespace {

std::vector<Complex> random_points(std::size_t n, double rmax, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> r(0.0, rmax), t(0.0, 6.283185307179586);
    std::vector<Complex> out(n);
    for (auto& z : out) z = std::polar(r(rng), t(rng));
    return out;
}

template <auto Fn>
void BM_blaschke(benchmark::State& state) {
    const auto zeros = random_points(64, 0.95, 1);
    const auto nodes = k::circle_nodes(static_cast<std::size_t>(state.range(0)), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(zeros, nodes));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_frostman(benchmark::State& state) {
    const auto zeros = random_points(64, 0.99, 2);
    const auto nodes = k::circle_nodes(static_cast<std::size_t>(state.range(0)), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(zeros, nodes));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_arc(benchmark::State& state) {
    const auto x = random_points(static_cast<std::size_t>(state.range(0)), 1.0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(x));
}

template <auto Fn>
void BM_sublevel(benchmark::State& state) {
    const auto zeros = random_points(12, 0.9, 4);
    const auto coeffs = random_points(2048, 1.0, 5);
    const auto points = random_points(static_cast<std::size_t>(state.range(0)), 0.999, 6);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(zeros, coeffs, points, 0.5));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_blaschke<k::serial::blaschke_values>)->Name("blaschke/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_blaschke<k::omp::blaschke_values>)->Name("blaschke/omp")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_frostman<k::serial::frostman_values>)->Name("frostman/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_frostman<k::omp::frostman_values>)->Name("frostman/omp")->Range(1 << 10, 1 << 16);
BENCHMARK(BM_arc<k::serial::dyadic_arc_oscillation>)->Name("arc/serial")->Range(1 << 8, 1 << 12);
BENCHMARK(BM_arc<k::omp::dyadic_arc_oscillation>)->Name("arc/omp")->Range(1 << 8, 1 << 12);
BENCHMARK(BM_sublevel<k::serial::sublevel_scan>)->Name("sublevel/serial")->Range(1 << 10, 1 << 14);
BENCHMARK(BM_sublevel<k::omp::sublevel_scan>)->Name("sublevel/omp")->Range(1 << 10, 1 << 14);

BENCHMARK_MAIN();
