#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <lmvt/lmvt.hpp>

namespace {

using lmvt::Bits;

lmvt::Instance random_instance(std::size_t n, std::size_t B, Bits max_rate,
                               std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(B)};
  std::mt19937_64 rng(seq);
  std::vector<std::vector<Bits>> rates(n, std::vector<Bits>(B, 0));
  for (auto& row : rates)
    for (auto& cell : row) cell = rng() % (max_rate + 1);
  return lmvt::make_instance(std::move(rates));
}

void BM_SolveExact(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), state.range(1), 50, 1);
  std::uint64_t states = 0;
  for (auto _ : state) {
    auto report = lmvt::solve_exact(inst);
    benchmark::DoNotOptimize(report.value);
    states = report.states_visited;
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_SolveExact)->Args({2, 8})->Args({2, 12})->Args({3, 8})->Args({4, 6});

void BM_SolveFptas(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), state.range(1), 50, 1);
  const lmvt::Epsilon eps{lmvt::Rational(1, state.range(2))};
  std::uint64_t states = 0;
  for (auto _ : state) {
    auto report = lmvt::solve_fptas(inst, eps);
    benchmark::DoNotOptimize(report.value);
    states = report.states_visited;
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_SolveFptas)
    ->Args({2, 8, 2})
    ->Args({2, 12, 2})
    ->Args({3, 8, 2})
    ->Args({4, 6, 2})
    ->Args({2, 12, 10});

void BM_BruteForce(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), state.range(1), 50, 1);
  for (auto _ : state) {
    auto report = lmvt::brute_force_opt(inst);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_BruteForce)->Args({2, 8})->Args({3, 6});

void BM_Greedy(benchmark::State& state) {
  const auto inst = random_instance(state.range(0), state.range(1), 50, 1);
  for (auto _ : state) {
    auto report = lmvt::solve_greedy(inst);
    benchmark::DoNotOptimize(report.value);
  }
}
BENCHMARK(BM_Greedy)->Args({2, 8})->Args({8, 64});

void BM_PartitionDecide(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Bits> items;
  for (std::int64_t j = 0; j < state.range(0); ++j)
    items.push_back(1 + rng() % 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmvt::partition_decide(items));
  }
}
BENCHMARK(BM_PartitionDecide)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
