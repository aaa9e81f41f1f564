#include <benchmark/benchmark.h>

#include <random>

#include "mgrough/completion.hpp"
#include "mgrough/partitions.hpp"
#include "mgrough/rough_systems.hpp"
#include "mgrough/sweep.hpp"

namespace {

using namespace mgrough;

struct PairFixture {
  Universe universe;
  Equivalence p, q;
};

PairFixture random_pair(std::size_t n) {
  std::mt19937_64 rng(kDefaultSeed + n);
  auto u = letters_universe(n);
  auto p = random_partition(u, rng);
  auto q = random_partition(u, rng);
  return {std::move(u), std::move(p), std::move(q)};
}

void bm_pair_approximations(benchmark::State& state) {
  const auto f = random_pair(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto x = random_subset(f.universe.size(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt_lower(f.p, f.q, x));
    benchmark::DoNotOptimize(opt_upper(f.p, f.q, x));
    benchmark::DoNotOptimize(pess_lower(f.p, f.q, x));
    benchmark::DoNotOptimize(pess_upper(f.p, f.q, x));
  }
}
BENCHMARK(bm_pair_approximations)->Arg(8)->Arg(32)->Arg(63);

void bm_build_rs(benchmark::State& state) {
  const auto f = random_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto rs = build_rs(SystemKind::optimistic, f.p, f.q);
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(bm_build_rs)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void bm_build_irs(benchmark::State& state) {
  const auto f = random_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto irs = build_irs(f.p, f.q);
    benchmark::DoNotOptimize(irs.size());
  }
}
BENCHMARK(bm_build_irs)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void bm_dm_completion(benchmark::State& state) {
  const auto f = random_pair(static_cast<std::size_t>(state.range(0)));
  const auto rs = build_rs(SystemKind::optimistic, f.p, f.q);
  state.counters["rs_size"] = static_cast<double>(rs.size());
  for (auto _ : state) {
    auto dm = dm_completion(rs.order());
    benchmark::DoNotOptimize(dm.lattice.size());
  }
}
BENCHMARK(bm_dm_completion)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

void bm_classify_system(benchmark::State& state) {
  const auto f = random_pair(static_cast<std::size_t>(state.range(0)));
  const auto rs = build_rs(SystemKind::pessimistic, f.p, f.q);
  for (auto _ : state) {
    auto report = classify_system(rs);
    benchmark::DoNotOptimize(report.lattice.is_lattice.holds);
  }
}
BENCHMARK(bm_classify_system)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);

void bm_sweep(benchmark::State& state) {
  SweepConfig config;
  config.max_n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto summary = run_sweep(config);
    benchmark::DoNotOptimize(summary.violations.size());
  }
}
BENCHMARK(bm_sweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
