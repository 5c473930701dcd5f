#include <benchmark/benchmark.h>

#include "liederiv/derivations.hpp"
#include "liederiv/families.hpp"
#include "liederiv/matrix.hpp"
#include "liederiv/membership.hpp"
#include "liederiv/oracle.hpp"
#include "liederiv/rng.hpp"

namespace {

liederiv::Matrix random_square(int n, std::uint64_t seed) {
  liederiv::SplitMix64 rng(seed);
  liederiv::Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = liederiv::Rat(rng.uniform(-20, 20)) /
                   liederiv::Rat(rng.uniform(1, 9));
    }
  }
  return m;
}

void BM_rational_rref(benchmark::State& state) {
  const int n = int(state.range(0));
  const liederiv::Matrix m = random_square(n, 12345);
  for (auto _ : state) {
    liederiv::Matrix work = m;
    benchmark::DoNotOptimize(liederiv::rref(work));
  }
}
BENCHMARK(BM_rational_rref)->Arg(8)->Arg(16)->Arg(24);

void BM_compute_der(benchmark::State& state) {
  const liederiv::LieAlgebra L = liederiv::free_nilpotent(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::compute_der(L));
  }
}
BENCHMARK(BM_compute_der);

void BM_full_report(benchmark::State& state) {
  const liederiv::LieAlgebra L = liederiv::g5_6();
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::compute_report(L));
  }
}
BENCHMARK(BM_full_report);

void BM_symbolic_membership(benchmark::State& state) {
  const liederiv::LieAlgebra L = liederiv::g5_6();
  liederiv::Matrix d(5, 5);
  d.at(4, 1) = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::decide_pointwise_membership(L, d));
  }
}
BENCHMARK(BM_symbolic_membership);

void BM_oracle_mod_p(benchmark::State& state) {
  const liederiv::LieAlgebra L = liederiv::g5_3();
  const std::uint32_t p = std::uint32_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::oracle_aid(L, p));
  }
}
BENCHMARK(BM_oracle_mod_p)->Arg(5)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
