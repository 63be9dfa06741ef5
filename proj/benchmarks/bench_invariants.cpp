#include <benchmark/benchmark.h>

#include "veronese/linverify.hpp"

using namespace veronese;

namespace {

linverify::MatrixGroup s3_permutation() {
  fp::PrimeField F(7);
  linverify::Mat t(3), c(3);
  t.at(0, 1) = 1;
  t.at(1, 0) = 1;
  t.at(2, 2) = 1;
  c.at(0, 1) = 1;
  c.at(1, 2) = 1;
  c.at(2, 0) = 1;
  return linverify::close_group(F, {t, c});
}

}  // namespace

static void BM_Reynolds(benchmark::State& state) {
  auto group = s3_permutation();
  linverify::Polynomial p;
  p.degree = static_cast<std::uint64_t>(state.range(0));
  p.terms.emplace_back(
      std::vector<std::uint32_t>{static_cast<std::uint32_t>(state.range(0)), 0, 0}, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linverify::reynolds(group, p));
  }
}
BENCHMARK(BM_Reynolds)->Arg(2)->Arg(6)->Arg(12);

static void BM_InvariantBasis(benchmark::State& state) {
  auto group = s3_permutation();
  const auto degree = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linverify::invariant_basis(group, degree));
  }
}
BENCHMARK(BM_InvariantBasis)->Arg(4)->Arg(8)->Arg(12);

static void BM_CheckSurjectivity(benchmark::State& state) {
  auto group = s3_permutation();
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linverify::check_surjectivity(group, d));
  }
}
BENCHMARK(BM_CheckSurjectivity)->Arg(1)->Arg(2);

static void BM_Molien(benchmark::State& state) {
  auto group = s3_permutation();
  const auto max_degree = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linverify::molien(group, max_degree));
  }
}
BENCHMARK(BM_Molien)->Arg(12)->Arg(48);

BENCHMARK_MAIN();
