#include <benchmark/benchmark.h>

#include <random>

#include "veronese/monoid.hpp"
#include "veronese/zerosum.hpp"

using namespace veronese;

namespace {

zerosum::ResidueSequence random_sequence(std::uint64_t m, std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> terms(len);
  for (auto& t : terms) t = rng() % m;
  return zerosum::ResidueSequence::from_reduced(m, std::move(terms));
}

}  // namespace

static void BM_EgzPrime(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  auto seq = random_sequence(p, static_cast<std::size_t>(2 * p - 1), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zerosum::egz_prime(seq));
  }
}
BENCHMARK(BM_EgzPrime)->Arg(5)->Arg(13)->Arg(31)->Arg(101);

static void BM_EgzComposite(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  auto seq = random_sequence(m, static_cast<std::size_t>(2 * m - 1), 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zerosum::egz(seq));
  }
}
BENCHMARK(BM_EgzComposite)->Arg(12)->Arg(30)->Arg(60);

static void BM_PartitionZeroSum(benchmark::State& state) {
  const std::uint64_t m = 6;
  const auto blocks = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(44);
  std::vector<std::uint64_t> terms(m * blocks);
  std::uint64_t total = 0;
  for (auto& t : terms) {
    t = rng() % m;
    total += t;
  }
  terms.back() = (terms.back() + m - total % m) % m;
  auto seq = zerosum::ResidueSequence::from_reduced(m, std::move(terms));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zerosum::partition_zero_sum(seq));
  }
}
BENCHMARK(BM_PartitionZeroSum)->Arg(4)->Arg(16)->Arg(64);

static void BM_MonoidDecompose(benchmark::State& state) {
  monoid::WeightedMonoidInstance inst({2, 3, 4});
  const auto level = static_cast<std::uint64_t>(state.range(0));
  // 2*(6q) + 3*(4q) = 24q = q*N with N = 24
  monoid::Exponents element = {6 * level, 4 * level, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(monoid::decompose(inst, element));
  }
}
BENCHMARK(BM_MonoidDecompose)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
