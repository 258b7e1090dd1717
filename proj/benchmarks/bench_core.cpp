#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "latinauto/autotopy.hpp"
#include "latinauto/invariants.hpp"
#include "latinauto/latin.hpp"

namespace {

using namespace latinauto;

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  return z ^ (z >> 31);
}

std::vector<LatinSquare> corpus(int n, int count, std::uint64_t salt) {
  std::vector<LatinSquare> out;
  out.reserve(count);
  for (int rep = 0; rep < count; ++rep)
    out.push_back(jm_random(n, mix_seed(salt, rep), /*reduced=*/true));
  return out;
}

void BM_AutotopyGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto squares = corpus(n, 64, 1000 + n);
  std::size_t idx = 0;
  for (auto _ : state) {
    AutotopyGroup group = autotopy_group(squares[idx]);
    benchmark::DoNotOptimize(group.elements.data());
    idx = (idx + 1) % squares.size();
  }
}
BENCHMARK(BM_AutotopyGroup)->Arg(10)->Arg(15)->Arg(20)->Arg(25)->Arg(30)
    ->Unit(benchmark::kMillisecond);

void BM_AutotopyGroupCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LatinSquare table = LatinSquare::cayley_cyclic(n);
  for (auto _ : state) {
    AutotopyGroup group = autotopy_group(table);
    benchmark::DoNotOptimize(group.elements.data());
  }
}
BENCHMARK(BM_AutotopyGroupCyclic)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ComputeInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto squares = corpus(n, 16, 2000 + n);
  std::size_t idx = 0;
  for (auto _ : state) {
    SquareInvariants inv = compute_invariants(squares[idx]);
    benchmark::DoNotOptimize(inv.stable_rows.data());
    idx = (idx + 1) % squares.size();
  }
}
BENCHMARK(BM_ComputeInvariants)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_JmRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    LatinSquare square = jm_random(n, ++seed);
    benchmark::DoNotOptimize(square.size());
  }
}
BENCHMARK(BM_JmRandom)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_BruteOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto squares = corpus(n, 8, 3000 + n);
  std::size_t idx = 0;
  for (auto _ : state) {
    AutotopyGroup group = autotopy_group_brute(squares[idx]);
    benchmark::DoNotOptimize(group.elements.data());
    idx = (idx + 1) % squares.size();
  }
}
BENCHMARK(BM_BruteOracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
