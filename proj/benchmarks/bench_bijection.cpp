#include <benchmark/benchmark.h>

#include "avoidlab/bijection.hpp"
#include "avoidlab/enumerate.hpp"

namespace {

using namespace avoidlab;

// A zigzag-shaped avoider exercises both tree branches, unlike the identity
// whose tree is a bare chain.
Permutation sample_avoider(int n) {
  AvoiderStream stream(n);
  Permutation mid;
  std::int64_t take = catalan(n) / 2;
  while (auto w = stream.next()) {
    mid = std::move(*w);
    if (--take <= 0) break;
  }
  return mid;
}

void BM_phi(benchmark::State& state) {
  const Permutation w = sample_avoider(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(w));
  }
}
BENCHMARK(BM_phi)->DenseRange(4, 16, 4);

void BM_phi_inverse(benchmark::State& state) {
  const Permutation v = phi(sample_avoider(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_inverse(v));
  }
}
BENCHMARK(BM_phi_inverse)->DenseRange(4, 16, 4);

void BM_phi_round_trip(benchmark::State& state) {
  const Permutation w = sample_avoider(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_inverse(phi(w)));
  }
}
BENCHMARK(BM_phi_round_trip)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
