#include <benchmark/benchmark.h>

#include <vector>

#include "avoidlab/enumerate.hpp"
#include "avoidlab/permutation.hpp"

namespace {

using namespace avoidlab;

void BM_avoider_stream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    AvoiderStream stream(n);
    std::int64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * catalan(n));
}
BENCHMARK(BM_avoider_stream)->DenseRange(8, 14, 2);

void BM_contains(benchmark::State& state) {
  const Permutation host = parse_permutation("12,13,11,14,9,10,8,15,5,6,4,7,2,3,1");
  const Pattern pattern = parse_permutation("4312");
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains(host, pattern));
  }
}
BENCHMARK(BM_contains);

void BM_count_a_filtered(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const std::vector<Pattern> extras{parse_permutation("3412")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_a(m, extras).value);
  }
}
BENCHMARK(BM_count_a_filtered)->Arg(13)->Arg(17)->Arg(21);

}  // namespace
