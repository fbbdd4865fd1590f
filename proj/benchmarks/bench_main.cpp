#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "leafine/asymptotics.hpp"
#include "leafine/canonical.hpp"
#include "leafine/dialect.hpp"
#include "leafine/distinct.hpp"
#include "leafine/fib_trees.hpp"
#include "leafine/induce.hpp"
#include "leafine/recurrence.hpp"
#include "leafine/tree.hpp"

namespace {

using namespace leafine;

TopTree caterpillar(unsigned leaves) {
  TopTree t = TopTree::branch({TopTree::leaf(), TopTree::leaf()});
  for (unsigned i = 2; i < leaves; ++i)
    t = TopTree::branch({std::move(t), TopTree::leaf()});
  return t;
}

void BM_parse_serialize(benchmark::State& state) {
  const std::string text = serialize(leaf_fibonacci(10), /*canonical=*/true);
  for (auto _ : state) {
    std::string round = serialize(parse(text));
    benchmark::DoNotOptimize(round);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_parse_serialize);

void BM_canonical_caterpillar(benchmark::State& state) {
  TopTree t = caterpillar(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    std::string code = canonical_code(t);
    benchmark::DoNotOptimize(code);
  }
}
BENCHMARK(BM_canonical_caterpillar)->Arg(64)->Arg(256);

void BM_enumerate_brute(benchmark::State& state) {
  TopTree t = leaf_fibonacci(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto res = enumerate_bruteforce(t);
    benchmark::DoNotOptimize(res.codes);
  }
}
BENCHMARK(BM_enumerate_brute)->Arg(4)->Arg(5);

void BM_distinct_merge(benchmark::State& state) {
  TopTree t = leaf_fibonacci(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    BigCount n = count_distinct(t);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_distinct_merge)->Arg(6)->Arg(7);

void BM_sequence(benchmark::State& state) {
  const unsigned n_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto seq = n_sequence(n_max);
    benchmark::DoNotOptimize(seq);
  }
}
BENCHMARK(BM_sequence)->Arg(20)->Arg(30);

void BM_growth_base(benchmark::State& state) {
  const unsigned precision = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    K2Result k2 = compute_k2(kDefaultSeriesTerms, precision);
    benchmark::DoNotOptimize(k2.value);
  }
}
BENCHMARK(BM_growth_base)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
