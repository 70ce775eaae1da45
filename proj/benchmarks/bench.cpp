#include <benchmark/benchmark.h>

#include "pcf/definability.hpp"
#include "pcf/denotation.hpp"
#include "pcf/generate.hpp"

namespace {

using namespace pcf;

void BM_ComposeRandom(benchmark::State& state) {
  Rng rng(1);
  const Type t = parse_type("nat->nat");
  std::vector<std::pair<Strategy, Strategy>> pairs;
  for (int i = 0; i < 64; ++i)
    pairs.emplace_back(random_compact(t, 3, state.range(0), rng).with_domain_arity(1),
                       random_compact(t, 3, state.range(0), rng).with_domain_arity(1));
  std::size_t i = 0;
  for (auto _ : state) {
    auto& [f, g] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(compose(f, g));
  }
}
BENCHMARK(BM_ComposeRandom)->Arg(3)->Arg(6);

void BM_DecomposeRoundTrip(benchmark::State& state) {
  Rng rng(2);
  const Type t = parse_type("(nat->nat)->nat");
  std::vector<Strategy> fs;
  for (int i = 0; i < 64; ++i) fs.push_back(random_compact(t, 3, 6, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const Strategy& f = fs[i++ % fs.size()];
    benchmark::DoNotOptimize(recompose(decompose(f), f.type(), 3));
  }
}
BENCHMARK(BM_DecomposeRoundTrip);

void BM_DenoteRecursion(benchmark::State& state) {
  Term m = parse_term("Y[nat->nat] (\\f:nat->nat. \\x:nat. case[4] x 0 (f 0) (f 1) (f 2))");
  for (auto _ : state) benchmark::DoNotOptimize(denote(m, state.range(0), 4));
}
BENCHMARK(BM_DenoteRecursion)->Arg(4)->Arg(16)->Arg(32);

void BM_ExtractTotal(benchmark::State& state) {
  Term m = parse_term("\\f:nat->nat. \\x:nat. case[3] (f x) (f 0) x 2");
  Strategy f = denote(m, 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(extract_term(f));
}
BENCHMARK(BM_ExtractTotal);

}  // namespace

BENCHMARK_MAIN();
