#include <benchmark/benchmark.h>

#include "sepscope/families.hpp"
#include "sepscope/separators.hpp"

using namespace sepscope;

namespace {

Graph twisted(int k) {
  FamilySpec s;
  s.family = Family::twisted_ladder;
  s.k = k;
  return generate(s).graph;
}

void BM_oracle_serial(benchmark::State& st) {
  Graph g = cycle_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_oracle_serial(g));
}
void BM_oracle_parallel(benchmark::State& st) {
  Graph g = cycle_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_oracle(g));
}
void BM_closure_serial(benchmark::State& st) {
  Graph g = twisted(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_closure_serial(g));
}
void BM_closure_parallel(benchmark::State& st) {
  Graph g = twisted(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_closure(g));
}

}  // namespace

BENCHMARK(BM_oracle_serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
