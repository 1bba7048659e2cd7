#include <benchmark/benchmark.h>

#include "knotid/egc.hpp"
#include "knotid/homfly.hpp"
#include "knotid/knotdb.hpp"
#include "knotid/simplify.hpp"

using namespace knotid;

namespace {

std::vector<Diagram> seeds_with(int crossing) {
  std::vector<Diagram> out;
  for (const auto& s : load_seeds_text(builtin_seeds_text())) {
    if (s.crossing == crossing) out.push_back(parse_egc(s.egc));
  }
  return out;
}

// Fresh engine per iteration so the memo does not carry over.
void BM_HomflySeeds(benchmark::State& state) {
  const auto diagrams = seeds_with(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HomflyEngine engine;
    for (const auto& d : diagrams) benchmark::DoNotOptimize(engine.compute(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(diagrams.size()));
}
BENCHMARK(BM_HomflySeeds)->DenseRange(3, 10);

void BM_HomflyTrefoilChain(benchmark::State& state) {
  // n-fold connected sum of positive trefoils
  Diagram d = parse_egc("a1+b2+a3+b1+a2+b3+");
  const Diagram t = d;
  for (int i = 1; i < state.range(0); ++i) d = connected_sum(d, t);
  for (auto _ : state) benchmark::DoNotOptimize(homfly(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_HomflyTrefoilChain)->DenseRange(1, 6);

void BM_Simplify(benchmark::State& state) {
  const Diagram d = parse_egc("a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+");
  for (auto _ : state) benchmark::DoNotOptimize(simplify(d));
}
BENCHMARK(BM_Simplify);

void BM_Lookup(benchmark::State& state) {
  const KnotTable& t = builtin_table();
  const auto p = parse_poly("L^-2 + 3 + L^2 - M^2L^-2 - 3M^2 - M^2L^2 + M^4");
  for (auto _ : state) benchmark::DoNotOptimize(t.lookup(p));
}
BENCHMARK(BM_Lookup);

}  // namespace
