#include <benchmark/benchmark.h>

#include <random>

#include "knotid/geometry.hpp"

using namespace knotid;

namespace {

Polyline3D random_polygon(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> v;
  for (int i = 0; i < n; ++i) v.push_back({u(rng), u(rng), u(rng)});
  return Polyline3D(v);
}

void BM_ComputeEgc(benchmark::State& state) {
  const std::vector<Polyline3D> comps{random_polygon(static_cast<int>(state.range(0)), 17)};
  int crossings = 0;
  for (auto _ : state) {
    const Diagram d = compute_egc(comps);
    crossings = d.crossing_count();
    benchmark::DoNotOptimize(crossings);
  }
  state.counters["crossings"] = crossings;
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeEgc)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_ParseCoordinates(benchmark::State& state) {
  std::string text;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < state.range(0); ++i) {
    text += std::to_string(u(rng)) + " " + std::to_string(u(rng)) + " " + std::to_string(u(rng)) + "\n";
  }
  for (auto _ : state) benchmark::DoNotOptimize(parse_coordinates(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseCoordinates)->Arg(1000)->Arg(10000);

}  // namespace
