#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "phg/arcs.hpp"
#include "phg/bounds.hpp"
#include "phg/constructions.hpp"
#include "phg/search.hpp"

using namespace phg;

namespace {

const char* const kRings[] = {"Z4", "Z9", "G4", "Z25"};

const Plane& plane(const char* name) {
  static std::map<std::string, Plane> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_plane(ring_by_name(name))).first;
  return it->second;
}

void BM_BuildPlane(benchmark::State& state) {
  const Ring R = ring_by_name(kRings[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_plane(R));
  state.SetLabel(R.name());
}
BENCHMARK(BM_BuildPlane)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyFullPlane(benchmark::State& state) {
  const Plane& P = plane(kRings[state.range(0)]);
  const Multiset m(P.num_points(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify(P, m));
  state.SetLabel(P.ring().name());
}
BENCHMARK(BM_VerifyFullPlane)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_MqnAllCells(benchmark::State& state) {
  for (auto _ : state)
    for (int q = 2; q <= 5; ++q)
      for (int n = 2; n <= q * q + q; ++n) benchmark::DoNotOptimize(M_qn(q, n));
}
BENCHMARK(BM_MqnAllCells);

void BM_EllOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ell_oracle_row(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EllOracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ConstructQ4N8(benchmark::State& state) {
  const Plane& P = plane("G4");
  for (auto _ : state) benchmark::DoNotOptimize(construct(P, ConstructionId::Q4N8));
}
BENCHMARK(BM_ConstructQ4N8)->Unit(benchmark::kMillisecond);

void BM_HeuristicZ9N3(benchmark::State& state) {
  const Plane& P = plane("Z9");
  SearchConfig cfg;
  cfg.n = 3;
  cfg.target_k = 19;
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_search(P, cfg));
}
BENCHMARK(BM_HeuristicZ9N3)->Unit(benchmark::kMillisecond);

void BM_OrbitSearchZ25(benchmark::State& state) {
  const Plane& P = plane("Z25");
  const OrbitProblem prob = orbit_problem(P, {singer_collineation(P)});
  SearchConfig cfg;
  cfg.n = 13;
  cfg.target_k = 310;
  for (auto _ : state) benchmark::DoNotOptimize(orbit_search(P, prob, cfg));
}
BENCHMARK(BM_OrbitSearchZ25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
