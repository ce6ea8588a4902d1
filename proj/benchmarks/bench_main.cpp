#include "traverse/analysis.hpp"
#include "traverse/bpoly.hpp"
#include "traverse/homology.hpp"
#include "traverse/local_model.hpp"
#include "traverse/omega.hpp"
#include "traverse/parallel.hpp"
#include "traverse/real_roots.hpp"
#include "traverse/scene_io.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace traverse;

namespace {

Scene fixture(const std::string& name) { return load_scene(std::string(TRAVERSE_FIXTURE_DIR) + "/" + name); }

void BM_IsolateRoots(benchmark::State& state) {
  std::vector<Rational> roots;
  for (int i = 0; i < state.range(0); ++i) roots.push_back(make_rational(i * i - 7 * i, 3 + i));
  const UPoly p = UPoly::from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(16);

void BM_Resultant(benchmark::State& state) {
  const BPoly f = BPoly::circle(1, 2, 3) * BPoly::circle(-1, 0, 2);
  const BPoly g = f.partial_second();
  for (auto _ : state) benchmark::DoNotOptimize(resultant_second(f, g));
}
BENCHMARK(BM_Resultant);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  IntMatrix m(n, n);
  for (auto& e : m.entries) e = static_cast<long>(rng() % 7) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(smith_ranks(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(16)->Arg(48);

void BM_EnumeratePatterns(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumeratePatterns)->Arg(3)->Arg(6);

void BM_Oracle1221(benchmark::State& state) {
  const Pattern w({1, 2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(w, 200, Rational(1, 1000), 0));
}
BENCHMARK(BM_Oracle1221)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state, const std::string& name) {
  set_thread_count(static_cast<unsigned>(state.range(0)));
  const Scene scene = fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(scene));
  set_thread_count(0);
}
BENCHMARK_CAPTURE(BM_Analyze, disk_q4, std::string("disk_q4.json"))->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, annulus3, std::string("annulus3.json"))->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Analyze, fig1, std::string("fig1.json"))->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
