// Serial vs OpenMP for the three parallel kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "koszuldual/corpus.hpp"
#include "koszuldual/matrix.hpp"
#include "koszuldual/reflections.hpp"
#include "koszuldual/resolution.hpp"

using namespace koszuldual;

namespace {

ExactMatrix random_matrix(Field f, int n) {
  std::mt19937 rng(5);
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<long long>(rng() % 19) - 9;
  return ExactMatrix::from_ints(f, rows);
}

void BM_rref_serial(benchmark::State& st) {
  auto m = random_matrix(Field::rationals(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_parallel(benchmark::State& st) {
  auto m = random_matrix(Field::rationals(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rref_parallel(m));
}

void resolve_corpus(benchmark::State& st, bool parallel) {
  std::vector<QuadraticPresentation> algebras;
  for (const auto& e : bundled_corpus()) algebras.push_back(corpus_example(e.name));
  ResolutionOptions opt;
  opt.cutoff = 8;
  opt.parallel = parallel;
  for (auto _ : st)
    for (const auto& a : algebras) benchmark::DoNotOptimize(minimal_resolution(a, {}, opt));
}

void BM_resolution_serial(benchmark::State& st) { resolve_corpus(st, false); }
void BM_resolution_parallel(benchmark::State& st) { resolve_corpus(st, true); }

// E7-shaped tree: a long orbit
Quiver tree() {
  return Quiver({"1", "2", "3", "4", "5", "6", "7"},
                {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}, {"d", "4", "5"}, {"e", "5", "6"}, {"f", "3", "7"}});
}

void BM_orbit_serial(benchmark::State& st) {
  auto q = tree();
  for (auto _ : st) benchmark::DoNotOptimize(reflection_orbit(q, kDefaultMaxDepth, false));
}

void BM_orbit_parallel(benchmark::State& st) {
  auto q = tree();
  for (auto _ : st) benchmark::DoNotOptimize(reflection_orbit(q, kDefaultMaxDepth, true));
}

}  // namespace

BENCHMARK(BM_rref_serial)->Arg(16)->Arg(48);
BENCHMARK(BM_rref_parallel)->Arg(16)->Arg(48);
BENCHMARK(BM_resolution_serial);
BENCHMARK(BM_resolution_parallel);
BENCHMARK(BM_orbit_serial);
BENCHMARK(BM_orbit_parallel);

BENCHMARK_MAIN();
