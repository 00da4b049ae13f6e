#include <benchmark/benchmark.h>

#include "ineqforge/catalog.hpp"
#include "ineqforge/falsifier.hpp"
#include "ineqforge/sampling.hpp"

namespace {

using namespace ineqforge;

Field field_arg(const benchmark::State& st) { return st.range(1) ? Field::Complex : Field::Real; }

void BM_Inner(benchmark::State& st) {
  auto rng = Rng::for_trial(0, "bench", 0);
  const auto s = sample_random_space(field_arg(st), static_cast<int>(st.range(0)), rng);
  const auto u = sample_normal_vector(s, rng);
  const auto v = sample_normal_vector(s, rng);
  for (auto _ : st) benchmark::DoNotOptimize(inner(s, u, v));
}
BENCHMARK(BM_Inner)->ArgsProduct({{2, 8, 32}, {0, 1}});

void BM_GramSchmidt(benchmark::State& st) {
  auto rng = Rng::for_trial(0, "bench", 1);
  const int dim = static_cast<int>(st.range(0));
  const auto s = sample_random_space(field_arg(st), dim, rng);
  std::vector<Vector<double>> raw;
  for (int k = 0; k < dim; ++k) raw.push_back(sample_normal_vector(s, rng));
  for (auto _ : st) benchmark::DoNotOptimize(gram_schmidt(s, std::span<const Vector<double>>(raw)));
}
BENCHMARK(BM_GramSchmidt)->ArgsProduct({{2, 8, 32}, {0, 1}});

void BM_EvalGeneralized(benchmark::State& st) {
  auto rng = Rng::for_trial(0, "bench", 2);
  const int dim = static_cast<int>(st.range(0));
  const auto s = sample_random_space(field_arg(st), dim, rng);
  const auto e = sample_family(s, dim / 2, rng);
  const auto f = sample_family(s, dim / 2, rng);
  const auto x = sample_nonzero_vector(s, rng);
  const auto y = sample_nonzero_vector(s, rng);
  for (auto _ : st) benchmark::DoNotOptimize(eval_generalized(s, e, f, x, y));
}
BENCHMARK(BM_EvalGeneralized)->ArgsProduct({{2, 8, 32}, {0, 1}});

void BM_Falsify(benchmark::State& st) {
  SearchConfig cfg;
  cfg.trials = static_cast<std::uint64_t>(st.range(0));
  cfg.dim_lo = 1;
  cfg.dim_hi = 8;
  for (auto _ : st) benchmark::DoNotOptimize(falsify(names::kChain, cfg, {1, false}));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Falsify)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
