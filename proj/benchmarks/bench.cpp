#include <benchmark/benchmark.h>

#include "tmet/convergence.hpp"
#include "tmet/generators.hpp"

namespace {

using namespace tmet;

void bm_covering_number(benchmark::State& state) {
  const auto X = gen_random(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(covering_number(X, 0.25));
}
BENCHMARK(bm_covering_number)->Arg(32)->Arg(128)->Arg(512);

void bm_build_hierarchy(benchmark::State& state) {
  auto X = as_ptr(gen_random(static_cast<int>(state.range(0)), 7));
  SpacePtr one[] = {X};
  const auto plan = plan_for_family(one, stability_depth(one));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_hierarchy(X, plan));
}
BENCHMARK(bm_build_hierarchy)->Arg(32)->Arg(128)->Arg(512);

void bm_timed_cloud(benchmark::State& state) {
  auto X = as_ptr(gen_random(static_cast<int>(state.range(0)), 7));
  SpacePtr one[] = {X};
  const auto H = build_hierarchy(X, plan_for_family(one, stability_depth(one)));
  const auto frame = EmbeddingFrame::canonical(H);
  for (auto _ : state)
    for (int x = 0; x < X->size(); ++x)
      benchmark::DoNotOptimize(timed_frechet(frame, x));
}
BENCHMARK(bm_timed_cloud)->Arg(32)->Arg(128);

void bm_hausdorff_sup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto fam = embed_family({as_ptr(gen_random(n, 7)), as_ptr(gen_random(n, 8))});
  const auto A = fam.cloud(1), B = fam.cloud(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(hausdorff_sup(A, B));
}
BENCHMARK(bm_hausdorff_sup)->Arg(32)->Arg(128);

void bm_synthesize_limit(benchmark::State& state) {
  FamilySpec spec;
  spec.generator = "cycle";
  spec.n = static_cast<int>(state.range(0));
  spec.members = 16;
  spec.law = ScaleLaw::shrinking;
  const auto fam = embed_family(gen_family(spec));
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize_limit(fam));
}
BENCHMARK(bm_synthesize_limit)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
