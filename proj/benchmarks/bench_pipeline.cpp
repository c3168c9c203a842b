#include <benchmark/benchmark.h>

#include "tpsurf/cases.hpp"
#include "tpsurf/gen.hpp"
#include "tpsurf/golden.hpp"
#include "tpsurf/linalg.hpp"
#include "tpsurf/oracle.hpp"
#include "tpsurf/pipeline.hpp"
#include "tpsurf/strand.hpp"

using namespace tpsurf;

namespace {

SurfaceInput instance(int dimv) {
  GenSpec s{2, 5, 3, dimv, {}};
  if (dimv == 3) s.mu = {1};
  if (dimv == 4) s.mu = {1, 1};
  s.seed = 11;
  return generate(s);
}

void BM_AnalyzeCase(benchmark::State& st) {
  const SurfaceInput in = instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_case(analyze(in), in));
}
BENCHMARK(BM_AnalyzeCase)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_StrandEvalDet(benchmark::State& st) {
  const SurfaceInput in = golden_example().input;
  const StrandMatrix m = build_d1_strand(run_case(analyze(in), in));
  std::mt19937_64 rng(3);
  for (auto _ : st) {
    const XPoint x{Fp::random(rng), Fp::random(rng), Fp::random(rng), Fp::random(rng)};
    benchmark::DoNotOptimize(eval_det(m, x));
  }
}
BENCHMARK(BM_StrandEvalDet)->Unit(benchmark::kMicrosecond);

void BM_ReconstructDet(benchmark::State& st) {
  const SurfaceInput in = golden_example().input;
  const StrandMatrix m = build_d1_strand(run_case(analyze(in), in));
  for (auto _ : st) benchmark::DoNotOptimize(reconstruct_det(m));
}
BENCHMARK(BM_ReconstructDet)->Unit(benchmark::kMillisecond);

void BM_Elimination(benchmark::State& st) {
  const SurfaceInput in = golden_example().input;
  for (auto _ : st) benchmark::DoNotOptimize(implicit_by_elimination(in));
}
BENCHMARK(BM_Elimination)->Unit(benchmark::kMillisecond);

void BM_Implicitize(benchmark::State& st) {
  const SurfaceInput in = golden_example().input;
  PipelineOptions opt;
  opt.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(implicitize(in, opt));
}
BENCHMARK(BM_Implicitize)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DetField(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(5);
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Fp::random(rng);
  for (auto _ : st) benchmark::DoNotOptimize(det_field(m));
}
BENCHMARK(BM_DetField)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
