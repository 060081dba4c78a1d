#include <benchmark/benchmark.h>

#include "iqa/iqa.hpp"
#include "support/random_cases.hpp"

namespace {

using namespace iqa;

CaseFile make_case(std::int64_t devices, double presence, bool weighted) {
  testing::Rng rng(42);
  CaseFile c = testing::random_case(rng, {.min_devices = static_cast<int>(devices),
                                          .max_devices = static_cast<int>(devices),
                                          .presence = presence,
                                          .layered = 0.5});
  if (weighted) {
    c.set_weights(Weights({{FactorId::DTC, Rational(3, 2)}, {FactorId::OS, Rational(1, 3)},
                           {FactorId::CM, Rational(7, 4)}}));
  }
  return c;
}

void BM_CaseIqa(benchmark::State& state) {
  const CaseFile c = make_case(state.range(0), 0.8, state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(case_iqa(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CaseIqa)->ArgsProduct({{6, 20, 100}, {0, 1}});

void BM_Categories(benchmark::State& state) {
  const CaseFile c = make_case(state.range(0), 1.0, false);
  for (auto _ : state) {
    for (InfoStatus s : kAllInfoStatuses) benchmark::DoNotOptimize(category_iqa(c, s));
  }
}
BENCHMARK(BM_Categories)->Arg(6)->Arg(100);

void BM_Layers(benchmark::State& state) {
  const CaseFile c = make_case(state.range(0), 0.8, false);
  for (auto _ : state) {
    for (Layer l : kAllLayers) benchmark::DoNotOptimize(layer_iqa(c, l));
  }
}
BENCHMARK(BM_Layers)->Arg(6)->Arg(100);

void BM_BuildReport(benchmark::State& state) {
  const CaseFile c = make_case(state.range(0), 0.8, false);
  for (auto _ : state) benchmark::DoNotOptimize(render_report(build_report(c)));
}
BENCHMARK(BM_BuildReport)->Arg(6)->Arg(50);

void BM_ParseSerialize(benchmark::State& state) {
  const std::string text = serialize_case(make_case(state.range(0), 0.8, true));
  for (auto _ : state) benchmark::DoNotOptimize(serialize_case(parse_case(text)));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseSerialize)->Arg(6)->Arg(50);

void BM_RenderRadar(benchmark::State& state) {
  const RadarSpec spec = case_overlay(make_case(state.range(0), 1.0, false));
  for (auto _ : state) benchmark::DoNotOptimize(render_radar(spec));
}
BENCHMARK(BM_RenderRadar)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
