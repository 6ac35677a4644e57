#include <benchmark/benchmark.h>

#include <cmath>

#include "pqosc/coherent.hpp"
#include "pqosc/lattice.hpp"
#include "pqosc/qsym.hpp"
#include "pqosc/relations.hpp"

using namespace pqosc;

namespace {

ModeConfig bench_config(int modes, int cutoff) {
  return ModeConfig::uniform(modes, cutoff, DeformationParams::from_text("7/10", M_PI / 7));
}

void BM_OscillatorSuiteFloat(benchmark::State& state) {
  ModeConfig config = bench_config(3, 5);
  for (auto _ : state) {
    auto reports = run_suite(SuiteId::oscillator, config, false, 1e-10);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_OscillatorSuiteFloat);

void BM_OscillatorSuiteExact(benchmark::State& state) {
  ModeConfig config = bench_config(3, 5);
  for (auto _ : state) {
    auto reports = run_suite(SuiteId::oscillator, config, true, 0.0);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_OscillatorSuiteExact);

void BM_GlSuiteExactSector(benchmark::State& state) {
  ModeConfig config = bench_config(3, 6);
  auto rels = suite_relations(SuiteId::gl, config);
  for (auto _ : state) {
    for (const RelationExpr& rel : rels) {
      auto r = check_relation(rel, config, true, 0.0, 4);
      benchmark::DoNotOptimize(r);
    }
  }
}
BENCHMARK(BM_GlSuiteExactSector);

void BM_Psi01(benchmark::State& state) {
  for (auto _ : state) {
    double v = bilateral_psi01(-2.0, 0.5, -8.0, 1e-15);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Psi01);

void BM_NormalOrder(benchmark::State& state) {
  std::vector<ZSymbol> word{{1, false}, {3, true}, {2, false}, {1, true}, {3, false}, {2, true}};
  for (auto _ : state) {
    OrderedZ out = normal_order(word, 3);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_NormalOrder);

void BM_CoherentBuild(benchmark::State& state) {
  ModeConfig config = bench_config(3, static_cast<int>(state.range(0)));
  std::vector<double> r{0.4, 0.5, 0.3};
  for (auto _ : state) {
    auto s = build_coherent_state(config, r, CoherentMethod::series,
                                  static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CoherentBuild)->Arg(6)->Arg(12);

void BM_QsymBuild(benchmark::State& state) {
  auto params = DeformationParams::from_text("7/10", M_PI / 7);
  QWord word{{2, 1, 3, 1, 2, 3, 1}};
  for (auto _ : state) {
    QSymState s = build_qsym_state(word, params);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_QsymBuild);

void BM_PositiveFamilyBuild(benchmark::State& state) {
  auto params = DeformationParams::from_text("1/2", 0.0);
  std::vector<Rational> lambdas{parse_rational("1/2"), parse_rational("1"), parse_rational("2")};
  PositiveEnergyConfig config =
      PositiveEnergyConfig::make(params, lambdas, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PositiveFamily family = build_positive_coherent(config);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(BM_PositiveFamilyBuild)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
