#include <benchmark/benchmark.h>

#include "nonisog/galois.hpp"
#include "nonisog/gf2_module.hpp"
#include "nonisog/parser.hpp"

namespace {

const char* kGroups[] = {"S5", "C11", "C13", "C19", "C23"};
const int kDegrees[] = {5, 11, 13, 19, 23};

nonisog::HeartModule module_at(std::int64_t i) {
  const auto gens = nonisog::standard_generators(kGroups[i], kDegrees[i]);
  return nonisog::heart_module(kDegrees[i], gens);
}

void BM_SimpleSerial(benchmark::State& state) {
  const auto m = module_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonisog::is_simple_serial(m));
  state.SetLabel(kGroups[state.range(0)]);
}

void BM_SimpleParallel(benchmark::State& state) {
  const auto m = module_at(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonisog::is_simple(m));
  state.SetLabel(kGroups[state.range(0)]);
}

void BM_PrefilterSerial(benchmark::State& state) {
  const auto f = nonisog::parse_polynomial("x^5 - x - 1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonisog::cycle_type_prefilter_serial(f, static_cast<std::uint64_t>(state.range(0))));
  }
}

void BM_PrefilterParallel(benchmark::State& state) {
  const auto f = nonisog::parse_polynomial("x^5 - x - 1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonisog::cycle_type_prefilter(f, static_cast<std::uint64_t>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_SimpleSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimpleParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefilterSerial)->Arg(200)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrefilterParallel)->Arg(200)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
