// Serial reference kernels against their OpenMP counterparts.

#include "supersplit/arith.hpp"
#include "supersplit/family.hpp"
#include "supersplit/groups.hpp"
#include "supersplit/split.hpp"

#include <benchmark/benchmark.h>

using namespace supersplit;

namespace {

void BM_EnumerateSplits_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(split::serial::enumerate_splits(st.range(0), 12, 200));
}
void BM_EnumerateSplits_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(split::enumerate_splits(st.range(0), 12, 200));
}
BENCHMARK(BM_EnumerateSplits_Serial)->Arg(50)->Arg(200);
BENCHMARK(BM_EnumerateSplits_Parallel)->Arg(50)->Arg(200);

void BM_Admissible_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(family::serial::admissible_s(st.range(0)));
}
void BM_Admissible_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(family::admissible_s(st.range(0)));
}
BENCHMARK(BM_Admissible_Serial)->Arg(500)->Arg(100000);
BENCHMARK(BM_Admissible_Parallel)->Arg(500)->Arg(100000);

void BM_Sequence_Serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(family::serial::sequence(family::SequenceKind::A014957, st.range(0)));
}
void BM_Sequence_Parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(family::sequence(family::SequenceKind::A014957, st.range(0)));
}
BENCHMARK(BM_Sequence_Serial)->Arg(100000);
BENCHMARK(BM_Sequence_Parallel)->Arg(100000);

std::vector<family::Int> s_range(family::Int hi) {
  std::vector<family::Int> s;
  for (family::Int v = 1; v <= hi; ++v) s.push_back(v);
  return s;
}
void BM_SolveMany_Serial(benchmark::State& st) {
  const auto s = s_range(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(family::serial::solve_many(s));
}
void BM_SolveMany_Parallel(benchmark::State& st) {
  const auto s = s_range(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(family::solve_many(s));
}
BENCHMARK(BM_SolveMany_Serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveMany_Parallel)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FindFactor_Serial(benchmark::State& st) {
  const BigInt n = BigInt("1000000000039") * BigInt("1000000000061");
  for (auto _ : st) benchmark::DoNotOptimize(arith::serial::find_factor(n, {}));
}
void BM_FindFactor_Parallel(benchmark::State& st) {
  const BigInt n = BigInt("1000000000039") * BigInt("1000000000061");
  for (auto _ : st) benchmark::DoNotOptimize(arith::find_factor(n, {}));
}
BENCHMARK(BM_FindFactor_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindFactor_Parallel)->Unit(benchmark::kMillisecond);

void BM_CheckAxioms_Serial(benchmark::State& st) {
  const auto g = groups::realize(groups::make_presentation(groups::GroupTag::G4, 12, 12));
  for (auto _ : st) benchmark::DoNotOptimize(groups::serial::check_axioms(g));
}
void BM_CheckAxioms_Parallel(benchmark::State& st) {
  const auto g = groups::realize(groups::make_presentation(groups::GroupTag::G4, 12, 12));
  for (auto _ : st) benchmark::DoNotOptimize(groups::check_axioms(g));
}
BENCHMARK(BM_CheckAxioms_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAxioms_Parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
