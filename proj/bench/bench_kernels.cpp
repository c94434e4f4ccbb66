// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ordspace/ball.hpp"
#include "ordspace/checks.hpp"
#include "ordspace/space.hpp"

using namespace ordspace;

namespace {

const Group& f1() {
  static const Group g = Group::f1(2);
  return g;
}

const Ordering& s11() {
  static const Ordering o = make_smirnov(f1(), OrderParam::above(11));
  return o;
}

void BM_BallSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::build_ball(Group::gn(2), static_cast<int>(st.range(0))).size());
}
void BM_BallParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_ball(Group::gn(2), static_cast<int>(st.range(0))).size());
}
BENCHMARK(BM_BallSerial)->Arg(5)->Arg(6);
BENCHMARK(BM_BallParallel)->Arg(5)->Arg(6);

void BM_ConeSerial(benchmark::State& st) {
  Ball b = build_ball(f1(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::check_cone_axioms(b, s11().sign_fn()).checked);
}
void BM_ConeParallel(benchmark::State& st) {
  Ball b = build_ball(f1(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(check_cone_axioms(b, s11().sign_fn()).checked);
}
BENCHMARK(BM_ConeSerial)->Arg(4)->Arg(5);
BENCHMARK(BM_ConeParallel)->Arg(4)->Arg(5);

void BM_ConradianSerial(benchmark::State& st) {
  Ball b = build_ball(f1(), 4);
  for (auto _ : st) benchmark::DoNotOptimize(serial::check_conradian(b, s11().sign_fn()).checked);
}
void BM_ConradianParallel(benchmark::State& st) {
  Ball b = build_ball(f1(), 4);
  for (auto _ : st) benchmark::DoNotOptimize(check_conradian(b, s11().sign_fn()).checked);
}
BENCHMARK(BM_ConradianSerial);
BENCHMARK(BM_ConradianParallel);

void BM_SweepSerial(benchmark::State& st) {
  Ball b = build_ball(f1(), 3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::probe_sweep(s11(), b, 2).probes);
}
void BM_SweepParallel(benchmark::State& st) {
  Ball b = build_ball(f1(), 3);
  for (auto _ : st) benchmark::DoNotOptimize(probe_sweep(s11(), b, 2).probes);
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
