#include <benchmark/benchmark.h>

#include "asai/induced_rep.hpp"
#include "asai/oracle.hpp"
#include "asai/whittaker.hpp"
#include "asai/zeta.hpp"

namespace {

using namespace asai;

void BM_ZetaTameSymbolic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta_tame(TameZetaContext{}).total);
}
BENCHMARK(BM_ZetaTameSymbolic)->Unit(benchmark::kMillisecond);

void BM_ClosedFormCheck(benchmark::State& state) {
  const TameZetaContext ctx;
  const RationalFunction total = zeta_tame(ctx).total;
  const RationalFunction closed = zeta_tame_closed_form(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(total == closed);
}
BENCHMARK(BM_ClosedFormCheck)->Unit(benchmark::kMillisecond);

void BM_GammaPsr(benchmark::State& state) {
  const AsaiRepData rep = symbolic_rep(static_cast<ShapeKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_psr(rep));
}
BENCHMARK(BM_GammaPsr)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_InducedRepOracle(benchmark::State& state) {
  const AsaiRepData rep = symbolic_rep(static_cast<ShapeKind>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(induced_rep_oracle(rep).L);
}
BENCHMARK(BM_InducedRepOracle)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_NumericOracle(benchmark::State& state) {
  OracleParams p;
  p.N = state.range(0);
  p.D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(truncated_zeta(p));
}
BENCHMARK(BM_NumericOracle)->Arg(15)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SphericalWhittaker(benchmark::State& state) {
  const SchwartzFunction2D phi = SchwartzFunction2D::unramified(5);
  const GroupWord g{WeilGenerator::a(power(Rational(5), state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(whittaker_eval(phi, {}, g));
}
BENCHMARK(BM_SphericalWhittaker)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
