#include <benchmark/benchmark.h>

#include "kshadow/affine_weyl.hpp"
#include "kshadow/bimodule.hpp"
#include "kshadow/characters.hpp"
#include "kshadow/hessenberg.hpp"

using namespace kshadow;

namespace {

RootDatum datum(const benchmark::State& s) {
  static const std::pair<char, int> types[] = {{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'F', 4}};
  const auto [f, n] = types[s.range(0)];
  return RootDatum(f, n);
}

void BM_WeylEnumeration(benchmark::State& state) {
  const auto rd = datum(state);
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup(rd).order());
  state.SetLabel(rd.label());
}
BENCHMARK(BM_WeylEnumeration)->DenseRange(0, 5);

void BM_WeylCharacter(benchmark::State& state) {
  const WeylGroup w(RootDatum('B', 2));
  const LatticeVector mu{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(w, mu).size());
}
BENCHMARK(BM_WeylCharacter)->Arg(1)->Arg(3)->Arg(6);

void BM_Freudenthal(benchmark::State& state) {
  const WeylGroup w(RootDatum('G', 2));
  const LatticeVector mu{4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_multiplicity(w, mu, w.root_datum().zero()));
}
BENCHMARK(BM_Freudenthal);

void BM_HessenbergWindow(benchmark::State& state) {
  const WeylGroup w(RootDatum('B', 3));
  const auto window = lattice_window(w.root_datum(), 1);
  for (auto _ : state)
    for (const auto& l : window) benchmark::DoNotOptimize(hessenberg_dim(w, l));
}
BENCHMARK(BM_HessenbergWindow);

void BM_SeparationWindow(benchmark::State& state) {
  const RootDatum rd('A', 2);
  const auto window = lattice_window(rd, 3);
  for (auto _ : state)
    for (const auto& m : window) benchmark::DoNotOptimize(check_no_separating_affine_root(rd, LatticeVector{1, 1}, m).holds);
}
BENCHMARK(BM_SeparationWindow);

void BM_Verify(benchmark::State& state) {
  const auto rd = datum(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cc_bimodule(rd).iso_found);
  state.SetLabel(rd.label());
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
