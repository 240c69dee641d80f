#include <benchmark/benchmark.h>

#include "dihedral/corpus.hpp"
#include "dihedral/cover_complex.hpp"
#include "dihedral/dihedral.hpp"
#include "dihedral/signatures.hpp"
#include "dihedral/xi.hpp"

using namespace dih;

namespace {

PermRep first_rep(const KnotDiagram& d, long p) {
  for (auto& c : fox_colorings(d, p))
    if (c.nontrivial()) return coloring_to_rep(c);
  return trivial_rep(d, 1);
}

void BM_FoxColorings(benchmark::State& state) {
  auto d = build_K1(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fox_colorings(d, 3));
  state.counters["crossings"] = double(d.crossings.size());
}
BENCHMARK(BM_FoxColorings)->Arg(1)->Arg(4)->Arg(7);

void BM_CoverHomology(benchmark::State& state) {
  auto& d = corpus_entry("K1(3,2)").diagram;
  auto rep = first_rep(d, 3);
  for (auto _ : state) {
    auto cc = lift(d, rep);
    benchmark::DoNotOptimize(cover_homology(cc, 1));
  }
}
BENCHMARK(BM_CoverHomology)->Unit(benchmark::kMillisecond);

void BM_BranchLinking(benchmark::State& state) {
  auto& d = corpus_entry("K1(3,2)").diagram;
  auto cc = lift(d, first_rep(d, 3));
  for (auto _ : state) benchmark::DoNotOptimize(linking(cc, {{0, 1}}, {{1, 1}}));
}
BENCHMARK(BM_BranchLinking)->Unit(benchmark::kMillisecond);

void BM_TristramLevine(benchmark::State& state) {
  auto L = seifert_matrix_C(K1_spec(3, 2)).L;
  for (auto _ : state) benchmark::DoNotOptimize(tl_signatures(L, state.range(0), SingularPolicy::Degenerate));
}
BENCHMARK(BM_TristramLevine)->Arg(3)->Arg(7)->Arg(11);

void BM_Xi(benchmark::State& state) {
  XiInput in;
  in.e = K1_spec(3, 2);
  in.beta = {1, 0, 1, 1, -1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(xi_report(in));
}
BENCHMARK(BM_Xi)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
