// Microbenchmarks for the hot paths: closed evaluation (the tree-automaton
// runs), normalization of open designs, proof search, and member enumeration.

#include <benchmark/benchmark.h>

#include "automaton.hpp"
#include "ludics/behaviour.hpp"
#include "ludics/normalize.hpp"
#include "ludics/ops.hpp"
#include "ludics/parse.hpp"
#include "ludics/proofsys.hpp"

using namespace ludics;
using namespace testutil;

namespace {

TreePtr chain(int n) {
  TreePtr t = leaf('b');
  for (int i = 0; i < n; ++i) t = node('a', leaf('b'), t);
  return t;
}

void BM_AutomatonAccept(benchmark::State& state) {
  TreePtr t = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Engine eng;
    benchmark::DoNotOptimize(
        evaluate_closed(automaton_run(t, eng), eng, 1000000).verdict);
  }
}
BENCHMARK(BM_AutomatonAccept)->Arg(2)->Arg(8)->Arg(32);

void BM_AutomatonReject(benchmark::State& state) {
  TreePtr t = node('a', chain(static_cast<int>(state.range(0))), leaf('b'));
  for (auto _ : state) {
    Engine eng;
    benchmark::DoNotOptimize(
        evaluate_closed(automaton_run(t, eng), eng, 1000000).verdict);
  }
}
BENCHMARK(BM_AutomatonReject)->Arg(2)->Arg(8);

void BM_NormalForm(benchmark::State& state) {
  for (auto _ : state) {
    Engine eng;
    DesignPtr d = parse_design(
        "{ a(y) => /\\{ y | b< { b(t) => t | c } >, z | c } }"
        " | a< { b(t) => { c => daimon } | c } >",
        eng);
    benchmark::DoNotOptimize(normal_form(d, eng, 100000, 8));
  }
}
BENCHMARK(BM_NormalForm);

void BM_Fax(benchmark::State& state) {
  for (auto _ : state) {
    Engine eng;
    eng.sig.declare("a", 2);
    eng.sig.declare("b", 1);
    DesignPtr f = fax(eng, "x0");
    benchmark::DoNotOptimize(classify(f, eng));
  }
}
BENCHMARK(BM_Fax);

void BM_Prove(benchmark::State& state) {
  for (auto _ : state) {
    Engine eng;
    Sequent s = parse_sequent(
        "{ pi1(x) => x | down< { up(y) => y | * } > ; pi2(x) => x | * }"
        " |- with(down(up(one)), one)",
        eng);
    benchmark::DoNotOptimize(prove(s, eng, 100000).kind);
  }
}
BENCHMARK(BM_Prove);

void BM_EnumerateMembers(benchmark::State& state) {
  for (auto _ : state) {
    Engine eng;
    benchmark::DoNotOptimize(
        ethics_members(down(with_(one(), down(bot()))), eng,
                       static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateMembers)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
