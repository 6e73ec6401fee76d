#include <benchmark/benchmark.h>

#include "goedel/constraint.hpp"
#include "goedel/eval.hpp"
#include "goedel/parser.hpp"
#include "goedel/prenex.hpp"
#include "goedel/prover.hpp"
#include "goedel/valueset.hpp"

using namespace goedel;

namespace {

Interpretation fixed_model() {
  Interpretation i;
  i.domain_size = 3;
  i.preds["P"] = PredTable{1, {Value(1, 5), Value(1, 2), Value(9, 10)}};
  i.preds["Q"] = PredTable{1, {Value(0), Value(2, 3), Value(1)}};
  return i;
}

void BM_EvalQuantified(benchmark::State& state) {
  auto f = parse_formula("all x ex y ((P(x) -> Q(y)) & (Q(y) -> P(x) | Q(x)))");
  auto i = fixed_model();
  for (auto _ : state) benchmark::DoNotOptimize(eval(i, f));
}
BENCHMARK(BM_EvalQuantified);

void BM_BruteForceChain(benchmark::State& state) {
  auto f = parse_formula("(A1 -> A2) | (A2 -> A3) | (A3 -> A4)");
  BruteForceOptions opts;
  opts.max_domain = 1;
  auto values = vm_values(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_validity(f, values, opts));
}
BENCHMARK(BM_BruteForceChain)->Arg(3)->Arg(4)->Arg(5);

void BM_ProveLinearity(benchmark::State& state) {
  auto pf = to_prenex(parse_formula("all x all y ((P(x)->P(y))|(P(y)->P(x)))"),
                      PrenexRegime::GUp);
  auto unit = SymbolicValueSet::unit_interval();
  for (auto _ : state) benchmark::DoNotOptimize(prove_prenex(pf, unit, Budget{}));
}
BENCHMARK(BM_ProveLinearity);

void BM_ConstraintLayer(benchmark::State& state) {
  int levels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<Constraint> cur{Constraint::root()};
    for (int a = 1; a <= levels; ++a) {
      std::vector<Constraint> next;
      for (const auto& c : cur)
        for (auto& e : c.extensions(a)) next.push_back(std::move(e));
      cur = std::move(next);
    }
    benchmark::DoNotOptimize(cur.size());
  }
}
BENCHMARK(BM_ConstraintLayer)->Arg(3)->Arg(4);

void BM_CantorMembership(benchmark::State& state) {
  Value x(1, 4);
  Value y(5, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(in_standard_cantor(x));
    benchmark::DoNotOptimize(in_standard_cantor(y));
  }
}
BENCHMARK(BM_CantorMembership);

void BM_DenseWitness(benchmark::State& state) {
  auto cantor = SymbolicValueSet::cantor();
  for (auto _ : state)
    benchmark::DoNotOptimize(dense_suborder_witness(cantor, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DenseWitness)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
