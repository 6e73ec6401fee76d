#include <doctest.h>

#include "generators.hpp"
#include "goedel/errors.hpp"
#include "goedel/eval.hpp"
#include "goedel/parser.hpp"

using namespace goedel;

namespace {

Interpretation propositional(std::initializer_list<std::pair<const char*, Value>> atoms) {
  Interpretation i;
  i.domain_size = 1;
  for (const auto& [name, v] : atoms) i.preds[name] = PredTable{0, {v}};
  return i;
}

}  // namespace

TEST_CASE("evaluation follows the truth functions") {
  auto i = propositional({{"A", Value(3, 10)}, {"B", Value(7, 10)}});
  CHECK(eval(i, parse_formula("(A -> B) | (B -> A)")) == 1);
  CHECK(eval(i, parse_formula("A & B")) == Value(3, 10));
  CHECK(eval(i, parse_formula("B -> A")) == Value(3, 10));

  auto half = propositional({{"A", Value(1, 2)}});
  CHECK(eval(half, parse_formula("~A")) == 0);
  CHECK(eval(half, parse_formula("~~A")) == 1);

  Interpretation two;
  two.domain_size = 2;
  two.preds["P"] = PredTable{1, {Value(1, 5), Value(9, 10)}};
  CHECK(eval(two, parse_formula("all x P(x)")) == Value(1, 5));
  CHECK(eval(two, parse_formula("ex x P(x)")) == Value(9, 10));
}

TEST_CASE("evaluation reports unbound symbols") {
  Interpretation i;
  i.domain_size = 1;
  CHECK_THROWS_AS(eval(i, parse_formula("P(c)")), EvalError);
}

TEST_CASE("brute force finds the canonical first countermodels") {
  BruteForceOptions opts;
  opts.max_domain = 2;

  CHECK_FALSE(brute_force_validity(parse_formula("(A -> B) | (B -> A)"),
                                   vm_values(3), opts));

  auto chain = parse_formula("(A1 -> A2) | (A2 -> A3)");
  auto cm = brute_force_validity(chain, vm_values(3), opts);
  REQUIRE(cm);
  CHECK(cm->interpretation.preds.at("A1").table[0] == 1);
  CHECK(cm->interpretation.preds.at("A2").table[0] == Value(1, 2));
  CHECK(cm->interpretation.preds.at("A3").table[0] == 0);
  CHECK(cm->value == Value(1, 2));

  auto dne = parse_formula("~~A -> A");
  auto cm2 = brute_force_validity(dne, vm_values(3), opts);
  REQUIRE(cm2);
  CHECK(cm2->interpretation.preds.at("A").table[0] == Value(1, 2));
  CHECK(cm2->value == Value(1, 2));
}

TEST_CASE("brute force is deterministic across worker counts") {
  BruteForceOptions solo;
  solo.max_domain = 2;
  BruteForceOptions pool = solo;
  pool.jobs = 4;
  auto f = parse_formula("all x (P(x) -> Q(x)) -> (all x P(x) -> all x Q(x))");
  auto g = parse_formula("(all x P(x) -> all x Q(x)) -> all x (P(x) -> Q(x))");
  for (const auto& formula : {f, g}) {
    auto a = brute_force_validity(formula, vm_values(3), solo);
    auto b = brute_force_validity(formula, vm_values(3), pool);
    CHECK(static_cast<bool>(a) == static_cast<bool>(b));
    if (a && b)
      CHECK(a->interpretation.to_json_string() == b->interpretation.to_json_string());
  }
}

TEST_CASE("the brute-force guard rejects oversized spaces") {
  BruteForceOptions opts;
  opts.max_domain = 3;
  opts.guard = 1000;
  CHECK_THROWS_AS(
      brute_force_validity(parse_formula("ex x ex y (Q(x,y) -> Q(y,x))"),
                           vm_values(4), opts),
      GuardExceededError);
}

TEST_CASE("collapse keeps low values and lifts high ones") {
  Interpretation two;
  two.domain_size = 2;
  two.preds["P"] = PredTable{1, {Value(3, 10), Value(8, 10)}};
  auto collapsed = collapse_above(two, Value(1, 2));
  CHECK(collapsed.preds.at("P").table[0] == Value(3, 10));
  CHECK(collapsed.preds.at("P").table[1] == 1);
  CHECK_THROWS_AS(collapse_above(two, Value(1)), EvalError);

  // A forall-free formula above the cut collapses to 1.
  Interpretation i = propositional({{"A", Value(8, 10)}});
  auto f = parse_formula("A");
  CHECK(eval(i, f) == Value(8, 10));
  CHECK(eval(collapse_above(i, Value(1, 2)), f) == 1);

  // With a universal quantifier the value may stay put: case (6).
  Interpretation q;
  q.domain_size = 2;
  q.preds["P"] = PredTable{1, {Value(1, 2), Value(1)}};
  auto all = parse_formula("all x P(x)");
  CHECK(eval(q, all) == Value(1, 2));
  CHECK(eval(collapse_above(q, Value(1, 2)), all) == Value(1, 2));
}

TEST_CASE("the I_v collapse lemma holds on random formulas") {
  testgen::Rng rng(2024);
  int with_forall = 0;
  for (int round = 0; round < 300; ++round) {
    auto f = testgen::random_closed(rng, 3);
    auto i = testgen::random_interpretation(rng, f, rng.uniform(1, 3));
    Value a = eval(i, f);
    Value v = rng.chance(0.5) && a < 1 ? a : rng.rational_interior();
    if (v >= 1) v = Value(1, 2);
    auto iv = collapse_above(i, v);
    Value b = eval(iv, f);

    CHECK(b >= a);  // monotone in every case
    if (!f->has_forall()) {
      if (a > v)
        CHECK(b == 1);
      else
        CHECK(b == a);
    } else {
      ++with_forall;
      if (a > v) CHECK(b == 1);
      if (a < v) CHECK(b == a);
      if (a == v) CHECK((b == v || b == 1));
    }
  }
  CHECK(with_forall > 30);
}

TEST_CASE("order invariance under monotone endpoint-fixing injections") {
  auto f = parse_formula("(A -> B) | C");
  Interpretation i =
      propositional({{"A", Value(1, 2)}, {"B", Value(1, 4)}, {"C", Value(3, 4)}});
  // Squaring on the atom values.
  std::vector<std::pair<Value, Value>> squares;
  for (const auto& v : {Value(1, 2), Value(1, 4), Value(3, 4)})
    squares.emplace_back(v, v * v);
  CHECK(check_order_invariance(f, i, squares));

  // Swapping two values' order is rejected as a precondition.
  std::vector<std::pair<Value, Value>> swapped = {
      {Value(1, 4), Value(1, 2)}, {Value(1, 2), Value(1, 4)}, {Value(3, 4), Value(3, 4)}};
  CHECK_THROWS_AS(check_order_invariance(f, i, swapped), EvalError);

  // Not fixing 1 is rejected.
  Interpretation j = propositional({{"A", Value(1)}, {"B", Value(1, 2)}, {"C", Value(0)}});
  std::vector<std::pair<Value, Value>> unfixed = {
      {Value(0), Value(0)}, {Value(1, 2), Value(2, 3)}, {Value(1), Value(9, 10)}};
  CHECK_THROWS_AS(check_order_invariance(f, j, unfixed), EvalError);
}

TEST_CASE("structural truth-function identities hold under sampling") {
  testgen::Rng rng(99);
  for (int round = 0; round < 200; ++round) {
    auto a = testgen::random_qf(rng, 3, 3);
    auto b = testgen::random_qf(rng, 3, 3);
    Interpretation i;
    i.domain_size = 1;
    for (int k = 1; k <= 3; ++k)
      i.preds["A" + std::to_string(k)] = PredTable{0, {rng.rational()}};
    Value va = eval(i, a), vb = eval(i, b);
    CHECK(eval(i, Formula::conj(a, b)) == std::min(va, vb));
    CHECK(eval(i, Formula::disj(a, b)) == std::max(va, vb));
    Value vi = eval(i, Formula::implies(a, b));
    CHECK((vi == 1 || vi == vb));
  }
}

TEST_CASE("interpretations round-trip through JSON") {
  Interpretation i;
  i.domain_size = 2;
  i.funcs["c"] = FuncTable{0, {1}};
  i.funcs["f"] = FuncTable{1, {1, 0}};
  i.preds["P"] = PredTable{1, {Value(1, 2), Value(1)}};
  i.assignment["x"] = 1;
  auto text = i.to_json_string(2);
  auto back = Interpretation::from_json_string(text);
  CHECK(back.domain_size == 2);
  CHECK(back.funcs.at("f").table == std::vector<int>{1, 0});
  CHECK(back.preds.at("P").table[0] == Value(1, 2));
  CHECK(back.assignment.at("x") == 1);
  CHECK(back.to_json_string() == i.to_json_string());
}

TEST_CASE("validity depends only on the sample's order type") {
  // V_4 against an order-isomorphic rational sample.
  std::vector<Value> iso{Value(0), Value(1, 7), Value(2, 7), Value(1)};
  BruteForceOptions opts;
  opts.max_domain = 2;
  testgen::Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    auto f = testgen::random_qf(rng, 3, 3);
    bool a = !brute_force_validity(f, vm_values(4), opts);
    bool b = !brute_force_validity(f, iso, opts);
    CHECK(a == b);
  }
}
