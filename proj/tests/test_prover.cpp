#include <doctest.h>

#include <functional>

#include "generators.hpp"
#include "goedel/errors.hpp"
#include "goedel/parser.hpp"
#include "goedel/prenex.hpp"
#include "goedel/prover.hpp"

using namespace goedel;

namespace {

PrenexFormula prenex_of(const char* text) {
  return to_prenex(parse_formula(text), PrenexRegime::GUp);
}

const ValidCertificate& expect_valid(const ProofResult& r) {
  REQUIRE(std::holds_alternative<ValidCertificate>(r));
  return std::get<ValidCertificate>(r);
}

const UnknownResult& expect_unknown(const ProofResult& r) {
  REQUIRE(std::holds_alternative<UnknownResult>(r));
  return std::get<UnknownResult>(r);
}

}  // namespace

TEST_CASE("reflexive instances close the tree at level one") {
  auto unit = SymbolicValueSet::unit_interval();
  auto r = prove_existential(prenex_of("ex x (P(x) -> P(x))"), unit, Budget{});
  const auto& v = expect_valid(r);
  REQUIRE(v.instances.size() == 1);
  CHECK(v.instances[0][0]->to_string() == "c0");
  CHECK(v.stats.leaves == 3);  // every level-1 constraint is a leaf
  CHECK(v.stats.max_level == 1);
}

TEST_CASE("two-variable linearity closes with the diagonal instance") {
  auto unit = SymbolicValueSet::unit_interval();
  auto r = prove_existential(
      prenex_of("ex x ex y ((P(x) -> P(y)) | (P(y) -> P(x)))"), unit, Budget{});
  const auto& v = expect_valid(r);
  REQUIRE(v.instances.size() == 1);
  CHECK(v.instances[0][0]->to_string() == "c0");
  CHECK(v.instances[0][1]->to_string() == "c0");
}

TEST_CASE("prenex linearity proves with a checkable certificate") {
  auto unit = SymbolicValueSet::unit_interval();
  auto a = prenex_of("all x all y ((P(x) -> P(y)) | (P(y) -> P(x)))");
  auto r = prove_prenex(a, unit, Budget{});
  const auto& v = expect_valid(r);
  check_outline(v.outline, v.disjunction, a.to_formula());

  // Soundness: the disjunction holds over V_5 and random rational models.
  BruteForceOptions opts;
  opts.max_domain = 2;
  CHECK_FALSE(brute_force_validity(v.disjunction, vm_values(5), opts));
  testgen::Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    auto i = testgen::random_interpretation(rng, v.disjunction, rng.uniform(1, 3));
    CHECK(eval(i, v.disjunction) == 1);
  }
}

TEST_CASE("the reflexive forall-exists formula uses the Skolem constant") {
  auto unit = SymbolicValueSet::unit_interval();
  auto a = prenex_of("all x ex y (P(x) -> P(y))");
  auto r = prove_prenex(a, unit, Budget{});
  const auto& v = expect_valid(r);
  REQUIRE(v.instances.size() == 1);
  CHECK(v.instances[0][0]->to_string() == "c0");
  REQUIRE(v.outline.steps.size() == 2);
  CHECK(v.outline.steps[0].rule == 5);
  CHECK(v.outline.steps[1].rule == 4);
}

TEST_CASE("the strictly descending chain stays open within budget") {
  auto unit = SymbolicValueSet::unit_interval();
  Budget budget;
  budget.max_level = 6;
  auto a = prenex_of("ex x (P(x) -> P(f(x)))");
  auto r = prove_existential(a, unit, budget);
  const auto& u = expect_unknown(r);
  CHECK(u.verified_level == 6);
  CHECK(u.cap < 1);
  REQUIRE_FALSE(u.open_constraints.empty());

  // The candidate assigns strictly descending values to P(c0), P(f(c0)),...
  const auto& table = u.candidate.preds.at("P").table;
  REQUIRE(table.size() >= 2);
  for (std::size_t i = 0; i + 1 < table.size(); ++i) CHECK(table[i] > table[i + 1]);
  for (const auto& val : table) CHECK(val < u.cap);

  // Every checked instance evaluates strictly below the cap.
  HerbrandEnumerator en(Signature::of_formula(a.to_formula()));
  std::vector<std::string> vars{"x"};
  for (std::size_t ell = 0; ell <= static_cast<std::size_t>(u.verified_level); ++ell) {
    for (const auto& tuple : ell_instances(a.matrix, vars, ell, en)) {
      FormulaPtr ground = a.matrix->substitute("x", tuple[0]);
      CHECK(eval(u.candidate, ground) < u.cap);
    }
  }
}

TEST_CASE("C-up's Herbrand form is unknown over the reals") {
  auto unit = SymbolicValueSet::unit_interval();
  auto c_up = to_prenex(parse_formula("ex x (P(x) -> all y P(y))"),
                        PrenexRegime::IntuitionisticSafe);
  Budget budget;
  budget.max_level = 6;
  auto r = prove_prenex(c_up, unit, budget);
  expect_unknown(r);
}

TEST_CASE("finite truth-value sets prune and refute") {
  // The chain of three implications is valid over V_3 but refuted over V_4.
  auto chain = prenex_of("(A1 -> A2) | (A2 -> A3) | (A3 -> A4)");
  auto over3 = prove_prenex(chain, SymbolicValueSet::vm(3), Budget{});
  const auto& v = expect_valid(over3);
  CHECK(v.stats.pruned > 0);

  auto over4 = prove_prenex(chain, SymbolicValueSet::vm(4), Budget{});
  REQUIRE(std::holds_alternative<CountermodelResult>(over4));
  const auto& cm = std::get<CountermodelResult>(over4);
  CHECK(cm.value < 1);
  CHECK(cm.value_count <= 4);
  CHECK(eval(cm.interpretation, chain.to_formula()) == cm.value);
}

TEST_CASE("valid results are budget independent") {
  auto unit = SymbolicValueSet::unit_interval();
  for (const char* text :
       {"all x all y ((P(x) -> P(y)) | (P(y) -> P(x)))",
        "all x ex y (P(x) -> P(y))", "ex x (P(x) -> P(x))"}) {
    Budget small;
    small.max_level = 8;
    Budget large;
    large.max_level = 12;
    large.max_nodes = 100000;
    auto a = prenex_of(text);
    auto r1 = prove_prenex(a, unit, small);
    auto r2 = prove_prenex(a, unit, large);
    const auto& v1 = expect_valid(r1);
    const auto& v2 = expect_valid(r2);
    CHECK(v1.disjunction->equals(*v2.disjunction));
  }
}

TEST_CASE("finite counter search walks up the value ladder") {
  auto chain = parse_formula("(A1 -> A2) | (A2 -> A3)");
  auto found = finite_counter_search(chain, 5, 2);
  REQUIRE(found);
  CHECK(found->m == 3);
  CHECK(found->interpretation.preds.at("A1").table[0] == 1);
  CHECK(found->interpretation.preds.at("A2").table[0] == Value(1, 2));
  CHECK(found->interpretation.preds.at("A3").table[0] == 0);

  auto dne = parse_formula("~~A -> A");
  auto found2 = finite_counter_search(dne, 5, 2);
  REQUIRE(found2);
  CHECK(found2->m == 3);
  CHECK(found2->interpretation.preds.at("A").table[0] == Value(1, 2));

  CHECK_FALSE(finite_counter_search(parse_formula("(A -> B) | (B -> A)"), 6, 1));
}

TEST_CASE("non-existential input is rejected by prove_existential") {
  auto unit = SymbolicValueSet::unit_interval();
  CHECK_THROWS_AS(
      prove_existential(prenex_of("all x P(x) | ~P(c)"), unit, Budget{}),
      EvalError);
}

TEST_CASE("open formulas are rejected") {
  auto unit = SymbolicValueSet::unit_interval();
  PrenexFormula bad;
  bad.prefix = {{Quant::Exists, "y"}};
  bad.matrix = Formula::conj(Formula::atom("P", {Term::var("y")}),
                             Formula::atom("P", {Term::var("w")}));
  CHECK_THROWS_AS(prove_prenex(bad, unit, Budget{}), EvalError);
}

TEST_CASE("countable ambient sets still certify tree-valid formulas") {
  auto vup = SymbolicValueSet::vup();
  auto a = prenex_of("all x all y ((P(x) -> P(y)) | (P(y) -> P(x)))");
  auto r = prove_prenex(a, vup, Budget{});
  expect_valid(r);

  Budget tight;
  tight.max_level = 4;
  auto open = prove_prenex(prenex_of("ex x (P(x) -> P(f(x)))"), vup, tight);
  const auto& u = expect_unknown(open);
  for (const auto& val : u.candidate.preds.at("P").table) CHECK(vup.contains(val));
}

TEST_CASE("the leaf condition is independent of the fulfilling interpretation") {
  // Realize every level-2 constraint at two caps; an instance evaluates to
  // 1 under one realization iff it does under the other, and iff the order
  // type forces the top class.
  auto unit = SymbolicValueSet::unit_interval();
  auto a = prenex_of("ex x (P(x) -> P(f(x)))");
  HerbrandEnumerator en(Signature::of_formula(a.to_formula()));
  std::vector<std::string> vars{"x"};
  std::size_t ell = 2;
  auto tuples = ell_instances(a.matrix, vars, ell, en);
  REQUIRE_FALSE(tuples.empty());
  auto atom_id = [&](const Formula& atom) {
    return static_cast<int>(*en.atom_index(atom, ell)) + 1;
  };

  std::vector<Constraint> cur{Constraint::root()};
  for (int atom = 1; atom <= static_cast<int>(ell); ++atom) {
    std::vector<Constraint> next;
    for (const auto& c : cur)
      for (auto& e : c.extensions(atom)) next.push_back(std::move(e));
    cur = std::move(next);
  }
  for (const auto& c : cur) {
    for (const auto& tuple : tuples) {
      FormulaPtr ground = a.matrix->substitute("x", tuple[0]);
      bool forced = eval_under_constraint(ground, c, atom_id) == c.top_class();
      for (const Value& cap : {Value(9, 10), Value(2, 3)}) {
        auto h = realize_constraint(c, unit, cap);
        // Evaluate through the realized class values directly.
        std::function<Value(const FormulaPtr&)> value =
            [&](const FormulaPtr& f) -> Value {
          switch (f->kind()) {
            case Formula::Kind::Atom:
              return h[c.class_of(atom_id(*f))];
            case Formula::Kind::Bottom:
              return Value(0);
            case Formula::Kind::Top:
              return Value(1);
            case Formula::Kind::And:
              return std::min(value(f->left()), value(f->right()));
            case Formula::Kind::Or:
              return std::max(value(f->left()), value(f->right()));
            case Formula::Kind::Implies: {
              Value l = value(f->left()), r = value(f->right());
              return l > r ? r : Value(1);
            }
            default:
              throw EvalError("quantifier in ground instance");
          }
        };
        CHECK((value(ground) == 1) == forced);
      }
    }
  }
}

TEST_CASE("a wall-clock budget forces an honest unknown") {
  auto unit = SymbolicValueSet::unit_interval();
  Budget budget;
  budget.max_level = 10000;
  budget.max_nodes = (1LL << 60);
  budget.wall_clock = std::chrono::milliseconds(0);
  auto r = prove_prenex(prenex_of("ex x (P(x) -> P(f(x)))"), unit, budget);
  CHECK(std::holds_alternative<UnknownResult>(r));
}

TEST_CASE("random valid forall-exists formulas certify end to end") {
  // all x ex y (M(x,y) | (P(x) -> P(y))) is valid with witness y := x; the
  // tree must close and the outline must check, whatever M is.
  testgen::Rng rng(55);
  auto unit = SymbolicValueSet::unit_interval();
  for (int round = 0; round < 30; ++round) {
    FormulaPtr m;
    {
      // Random quantifier-free mix over P(x), P(y), Q(x), Q(y).
      std::function<FormulaPtr(int)> gen = [&](int depth) -> FormulaPtr {
        if (depth == 0 || rng.chance(0.3)) {
          auto var = Term::var(rng.chance(0.5) ? "x" : "y");
          return Formula::atom(rng.chance(0.5) ? "P" : "Q", {var});
        }
        switch (rng.uniform(0, 2)) {
          case 0: return Formula::conj(gen(depth - 1), gen(depth - 1));
          case 1: return Formula::disj(gen(depth - 1), gen(depth - 1));
          default: return Formula::implies(gen(depth - 1), gen(depth - 1));
        }
      };
      m = gen(2);
    }
    auto px = Formula::atom("P", {Term::var("x")});
    auto py = Formula::atom("P", {Term::var("y")});
    PrenexFormula a;
    a.prefix = {{Quant::Forall, "x"}, {Quant::Exists, "y"}};
    a.matrix = Formula::disj(m, Formula::implies(px, py));
    auto r = prove_prenex(a, unit, Budget{});
    REQUIRE(std::holds_alternative<ValidCertificate>(r));
    const auto& v = std::get<ValidCertificate>(r);
    check_outline(v.outline, v.disjunction, a.to_formula());
  }
}

TEST_CASE("a node budget forces an honest unknown") {
  auto unit = SymbolicValueSet::unit_interval();
  Budget tiny;
  tiny.max_nodes = 2;
  auto r = prove_prenex(
      prenex_of("all x all y ((P(x) -> P(y)) | (P(y) -> P(x)))"), unit, tiny);
  CHECK(std::holds_alternative<UnknownResult>(r));
}

TEST_CASE("C-up and C-down are provable over every finite set via pruning") {
  // Both separating formulas hold in the m-valued logics; over V_3 the
  // descending (resp. ascending) chains exhaust the three classes and the
  // tree closes.
  for (const char* text :
       {"ex x (P(x) -> all y P(y))", "ex x (ex y P(y) -> P(x))"}) {
    auto pf = to_prenex(parse_formula(text), PrenexRegime::IntuitionisticSafe);
    auto r = prove_prenex(pf, SymbolicValueSet::vm(3), Budget{});
    REQUIRE(std::holds_alternative<ValidCertificate>(r));
    CHECK(std::get<ValidCertificate>(r).stats.pruned > 0);
  }
}

TEST_CASE("a finite base exhausts into a definitive countermodel over [0,1]") {
  auto unit = SymbolicValueSet::unit_interval();
  auto r = prove_prenex(prenex_of("A | ~A"), unit, Budget{});
  REQUIRE(std::holds_alternative<CountermodelResult>(r));
  const auto& cm = std::get<CountermodelResult>(r);
  CHECK(cm.value == Value(1, 2));
  CHECK(cm.interpretation.preds.at("A").table[0] == Value(1, 2));
}
