#include <doctest.h>

#include "generators.hpp"
#include "goedel/constraint.hpp"
#include "goedel/errors.hpp"
#include "goedel/eval.hpp"
#include "goedel/parser.hpp"

using namespace goedel;

namespace {

// All constraints at level ell, by repeated extension from the root.
std::vector<Constraint> all_constraints(int ell) {
  std::vector<Constraint> cur{Constraint::root()};
  for (int a = 1; a <= ell; ++a) {
    std::vector<Constraint> next;
    for (const auto& c : cur)
      for (auto& e : c.extensions(a)) next.push_back(std::move(e));
    cur = std::move(next);
  }
  return cur;
}

int id_of(const Formula& atom) {
  // Atoms named A1..Ak.
  return std::stoi(atom.symbol().substr(1));
}

Interpretation from_class_values(const Constraint& c, const std::vector<Value>& h) {
  Interpretation i;
  i.domain_size = 1;
  for (std::size_t cls = 0; cls < c.class_count(); ++cls)
    for (int a : c.classes()[cls])
      i.preds["A" + std::to_string(a)] = PredTable{0, {h[cls]}};
  return i;
}

}  // namespace

TEST_CASE("extension counts are exactly 2k-1") {
  auto root = Constraint::root();
  auto exts = root.extensions(1);
  REQUIRE(exts.size() == 3);
  CHECK(exts[0].to_string() == "bot A1 | top");
  CHECK(exts[1].to_string() == "bot | A1 | top");
  CHECK(exts[2].to_string() == "bot | A1 top");

  // A chain with k classes extends 2k-1 ways, for k up to 5.
  Constraint chain = Constraint::root();
  for (int a = 1; a <= 3; ++a) chain = chain.extensions(a)[1];  // strict insert
  for (int k = 2; k <= 5; ++k) {
    std::vector<Constraint> with_k;
    for (const auto& c : all_constraints(4))
      if (c.class_count() == static_cast<std::size_t>(k)) {
        with_k.push_back(c);
        break;
      }
    if (!with_k.empty())
      CHECK(with_k[0].extensions(5).size() == static_cast<std::size_t>(2 * k - 1));
  }

  CHECK(all_constraints(1).size() == 3);
  CHECK(all_constraints(2).size() == 11);

  CHECK_THROWS_AS(exts[0].extensions(1), EvalError);
}

TEST_CASE("restriction of an extension recovers the base") {
  for (const auto& c : all_constraints(2))
    for (const auto& e : c.extensions(3)) CHECK(e.restrict_to(2) == c);
}

TEST_CASE("order-type evaluation matches the definition") {
  // bot | A1 | A2 | top
  Constraint c = Constraint::root().extensions(1)[1].extensions(2)[3];
  REQUIRE(c.to_string() == "bot | A1 | A2 | top");
  auto id = [](const Formula& a) { return id_of(a); };
  CHECK(eval_under_constraint(parse_formula("A1 -> A2"), c, id) == c.top_class());
  CHECK(eval_under_constraint(parse_formula("A2 -> A1"), c, id) == c.class_of(1));
  CHECK(eval_under_constraint(parse_formula("A1 & A2"), c, id) == c.class_of(1));
  CHECK(eval_under_constraint(parse_formula("false"), c, id) == 0);
  CHECK(eval_under_constraint(parse_formula("true"), c, id) == c.top_class());

  auto linearity = parse_formula("(A1 -> A2) | (A2 -> A1)");
  for (const auto& k : all_constraints(2))
    CHECK(eval_under_constraint(linearity, k, id) == k.top_class());
}

TEST_CASE("fulfillment checks classes and strict order") {
  Constraint c = Constraint::root().extensions(1)[1].extensions(2)[3];
  auto values = [](std::initializer_list<Value> vs) {
    std::vector<Value> v(vs);
    return [v](int a) { return v[a - 1]; };
  };
  CHECK(fulfills(values({Value(1, 5), Value(9, 10)}), c));
  CHECK_FALSE(fulfills(values({Value(1, 2), Value(1, 2)}), c));
  CHECK_FALSE(fulfills(values({Value(9, 10), Value(1, 5)}), c));

  // An atom sharing bottom's class must be exactly 0.
  Constraint zero = Constraint::root().extensions(1)[0];
  CHECK(fulfills(values({Value(0), Value(0)}), zero.extensions(2)[0]));
  CHECK_FALSE(fulfills(values({Value(1, 10)}), zero));
}

TEST_CASE("realization picks witness values below the cap") {
  auto unit = SymbolicValueSet::unit_interval();
  Constraint c = Constraint::root().extensions(1)[1];  // bot | A1 | top
  auto h = realize_constraint(c, unit, Value(9, 10));
  REQUIRE(h.size() == 3);
  CHECK(h[0] == 0);
  CHECK(h[1] == Value(1, 2));
  CHECK(h[2] == 1);

  // Four classes into V_2 is a pigeonhole failure.
  Constraint chain = Constraint::root().extensions(1)[1].extensions(2)[3];
  CHECK_THROWS_AS(realize_constraint(chain, SymbolicValueSet::vm(2), Value(9, 10)),
                  UnfulfillableError);

  // All intermediate images stay below the cap, over several sets.
  for (const auto& vset :
       {SymbolicValueSet::unit_interval(), SymbolicValueSet::cantor(),
        SymbolicValueSet::vdown(), SymbolicValueSet::vup(), SymbolicValueSet::vm(6)}) {
    Constraint deep = Constraint::root();
    for (int a = 1; a <= 4; ++a)
      deep = deep.extensions(a)[2 * static_cast<int>(deep.class_count()) - 3];
    auto hv = realize_constraint(deep, vset, Value(9, 10));
    for (std::size_t j = 0; j + 1 < hv.size(); ++j) {
      CHECK(hv[j] < hv[j + 1]);
      if (j > 0) CHECK(vset.contains(hv[j]));
    }
    auto value_of = [&](int a) { return hv[deep.class_of(a)]; };
    CHECK(fulfills(value_of, deep));
  }
}

TEST_CASE("every fulfilling interpretation of an extension fulfills the base") {
  testgen::Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    auto cs = all_constraints(2);
    const auto& base = cs[rng.uniform(0, static_cast<int>(cs.size()) - 1)];
    auto exts = base.extensions(3);
    const auto& ext = exts[rng.uniform(0, static_cast<int>(exts.size()) - 1)];
    auto h = realize_constraint(ext, SymbolicValueSet::unit_interval(), Value(9, 10));
    auto value_of = [&](int a) { return h[ext.class_of(a)]; };
    REQUIRE(fulfills(value_of, ext));
    CHECK(fulfills(value_of, base));
  }
}

TEST_CASE("constraint evaluation agrees with direct evaluation on realizations") {
  auto unit = SymbolicValueSet::unit_interval();
  auto id = [](const Formula& a) { return id_of(a); };
  testgen::Rng rng(17);
  for (int ell = 1; ell <= 3; ++ell) {
    for (const auto& c : all_constraints(ell)) {
      for (const Value& cap : {Value(9, 10), Value(3, 5)}) {
        auto h = realize_constraint(c, unit, cap);
        auto interp = from_class_values(c, h);
        for (int round = 0; round < 5; ++round) {
          auto f = testgen::random_qf(rng, ell, 3);
          int cls = eval_under_constraint(f, c, id);
          CHECK(eval(interp, f) == h[cls]);
        }
      }
    }
  }
}

TEST_CASE("atoms outside the constraint are reported") {
  Constraint c = Constraint::root().extensions(1)[1];
  auto id = [](const Formula& a) { return std::stoi(a.symbol().substr(1)); };
  CHECK_THROWS_AS(eval_under_constraint(parse_formula("A2 -> A1"), c, id), EvalError);
}

TEST_CASE("extensions partition the base's fulfillment region") {
  // Any valuation fulfilling the base fulfils exactly one extension once
  // the new atom gets a value.
  testgen::Rng rng(23);
  auto unit = SymbolicValueSet::unit_interval();
  std::vector<Constraint> bases{Constraint::root()};
  for (int a = 1; a <= 2; ++a) {
    std::vector<Constraint> next;
    for (const auto& c : bases)
      for (auto& e : c.extensions(a)) next.push_back(std::move(e));
    bases = std::move(next);
  }
  for (const auto& base : bases) {
    auto h = realize_constraint(base, unit, Value(9, 10));
    for (int round = 0; round < 8; ++round) {
      // New atom value: an existing class value or something in between.
      Value nv;
      if (rng.chance(0.5)) {
        nv = h[rng.uniform(0, static_cast<int>(h.size()) - 1)];
      } else {
        int gap = rng.uniform(0, static_cast<int>(h.size()) - 2);
        nv = midpoint(h[gap], h[gap + 1]);
      }
      auto value_of = [&](int atom) { return atom == 3 ? nv : h[base.class_of(atom)]; };
      int fulfilled = 0;
      for (const auto& ext : base.extensions(3))
        if (fulfills(value_of, ext)) ++fulfilled;
      CHECK(fulfilled == 1);
    }
  }
}
