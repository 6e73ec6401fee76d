#pragma once

// Seeded random generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "goedel/eval.hpp"
#include "goedel/formula.hpp"
#include "goedel/interpretation.hpp"
#include "goedel/signature.hpp"

namespace testgen {

using goedel::Formula;
using goedel::FormulaPtr;
using goedel::Interpretation;
using goedel::Term;
using goedel::TermPtr;
using goedel::Value;

class Rng {
public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(eng_) < p;
  }

  Value rational() {
    int q = uniform(1, 24);
    int p = uniform(0, q);
    return Value(p, q);
  }

  Value rational_interior() {  // in (0,1)
    for (;;) {
      Value v = rational();
      if (v > 0 && v < 1) return v;
    }
  }

private:
  std::mt19937_64 eng_;
};

// Quantifier-free formula over 0-ary atoms A1..Ak.
inline FormulaPtr random_qf(Rng& rng, int max_atoms, int depth) {
  if (depth == 0 || rng.chance(0.25)) {
    int roll = rng.uniform(0, 11);
    if (roll == 0) return Formula::bottom();
    if (roll == 1) return Formula::top();
    return Formula::atom("A" + std::to_string(rng.uniform(1, max_atoms)));
  }
  switch (rng.uniform(0, 3)) {
    case 0:
      return Formula::conj(random_qf(rng, max_atoms, depth - 1),
                           random_qf(rng, max_atoms, depth - 1));
    case 1:
      return Formula::disj(random_qf(rng, max_atoms, depth - 1),
                           random_qf(rng, max_atoms, depth - 1));
    case 2:
      return Formula::implies(random_qf(rng, max_atoms, depth - 1),
                              random_qf(rng, max_atoms, depth - 1));
    default:
      return Formula::neg(random_qf(rng, max_atoms, depth - 1));
  }
}

// Closed formula over P/1, Q/2, R/0, function f/1 and constant c, with
// quantifiers; every variable in scope comes from the stack.
inline FormulaPtr random_quantified(Rng& rng, int depth,
                                    std::vector<std::string>& scope, int& fresh) {
  auto term = [&]() -> TermPtr {
    TermPtr t;
    if (!scope.empty() && rng.chance(0.7))
      t = Term::var(scope[rng.uniform(0, static_cast<int>(scope.size()) - 1)]);
    else
      t = Term::constant("c");
    if (rng.chance(0.3)) t = Term::app("f", {t});
    return t;
  };
  auto atom = [&]() -> FormulaPtr {
    switch (rng.uniform(0, 3)) {
      case 0:
        return Formula::atom("P", {term()});
      case 1:
        return Formula::atom("Q", {term(), term()});
      case 2:
        return Formula::atom("R");
      default:
        return rng.chance(0.5) ? Formula::bottom() : Formula::top();
    }
  };
  if (depth == 0 || rng.chance(0.2)) return atom();
  switch (rng.uniform(0, 4)) {
    case 0:
      return Formula::conj(random_quantified(rng, depth - 1, scope, fresh),
                           random_quantified(rng, depth - 1, scope, fresh));
    case 1:
      return Formula::disj(random_quantified(rng, depth - 1, scope, fresh),
                           random_quantified(rng, depth - 1, scope, fresh));
    case 2:
      return Formula::implies(random_quantified(rng, depth - 1, scope, fresh),
                              random_quantified(rng, depth - 1, scope, fresh));
    default: {
      std::string v = "x" + std::to_string(fresh++);
      scope.push_back(v);
      auto body = random_quantified(rng, depth - 1, scope, fresh);
      scope.pop_back();
      return rng.chance(0.5) ? Formula::forall(v, body) : Formula::exists(v, body);
    }
  }
}

inline FormulaPtr random_closed(Rng& rng, int depth) {
  std::vector<std::string> scope;
  int fresh = 1;
  auto f = random_quantified(rng, depth, scope, fresh);
  return f;
}

// Random interpretation covering a formula's signature, atom values drawn
// from `values` when given, random rationals otherwise.
inline Interpretation random_interpretation(Rng& rng, const FormulaPtr& f,
                                            int domain_size,
                                            const std::vector<Value>* values = nullptr) {
  auto sig = goedel::Signature::of_formula(f);
  Interpretation out;
  out.domain_size = domain_size;
  for (const auto& [name, arity] : sig.functions()) {
    goedel::FuncTable ft;
    ft.arity = arity;
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= domain_size;
    for (std::size_t e = 0; e < entries; ++e)
      ft.table.push_back(rng.uniform(0, domain_size - 1));
    out.funcs[name] = std::move(ft);
  }
  for (const auto& [name, arity] : sig.predicates()) {
    goedel::PredTable pt;
    pt.arity = arity;
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= domain_size;
    for (std::size_t e = 0; e < entries; ++e) {
      if (values)
        pt.table.push_back((*values)[rng.uniform(0, static_cast<int>(values->size()) - 1)]);
      else
        pt.table.push_back(rng.rational());
    }
    out.preds[name] = std::move(pt);
  }
  return out;
}

}  // namespace testgen
