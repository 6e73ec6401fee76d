#pragma once

#include <optional>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/interpretation.hpp"

namespace goedel {

// Exact evaluation over a finite domain. Conjunction is min, disjunction
// max, implication 1 or the consequent's value; quantifiers are min/max
// over the domain (infima and suprema are attained on finite domains).
Value eval(const Interpretation& interp, const FormulaPtr& f);

inline bool satisfies(const Interpretation& interp, const FormulaPtr& f) {
  return eval(interp, f) == 1;
}

struct BruteForceOptions {
  int max_domain = 2;
  // Hard ceiling on the number of interpretations visited.
  unsigned long long guard = 10'000'000ULL;
  int jobs = 1;
};

struct Countermodel {
  Interpretation interpretation;
  Value value;  // eval of the formula, < 1
};

// Exhaustively enumerates interpretations with domain sizes 1..max_domain,
// function tables over the domain, and atom values drawn from `values`
// (which must be sorted, distinct, and contain 0 and 1). Returns the first
// countermodel in deterministic order (domain size, then configuration
// index), or nullopt when the formula holds everywhere in the search space.
// Deterministic for any jobs count. Throws GuardExceededError when the
// space is larger than the guard.
std::optional<Countermodel> brute_force_validity(const FormulaPtr& f,
                                                 const std::vector<Value>& values,
                                                 const BruteForceOptions& opts);

// The collapse I_v: atom values above v are sent to 1, others kept.
// Requires 0 <= v < 1.
Interpretation collapse_above(const Interpretation& interp, const Value& v);

// Order invariance of quantifier-free evaluation: applies an
// order-preserving, endpoint-fixing injection (given as value pairs) to the
// interpretation and checks f(eval(i, A)) == eval(i', A). Throws EvalError
// when the map is not order-preserving, does not fix 0 and 1, or misses an
// atom value of A.
bool check_order_invariance(const FormulaPtr& f, const Interpretation& interp,
                            const std::vector<std::pair<Value, Value>>& injection);

}  // namespace goedel
