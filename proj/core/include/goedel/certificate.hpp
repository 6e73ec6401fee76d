#pragma once

#include <vector>

#include "goedel/formula.hpp"
#include "goedel/herbrand.hpp"

namespace goedel {

// One certificate step: `rule` names the quantifier-reintroduction rule,
// `premise` must be the previous step's conclusion.
//
//   (1) commutativity   (2) associativity   (3) contraction
//   (4) A(s) / all x A(x)     with s absent from the conclusion
//   (5) A(t) / ex x A(x)
//   (6) all x (A(x) | B) / (all x A(x)) | B   with x not free in B
//   (7) ex x (A(x) | B) / (ex x A(x)) | B     with x not free in B
struct OutlineStep {
  int rule = 0;
  FormulaPtr premise;
  FormulaPtr conclusion;
};

struct ProofOutline {
  std::vector<OutlineStep> steps;

  bool empty() const { return steps.empty(); }
  const FormulaPtr& first_line() const { return steps.front().premise; }
  const FormulaPtr& last_line() const { return steps.back().conclusion; }
};

// Rebuilds the original prenex formula from a valid Herbrand disjunction
// over the given instance tuples, one rule application per step:
// quantifiers are restored innermost-first per disjunct, existentials by
// (5)+(7), universals by (4)+(6) once their instance term occurs nowhere
// else, duplicates merged by (3), reorderings by (1). Throws
// CertificateError on an empty tuple list or when no rule is applicable.
ProofOutline reverse_skolemize(const HerbrandForm& hf,
                               const std::vector<std::vector<TermPtr>>& tuples);

// Independent step verifier: checks the chain starts at `disjunction`,
// ends at `original`, consecutive lines agree, and every step is a correct
// application of its rule including side conditions. Rules (1)-(3) are
// checked on the flattened disjunct lists (their closure under top-level
// reassociation). Throws CertificateError with the offending step index.
void check_outline(const ProofOutline& outline, const FormulaPtr& disjunction,
                   const FormulaPtr& original);

}  // namespace goedel
