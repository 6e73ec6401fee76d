#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goedel/certificate.hpp"
#include "goedel/constraint.hpp"
#include "goedel/eval.hpp"
#include "goedel/formula.hpp"
#include "goedel/herbrand.hpp"
#include "goedel/interpretation.hpp"
#include "goedel/valueset.hpp"

namespace goedel {

// The semantic tree has no termination criterion on invalid input over
// dense truth-value sets, so every search carries an explicit budget.
struct Budget {
  int max_level = 8;
  long long max_nodes = 20000;
  std::optional<std::chrono::milliseconds> wall_clock;
};

struct TreeStats {
  long long nodes = 0;
  long long leaves = 0;
  long long pruned = 0;
  int max_level = 0;
};

struct ValidCertificate {
  std::vector<std::vector<TermPtr>> instances;  // witness tuples, leaf order
  FormulaPtr disjunction;                       // matrix instances, disjoined
  ProofOutline outline;                         // back to the original formula
  TreeStats stats;
};

struct UnknownResult {
  std::vector<std::string> open_constraints;  // at the abandoned frontier
  int verified_level = 0;
  Value cap;
  // Candidate countermodel over an initial segment of the Herbrand
  // universe; every instance up to verified_level evaluates below cap.
  Interpretation candidate;
  std::vector<std::string> domain_terms;
  TreeStats stats;
};

struct CountermodelResult {
  int value_count = 0;  // distinct truth values used
  Interpretation interpretation;
  Value value;  // of the formula, < 1
};

using ProofResult = std::variant<ValidCertificate, UnknownResult, CountermodelResult>;

// Breadth-first semantic-tree search for a prenex formula over the given
// truth-value set. The formula is Herbrandized first; a node is a leaf
// when some ell-instance is forced to 1 by its constraint's order type
// alone. A finite tree yields Valid with one witness instance per leaf and
// a checkable reverse-Skolemization outline. For finite sets, constraints
// with more classes than values are pruned as unfulfillable; when the
// Herbrand base is finite and exhausted, a surviving open constraint is
// realized into a definitive countermodel. Budget exhaustion yields
// Unknown with a candidate countermodel from the first deepest open
// constraint.
ProofResult prove_prenex(const PrenexFormula& a, const SymbolicValueSet& vset,
                         const Budget& budget);

// Same procedure, restricted to purely existential prefixes.
ProofResult prove_existential(const PrenexFormula& a, const SymbolicValueSet& vset,
                              const Budget& budget);

struct FiniteCountermodel {
  int m = 0;  // the formula fails over V_m
  Interpretation interpretation;
  Value value;
};

// Searches V_m for m = 2..max_m with domains up to max_domain; the first
// countermodel refutes the formula in every Goedel logic whose truth-value
// set order-embeds V_m (in particular G_up = the intersection of all G_m).
std::optional<FiniteCountermodel> finite_counter_search(const FormulaPtr& a, int max_m,
                                                        int max_domain,
                                                        unsigned long long guard = 10'000'000ULL,
                                                        int jobs = 1);

}  // namespace goedel
