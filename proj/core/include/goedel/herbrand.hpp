#pragma once

#include <map>
#include <optional>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/signature.hpp"

namespace goedel {

// One position of the original quantifier prefix after Herbrandization.
struct SkolemPosition {
  Quant quant;
  std::string variable;
  // Existential positions: index into the instance tuple.
  int tuple_index = -1;
  // Universal positions: the fresh symbol applied to the existential
  // variables occurring earlier in the prefix (constant when none).
  std::string skolem_symbol;
  std::vector<int> arg_tuple_indices;
};

// Herbrand form A^H of a prenex formula: purely existential, with every
// universally quantified variable replaced by a fresh function term over
// the preceding existential variables (a fresh constant when there are
// none). The dual of Skolemization, for validity.
struct HerbrandForm {
  PrenexFormula original;
  PrenexFormula herbrand;
  std::vector<SkolemPosition> positions;

  // The instance terms for all original prefix positions, given a tuple of
  // terms for the existential prefix of A^H.
  std::vector<TermPtr> position_terms(const std::vector<TermPtr>& tuple) const;
};

HerbrandForm herbrand_form(const PrenexFormula& a);

// Streams the Herbrand universe U(A) and base B(A) of a signature,
// augmenting it first with a fresh constant and a fresh unary function when
// absent. Terms are ordered by depth, then root symbol, then arguments;
// atoms are staged by the largest term index they use, predicates in name
// order within a stage. Both streams are non-repetitive.
class HerbrandEnumerator {
public:
  explicit HerbrandEnumerator(Signature sig);

  const Signature& signature() const { return sig_; }
  const std::vector<std::string>& augmented_symbols() const { return added_; }

  TermPtr term(std::size_t i);
  // 0-based: atom(i) is the enumeration's A_{i+1}.
  FormulaPtr atom(std::size_t i);

  // The base is finite exactly when every predicate is 0-ary (the universe
  // itself is infinite after augmentation).
  bool base_finite() const;
  std::size_t finite_base_size() const;

  // Index of a ground atom among the first `limit` enumerated atoms.
  std::optional<std::size_t> atom_index(const Formula& ground_atom, std::size_t limit);

private:
  void ensure_terms(std::size_t n);
  void ensure_atoms(std::size_t n);
  void push_atom(const FormulaPtr& a);

  Signature sig_;
  std::vector<std::string> added_;
  std::vector<TermPtr> terms_;
  std::vector<std::size_t> depth_begin_;  // terms_ offset where each depth starts
  int max_depth_done_ = -1;
  std::vector<FormulaPtr> atoms_;
  std::map<std::string, std::size_t> atom_ids_;
  std::size_t atom_stage_done_ = 0;  // stages 0..atom_stage_done_-1 emitted
};

// The subterm closure of the terms occurring in the first `ell` atoms.
std::vector<TermPtr> ell_term_closure(HerbrandEnumerator& en, std::size_t ell);

// All tuples over the Herbrand universe (components drawn from the subterm
// closure of X_ell; variables that occur in no atom of the matrix get the
// first universe term) whose instantiated matrix atoms all lie within
// X_ell = {bottom, A_1, ..., A_ell, top}.
std::vector<std::vector<TermPtr>> ell_instances(
    const FormulaPtr& matrix, const std::vector<std::string>& prefix_vars,
    std::size_t ell, HerbrandEnumerator& en);

}  // namespace goedel
