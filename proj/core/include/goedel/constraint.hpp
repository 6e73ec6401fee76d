#pragma once

#include <functional>
#include <string>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/value.hpp"
#include "goedel/valueset.hpp"

namespace goedel {

// An ell-constraint: a weak linear order of {bottom, A_1, ..., A_ell, top},
// stored as an ordered partition. Class 0 implicitly holds bottom, the last
// class implicitly holds top; atoms are positive enumeration indices and
// may share either end class. There are always at least two classes
// (bottom < top is the root).
class Constraint {
public:
  static Constraint root();

  std::size_t level() const;  // number of atoms placed
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  int bottom_class() const { return 0; }
  int top_class() const { return static_cast<int>(classes_.size()) - 1; }

  // Class of an atom id; throws EvalError when the atom is not placed.
  int class_of(int atom_id) const;
  bool has_atom(int atom_id) const;

  // All (ell+1)-constraints placing `new_atom` : it joins an existing class
  // or a fresh singleton in a gap strictly between adjacent classes.
  // Exactly 2k-1 results for k classes, ordered by insertion position
  // (join class 0, gap 0-1, join class 1, ...).
  std::vector<Constraint> extensions(int new_atom) const;

  // Drops atoms above `max_atom`; gap classes emptied by the restriction
  // disappear. The restriction of any extension is the original.
  Constraint restrict_to(int max_atom) const;

  bool operator==(const Constraint& other) const { return classes_ == other.classes_; }

  // "bot | A1 A2 | top"-style rendering; `namer` resolves atom ids.
  std::string to_string(const std::function<std::string(int)>& namer) const;
  std::string to_string() const;

private:
  explicit Constraint(std::vector<std::vector<int>> classes)
      : classes_(std::move(classes)) {}

  std::vector<std::vector<int>> classes_;
};

// Order-type value of a quantifier-free ground formula whose atoms are all
// placed in the constraint: min for conjunction, max for disjunction, the
// top class or the consequent's class for implication. The result is the
// top class iff the formula evaluates to 1 under every interpretation
// fulfilling the constraint. `atom_id` resolves a ground atom to its
// enumeration index; it must be defined on every atom of f.
int eval_under_constraint(const FormulaPtr& f, const Constraint& c,
                          const std::function<int(const Formula&)>& atom_id);

// Does a valuation of the placed atoms fulfil the constraint? Same class
// means equal values, lower class strictly smaller; bottom's class is
// pinned to 0 and top's to 1. `value_of` maps atom ids to values.
bool fulfills(const std::function<Value(int)>& value_of, const Constraint& c);

// Strictly increasing class values h with h(bottom)=0, h(top)=1, drawn
// from the truth-value set. For sets with a dense-suborder witness the
// intermediate classes are filled by repeated bisection below `cap`; for
// countably infinite sets they come from the sequence piece below `cap`;
// for finite sets the smallest interior values are used and `cap` is
// ignored. Throws UnfulfillableError when the set has fewer values than
// classes (or no room below the cap).
std::vector<Value> realize_constraint(const Constraint& c, const SymbolicValueSet& vset,
                                      const Value& cap);

}  // namespace goedel
