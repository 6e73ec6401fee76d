#pragma once

#include <memory>
#include <string>
#include <vector>

#include "goedel/term.hpp"

namespace goedel {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class Quant { Forall, Exists };

// Formula over /\, \/, ->, bottom, top, forall, exists. Negation is sugar:
// ~A is stored as A -> false. Immutable; share freely.
class Formula {
public:
  enum class Kind { Atom, Bottom, Top, And, Or, Implies, Forall, Exists };

  static FormulaPtr atom(std::string predicate, std::vector<TermPtr> args = {});
  static FormulaPtr bottom();
  static FormulaPtr top();
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr neg(FormulaPtr a) { return implies(std::move(a), bottom()); }
  static FormulaPtr quantified(Quant q, std::string var, FormulaPtr body);
  static FormulaPtr forall(std::string var, FormulaPtr body) {
    return quantified(Quant::Forall, std::move(var), std::move(body));
  }
  static FormulaPtr exists(std::string var, FormulaPtr body) {
    return quantified(Quant::Exists, std::move(var), std::move(body));
  }

  Kind kind() const { return kind_; }
  // Predicate symbol (Atom) or bound variable (quantifiers).
  const std::string& symbol() const { return symbol_; }
  const std::vector<TermPtr>& terms() const { return terms_; }
  const FormulaPtr& left() const { return left_; }    // also quantifier body
  const FormulaPtr& right() const { return right_; }

  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_quantifier() const {
    return kind_ == Kind::Forall || kind_ == Kind::Exists;
  }
  bool has_quantifier() const;
  bool has_forall() const;

  std::string to_string() const;

  bool equals(const Formula& other) const;

  std::vector<std::string> free_variables() const;
  bool is_closed() const { return free_variables().empty(); }

  // Capture-avoiding substitution of a term for a free variable. Bound
  // variables clashing with variables of `replacement` are renamed with
  // numeric suffixes.
  FormulaPtr substitute(const std::string& var, const TermPtr& replacement) const;

  // Replaces every occurrence of the ground term `from` inside atoms by `to`.
  FormulaPtr replace_term(const Term& from, const TermPtr& to) const;

  bool mentions_term(const Term& needle) const;

  // Canonical key of an atom: its printed form.
  std::string atom_key() const;

  void collect_atoms(std::vector<FormulaPtr>& out) const;

  // Top as a primitive is an internal convenience; consumers that know only
  // the core connectives receive it as false -> false.
  FormulaPtr lower_top() const;

private:
  Formula(Kind kind, std::string symbol, std::vector<TermPtr> terms,
          FormulaPtr left, FormulaPtr right);

  Kind kind_;
  std::string symbol_;
  std::vector<TermPtr> terms_;
  FormulaPtr left_, right_;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

// Prenex formula: quantifier prefix over a quantifier-free matrix.
struct PrenexFormula {
  std::vector<std::pair<Quant, std::string>> prefix;
  FormulaPtr matrix;

  FormulaPtr to_formula() const;
  std::string to_string() const { return to_formula()->to_string(); }
  bool purely_existential() const;
};

// Renames bound variables so they are pairwise distinct and disjoint from
// the free variables (numeric-suffix renaming).
FormulaPtr rectify(const FormulaPtr& f);

// Builds a right-nested disjunction of `parts` (which must be nonempty).
FormulaPtr disjunction_of(const std::vector<FormulaPtr>& parts);

// Flattens nested \/ into the list of its leaves, left to right.
std::vector<FormulaPtr> flatten_disjunction(const FormulaPtr& f);

}  // namespace goedel
