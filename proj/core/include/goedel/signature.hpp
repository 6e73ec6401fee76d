#pragma once

#include <map>
#include <string>

#include "goedel/formula.hpp"

namespace goedel {

// Function and predicate symbols with arities. Constants are 0-ary
// functions; propositional atoms are 0-ary predicates.
class Signature {
public:
  void add_function(const std::string& name, int arity);
  void add_predicate(const std::string& name, int arity);

  bool has_function(const std::string& name) const { return funcs_.count(name); }
  bool has_predicate(const std::string& name) const { return preds_.count(name); }
  bool has_symbol(const std::string& name) const {
    return has_function(name) || has_predicate(name);
  }

  int function_arity(const std::string& name) const;
  int predicate_arity(const std::string& name) const;

  const std::map<std::string, int>& functions() const { return funcs_; }
  const std::map<std::string, int>& predicates() const { return preds_; }

  bool has_constant() const;
  bool has_positive_arity_function() const;

  // Returns a name not used by any symbol; tries base, base0, base1, ...
  std::string fresh_symbol(const std::string& base) const;

  // Collects every symbol of a formula (bound variables excluded). Throws
  // EvalError when one symbol occurs with two arities.
  static Signature of_formula(const FormulaPtr& f);

  // Adds a fresh constant and, when absent, a fresh positive-arity function,
  // so the Herbrand universe is infinite and nonempty. Returns the names
  // that were added (constant first).
  std::vector<std::string> herbrand_augment();

private:
  std::map<std::string, int> funcs_;
  std::map<std::string, int> preds_;
};

}  // namespace goedel
