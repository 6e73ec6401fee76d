#include "goedel/signature.hpp"

#include <set>

#include "goedel/errors.hpp"

namespace goedel {

void Signature::add_function(const std::string& name, int arity) {
  auto it = funcs_.find(name);
  if (it != funcs_.end() && it->second != arity)
    throw EvalError("function symbol '" + name + "' used with arities " +
                    std::to_string(it->second) + " and " + std::to_string(arity));
  funcs_[name] = arity;
}

void Signature::add_predicate(const std::string& name, int arity) {
  auto it = preds_.find(name);
  if (it != preds_.end() && it->second != arity)
    throw EvalError("predicate symbol '" + name + "' used with arities " +
                    std::to_string(it->second) + " and " + std::to_string(arity));
  preds_[name] = arity;
}

int Signature::function_arity(const std::string& name) const {
  auto it = funcs_.find(name);
  if (it == funcs_.end()) throw EvalError("unknown function symbol '" + name + "'");
  return it->second;
}

int Signature::predicate_arity(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw EvalError("unknown predicate symbol '" + name + "'");
  return it->second;
}

bool Signature::has_constant() const {
  for (const auto& [name, arity] : funcs_)
    if (arity == 0) return true;
  return false;
}

bool Signature::has_positive_arity_function() const {
  for (const auto& [name, arity] : funcs_)
    if (arity > 0) return true;
  return false;
}

std::string Signature::fresh_symbol(const std::string& base) const {
  if (!has_symbol(base)) return base;
  for (int i = 0;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!has_symbol(candidate)) return candidate;
  }
}

namespace {

void collect_term(const Term& t, const std::set<std::string>& bound, Signature& sig) {
  if (t.is_variable()) {
    // Free variables are treated as constants.
    if (!bound.count(t.symbol())) sig.add_function(t.symbol(), 0);
    return;
  }
  sig.add_function(t.symbol(), static_cast<int>(t.args().size()));
  for (const auto& a : t.args()) collect_term(*a, bound, sig);
}

void collect(const Formula& f, std::set<std::string>& bound, Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      sig.add_predicate(f.symbol(), static_cast<int>(f.terms().size()));
      for (const auto& t : f.terms()) collect_term(*t, bound, sig);
      return;
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool added = bound.insert(f.symbol()).second;
      collect(*f.left(), bound, sig);
      if (added) bound.erase(f.symbol());
      return;
    }
    default:
      collect(*f.left(), bound, sig);
      collect(*f.right(), bound, sig);
      return;
  }
}

}  // namespace

Signature Signature::of_formula(const FormulaPtr& f) {
  Signature sig;
  std::set<std::string> bound;
  collect(*f, bound, sig);
  return sig;
}

std::vector<std::string> Signature::herbrand_augment() {
  std::vector<std::string> added;
  if (!has_constant()) {
    std::string c = fresh_symbol("c0");
    add_function(c, 0);
    added.push_back(c);
  }
  if (!has_positive_arity_function()) {
    std::string g = fresh_symbol("g");
    add_function(g, 1);
    added.push_back(g);
  }
  return added;
}

}  // namespace goedel
