#pragma once

#include <memory>
#include <string>
#include <vector>

namespace goedel {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order term: a variable or an application of a function symbol.
// Constants are 0-ary applications. Immutable after construction.
class Term {
public:
  enum class Kind { Variable, Application };

  static TermPtr var(std::string name);
  static TermPtr app(std::string symbol, std::vector<TermPtr> args = {});
  static TermPtr constant(std::string name) { return app(std::move(name)); }

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  // Variable name or function symbol.
  const std::string& symbol() const { return symbol_; }
  const std::vector<TermPtr>& args() const { return args_; }

  int depth() const { return depth_; }

  std::string to_string() const;

  bool equals(const Term& other) const;

  // True when `needle` occurs in this term (as the whole term or a subterm).
  bool contains(const Term& needle) const;

  // Replaces every occurrence of variable `name` with `replacement`.
  TermPtr substitute(const std::string& name, const TermPtr& replacement) const;

  // Replaces every occurrence of the (sub)term `from` with `to`.
  TermPtr replace_term(const Term& from, const TermPtr& to) const;

  void collect_variables(std::vector<std::string>& out) const;

private:
  Term(Kind kind, std::string symbol, std::vector<TermPtr> args);

  Kind kind_;
  std::string symbol_;
  std::vector<TermPtr> args_;
  int depth_;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// Total order used by the Herbrand enumeration: depth, then root symbol,
// then arguments lexicographically.
bool term_less(const Term& a, const Term& b);

}  // namespace goedel
