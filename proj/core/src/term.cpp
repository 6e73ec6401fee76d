#include "goedel/term.hpp"

#include <algorithm>

namespace goedel {

Term::Term(Kind kind, std::string symbol, std::vector<TermPtr> args)
    : kind_(kind), symbol_(std::move(symbol)), args_(std::move(args)) {
  depth_ = 0;
  for (const auto& a : args_) depth_ = std::max(depth_, a->depth() + 1);
}

TermPtr Term::var(std::string name) {
  return TermPtr(new Term(Kind::Variable, std::move(name), {}));
}

TermPtr Term::app(std::string symbol, std::vector<TermPtr> args) {
  return TermPtr(new Term(Kind::Application, std::move(symbol), std::move(args)));
}

std::string Term::to_string() const {
  if (kind_ == Kind::Variable || args_.empty()) return symbol_;
  std::string out = symbol_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ",";
    out += args_[i]->to_string();
  }
  out += ")";
  return out;
}

bool Term::equals(const Term& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || symbol_ != other.symbol_ ||
      args_.size() != other.args_.size())
    return false;
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (!args_[i]->equals(*other.args_[i])) return false;
  return true;
}

bool Term::contains(const Term& needle) const {
  if (equals(needle)) return true;
  for (const auto& a : args_)
    if (a->contains(needle)) return true;
  return false;
}

TermPtr Term::substitute(const std::string& name, const TermPtr& replacement) const {
  if (kind_ == Kind::Variable)
    return symbol_ == name ? replacement : var(symbol_);
  std::vector<TermPtr> args;
  args.reserve(args_.size());
  for (const auto& a : args_) args.push_back(a->substitute(name, replacement));
  return app(symbol_, std::move(args));
}

TermPtr Term::replace_term(const Term& from, const TermPtr& to) const {
  if (equals(from)) return to;
  if (kind_ == Kind::Variable) return var(symbol_);
  std::vector<TermPtr> args;
  args.reserve(args_.size());
  for (const auto& a : args_) args.push_back(a->replace_term(from, to));
  return app(symbol_, std::move(args));
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind_ == Kind::Variable) {
    if (std::find(out.begin(), out.end(), symbol_) == out.end())
      out.push_back(symbol_);
    return;
  }
  for (const auto& a : args_) a->collect_variables(out);
}

bool operator==(const Term& a, const Term& b) { return a.equals(b); }

bool term_less(const Term& a, const Term& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  if (a.symbol() != b.symbol()) return a.symbol() < b.symbol();
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size();
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (term_less(*a.args()[i], *b.args()[i])) return true;
    if (term_less(*b.args()[i], *a.args()[i])) return false;
  }
  return false;
}

}  // namespace goedel
