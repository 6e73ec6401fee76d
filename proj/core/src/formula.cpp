#include "goedel/formula.hpp"

#include <algorithm>
#include <set>

namespace goedel {

namespace {

// Printing levels, mirroring the grammar: impl(1) < or(2) < and(3) < primary(4).
constexpr int kImpl = 1, kOr = 2, kAnd = 3, kPrimary = 4;

std::string print(const Formula& f, int level);

std::string print_quant(const Formula& f) {
  std::string head = (f.kind() == Formula::Kind::Forall ? "all " : "ex ");
  return head + f.symbol() + " " + print(*f.left(), kPrimary);
}

std::string print(const Formula& f, int level) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      if (f.terms().empty()) return f.symbol();
      std::string out = f.symbol() + "(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ",";
        out += f.terms()[i]->to_string();
      }
      return out + ")";
    }
    case Formula::Kind::Bottom:
      return "false";
    case Formula::Kind::Top:
      return "true";
    case Formula::Kind::Implies: {
      if (f.right()->kind() == Formula::Kind::Bottom)
        return "~" + print(*f.left(), kPrimary);
      std::string out = print(*f.left(), kOr) + " -> " + print(*f.right(), kImpl);
      return level > kImpl ? "(" + out + ")" : out;
    }
    case Formula::Kind::Or: {
      std::string out = print(*f.left(), kOr) + " | " + print(*f.right(), kAnd);
      return level > kOr ? "(" + out + ")" : out;
    }
    case Formula::Kind::And: {
      std::string out = print(*f.left(), kAnd) + " & " + print(*f.right(), kPrimary);
      return level > kAnd ? "(" + out + ")" : out;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return print_quant(f);
  }
  return "?";
}

void free_vars_rec(const Formula& f, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<std::string> vars;
      for (const auto& t : f.terms()) t->collect_variables(vars);
      for (const auto& v : vars)
        if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
            std::find(out.begin(), out.end(), v) == out.end())
          out.push_back(v);
      return;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.symbol());
      free_vars_rec(*f.left(), bound, out);
      bound.pop_back();
      return;
    default:
      free_vars_rec(*f.left(), bound, out);
      free_vars_rec(*f.right(), bound, out);
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

void collect_all_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<std::string> vars;
      for (const auto& t : f.terms()) t->collect_variables(vars);
      out.insert(vars.begin(), vars.end());
      return;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f.symbol());
      collect_all_variables(*f.left(), out);
      return;
    default:
      collect_all_variables(*f.left(), out);
      collect_all_variables(*f.right(), out);
      return;
  }
}

FormulaPtr rectify_rec(const FormulaPtr& f, std::set<std::string>& used,
                       std::vector<std::pair<std::string, std::string>>& renames) {
  switch (f->kind()) {
    case Formula::Kind::Atom: {
      std::vector<TermPtr> args = f->terms();
      for (auto it = renames.rbegin(); it != renames.rend(); ++it)
        for (auto& a : args) a = a->substitute(it->first, Term::var(it->second));
      return Formula::atom(f->symbol(), std::move(args));
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return f;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string name = fresh_name(f->symbol(), used);
      used.insert(name);
      renames.emplace_back(f->symbol(), name);
      auto body = rectify_rec(f->left(), used, renames);
      renames.pop_back();
      return Formula::quantified(
          f->kind() == Formula::Kind::Forall ? Quant::Forall : Quant::Exists,
          name, std::move(body));
    }
    case Formula::Kind::And:
      return Formula::conj(rectify_rec(f->left(), used, renames),
                           rectify_rec(f->right(), used, renames));
    case Formula::Kind::Or:
      return Formula::disj(rectify_rec(f->left(), used, renames),
                           rectify_rec(f->right(), used, renames));
    case Formula::Kind::Implies:
      return Formula::implies(rectify_rec(f->left(), used, renames),
                              rectify_rec(f->right(), used, renames));
  }
  return f;
}

}  // namespace

Formula::Formula(Kind kind, std::string symbol, std::vector<TermPtr> terms,
                 FormulaPtr left, FormulaPtr right)
    : kind_(kind), symbol_(std::move(symbol)), terms_(std::move(terms)),
      left_(std::move(left)), right_(std::move(right)) {}

FormulaPtr Formula::atom(std::string predicate, std::vector<TermPtr> args) {
  return FormulaPtr(new Formula(Kind::Atom, std::move(predicate), std::move(args),
                                nullptr, nullptr));
}

FormulaPtr Formula::bottom() {
  static FormulaPtr instance(new Formula(Kind::Bottom, "", {}, nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::top() {
  static FormulaPtr instance(new Formula(Kind::Top, "", {}, nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::And, "", {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Or, "", {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Implies, "", {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::quantified(Quant q, std::string var, FormulaPtr body) {
  return FormulaPtr(new Formula(q == Quant::Forall ? Kind::Forall : Kind::Exists,
                                std::move(var), {}, std::move(body), nullptr));
}

bool Formula::has_quantifier() const {
  if (is_quantifier()) return true;
  if (left_ && left_->has_quantifier()) return true;
  if (right_ && right_->has_quantifier()) return true;
  return false;
}

bool Formula::has_forall() const {
  if (kind_ == Kind::Forall) return true;
  if (left_ && left_->has_forall()) return true;
  if (right_ && right_->has_forall()) return true;
  return false;
}

std::string Formula::to_string() const { return print(*this, kImpl); }

bool Formula::equals(const Formula& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || symbol_ != other.symbol_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!terms_[i]->equals(*other.terms_[i])) return false;
  if ((left_ == nullptr) != (other.left_ == nullptr)) return false;
  if (left_ && !left_->equals(*other.left_)) return false;
  if ((right_ == nullptr) != (other.right_ == nullptr)) return false;
  if (right_ && !right_->equals(*other.right_)) return false;
  return true;
}

std::vector<std::string> Formula::free_variables() const {
  std::vector<std::string> bound, out;
  free_vars_rec(*this, bound, out);
  return out;
}

FormulaPtr Formula::substitute(const std::string& var, const TermPtr& replacement) const {
  switch (kind_) {
    case Kind::Atom: {
      std::vector<TermPtr> args;
      args.reserve(terms_.size());
      for (const auto& t : terms_) args.push_back(t->substitute(var, replacement));
      return atom(symbol_, std::move(args));
    }
    case Kind::Bottom:
    case Kind::Top:
      return kind_ == Kind::Bottom ? bottom() : top();
    case Kind::Forall:
    case Kind::Exists: {
      if (symbol_ == var) return FormulaPtr(new Formula(*this));
      std::vector<std::string> repl_vars;
      replacement->collect_variables(repl_vars);
      if (std::find(repl_vars.begin(), repl_vars.end(), symbol_) != repl_vars.end()) {
        std::set<std::string> used(repl_vars.begin(), repl_vars.end());
        collect_all_variables(*this, used);
        used.insert(var);
        std::string renamed = fresh_name(symbol_, used);
        auto body = left_->substitute(symbol_, Term::var(renamed));
        return quantified(kind_ == Kind::Forall ? Quant::Forall : Quant::Exists,
                          renamed, body->substitute(var, replacement));
      }
      return quantified(kind_ == Kind::Forall ? Quant::Forall : Quant::Exists,
                        symbol_, left_->substitute(var, replacement));
    }
    case Kind::And:
      return conj(left_->substitute(var, replacement),
                  right_->substitute(var, replacement));
    case Kind::Or:
      return disj(left_->substitute(var, replacement),
                  right_->substitute(var, replacement));
    case Kind::Implies:
      return implies(left_->substitute(var, replacement),
                     right_->substitute(var, replacement));
  }
  return FormulaPtr(new Formula(*this));
}

FormulaPtr Formula::replace_term(const Term& from, const TermPtr& to) const {
  switch (kind_) {
    case Kind::Atom: {
      std::vector<TermPtr> args;
      args.reserve(terms_.size());
      for (const auto& t : terms_) args.push_back(t->replace_term(from, to));
      return atom(symbol_, std::move(args));
    }
    case Kind::Bottom:
    case Kind::Top:
      return kind_ == Kind::Bottom ? bottom() : top();
    case Kind::Forall:
    case Kind::Exists:
      return quantified(kind_ == Kind::Forall ? Quant::Forall : Quant::Exists,
                        symbol_, left_->replace_term(from, to));
    case Kind::And:
      return conj(left_->replace_term(from, to), right_->replace_term(from, to));
    case Kind::Or:
      return disj(left_->replace_term(from, to), right_->replace_term(from, to));
    case Kind::Implies:
      return implies(left_->replace_term(from, to), right_->replace_term(from, to));
  }
  return FormulaPtr(new Formula(*this));
}

bool Formula::mentions_term(const Term& needle) const {
  switch (kind_) {
    case Kind::Atom:
      for (const auto& t : terms_)
        if (t->contains(needle)) return true;
      return false;
    case Kind::Bottom:
    case Kind::Top:
      return false;
    default:
      if (left_ && left_->mentions_term(needle)) return true;
      if (right_ && right_->mentions_term(needle)) return true;
      return false;
  }
}

std::string Formula::atom_key() const { return to_string(); }

void Formula::collect_atoms(std::vector<FormulaPtr>& out) const {
  switch (kind_) {
    case Kind::Atom: {
      auto self = atom(symbol_, terms_);
      for (const auto& a : out)
        if (a->equals(*self)) return;
      out.push_back(self);
      return;
    }
    case Kind::Bottom:
    case Kind::Top:
      return;
    default:
      if (left_) left_->collect_atoms(out);
      if (right_) right_->collect_atoms(out);
      return;
  }
}

FormulaPtr Formula::lower_top() const {
  switch (kind_) {
    case Kind::Top:
      return implies(bottom(), bottom());
    case Kind::Atom:
    case Kind::Bottom:
      return FormulaPtr(new Formula(*this));
    case Kind::Forall:
    case Kind::Exists:
      return quantified(kind_ == Kind::Forall ? Quant::Forall : Quant::Exists,
                        symbol_, left_->lower_top());
    case Kind::And:
      return conj(left_->lower_top(), right_->lower_top());
    case Kind::Or:
      return disj(left_->lower_top(), right_->lower_top());
    case Kind::Implies:
      return implies(left_->lower_top(), right_->lower_top());
  }
  return FormulaPtr(new Formula(*this));
}

bool operator==(const Formula& a, const Formula& b) { return a.equals(b); }

FormulaPtr PrenexFormula::to_formula() const {
  FormulaPtr f = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    f = Formula::quantified(it->first, it->second, f);
  return f;
}

bool PrenexFormula::purely_existential() const {
  for (const auto& [q, v] : prefix)
    if (q == Quant::Forall) return false;
  return true;
}

FormulaPtr rectify(const FormulaPtr& f) {
  auto free = f->free_variables();
  std::set<std::string> used(free.begin(), free.end());
  std::vector<std::pair<std::string, std::string>> renames;
  return rectify_rec(f, used, renames);
}

FormulaPtr disjunction_of(const std::vector<FormulaPtr>& parts) {
  FormulaPtr out = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
    out = Formula::disj(*it, out);
  return out;
}

std::vector<FormulaPtr> flatten_disjunction(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  if (f->kind() == Formula::Kind::Or) {
    auto l = flatten_disjunction(f->left());
    auto r = flatten_disjunction(f->right());
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
  } else {
    out.push_back(f);
  }
  return out;
}

}  // namespace goedel
