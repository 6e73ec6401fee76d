#include "goedel/constraint.hpp"

#include <algorithm>

#include "goedel/errors.hpp"

namespace goedel {

Constraint Constraint::root() { return Constraint({{}, {}}); }

std::size_t Constraint::level() const {
  std::size_t n = 0;
  for (const auto& cls : classes_) n += cls.size();
  return n;
}

int Constraint::class_of(int atom_id) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (int a : classes_[i])
      if (a == atom_id) return static_cast<int>(i);
  throw EvalError("atom A" + std::to_string(atom_id) + " not placed in constraint");
}

bool Constraint::has_atom(int atom_id) const {
  for (const auto& cls : classes_)
    for (int a : cls)
      if (a == atom_id) return true;
  return false;
}

std::vector<Constraint> Constraint::extensions(int new_atom) const {
  if (has_atom(new_atom)) throw EvalError("duplicate atom in extension");
  std::vector<Constraint> out;
  std::size_t k = classes_.size();
  for (std::size_t i = 0; i < k; ++i) {
    // Join class i.
    auto joined = classes_;
    joined[i].push_back(new_atom);
    std::sort(joined[i].begin(), joined[i].end());
    out.push_back(Constraint(std::move(joined)));
    // Fresh singleton between class i and i+1.
    if (i + 1 < k) {
      auto split = classes_;
      split.insert(split.begin() + i + 1, {new_atom});
      out.push_back(Constraint(std::move(split)));
    }
  }
  return out;
}

Constraint Constraint::restrict_to(int max_atom) const {
  std::vector<std::vector<int>> kept;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    std::vector<int> cls;
    for (int a : classes_[i])
      if (a <= max_atom) cls.push_back(a);
    bool end_class = i == 0 || i + 1 == classes_.size();
    if (!cls.empty() || end_class) kept.push_back(std::move(cls));
  }
  return Constraint(std::move(kept));
}

std::string Constraint::to_string(const std::function<std::string(int)>& namer) const {
  std::string out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += " | ";
    std::string cls;
    if (i == 0) cls = "bot";
    for (int a : classes_[i]) {
      if (!cls.empty()) cls += " ";
      cls += namer(a);
    }
    if (i + 1 == classes_.size()) cls += cls.empty() ? "top" : " top";
    out += cls;
  }
  return out;
}

std::string Constraint::to_string() const {
  return to_string([](int a) { return "A" + std::to_string(a); });
}

namespace {

int eval_order_type(const Formula& f, const Constraint& c,
                    const std::function<int(const Formula&)>& atom_id) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return c.class_of(atom_id(f));
    case Formula::Kind::Bottom:
      return c.bottom_class();
    case Formula::Kind::Top:
      return c.top_class();
    case Formula::Kind::And:
      return std::min(eval_order_type(*f.left(), c, atom_id),
                      eval_order_type(*f.right(), c, atom_id));
    case Formula::Kind::Or:
      return std::max(eval_order_type(*f.left(), c, atom_id),
                      eval_order_type(*f.right(), c, atom_id));
    case Formula::Kind::Implies: {
      int a = eval_order_type(*f.left(), c, atom_id);
      int b = eval_order_type(*f.right(), c, atom_id);
      return a <= b ? c.top_class() : b;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      throw EvalError("order-type evaluation is quantifier-free");
  }
  throw EvalError("unreachable");
}

}  // namespace

int eval_under_constraint(const FormulaPtr& f, const Constraint& c,
                          const std::function<int(const Formula&)>& atom_id) {
  return eval_order_type(*f, c, atom_id);
}

bool fulfills(const std::function<Value(int)>& value_of, const Constraint& c) {
  std::size_t k = c.class_count();
  std::vector<Value> rep(k);
  std::vector<bool> have(k, false);
  rep[0] = Value(0);
  have[0] = true;
  rep[k - 1] = Value(1);
  have[k - 1] = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (int a : c.classes()[i]) {
      Value v = value_of(a);
      if (!have[i]) {
        rep[i] = v;
        have[i] = true;
      } else if (rep[i] != v) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!have[i] || !have[i + 1]) continue;  // unconstrained gap class
    if (!(rep[i] < rep[i + 1])) return false;
  }
  // Every class between two valued classes must itself be valued in a
  // fulfilling interpretation; empty gap classes cannot occur outside
  // restricted constraints, so treat them as unfulfillable.
  for (std::size_t i = 0; i < k; ++i)
    if (!have[i]) return false;
  return true;
}

std::vector<Value> realize_constraint(const Constraint& c, const SymbolicValueSet& vset,
                                      const Value& cap) {
  if (cap <= 0 || cap >= 1) throw UnfulfillableError("cap must lie strictly in (0,1)");
  std::size_t k = c.class_count();
  std::vector<Value> h(k);
  h[0] = Value(0);
  h[k - 1] = Value(1);
  if (k == 2) return h;
  std::size_t interior = k - 2;

  Classification cls = classify(vset);
  switch (cls.kind) {
    case SetCardinality::Finite: {
      auto values = vset.finite_values();
      if (k > values.size())
        throw UnfulfillableError("constraint has " + std::to_string(k) +
                                 " classes but the set only " +
                                 std::to_string(values.size()) + " values");
      for (std::size_t j = 1; j + 1 < k; ++j) h[j] = values[j];
      return h;
    }
    case SetCardinality::Uncountable: {
      Value prev(0);
      for (std::size_t j = 1; j + 1 < k; ++j) {
        auto x = witness_between(vset, prev, cap);
        if (!x)
          throw UnfulfillableError("no dense-suborder value between " +
                                   value_to_string(prev) + " and " +
                                   value_to_string(cap));
        h[j] = *x;
        prev = *x;
      }
      return h;
    }
    case SetCardinality::CountablyInfinite: {
      auto vals = ascending_interior_values(vset, interior, cap);
      if (!vals)
        throw UnfulfillableError("not enough sequence values below the cap");
      for (std::size_t j = 1; j + 1 < k; ++j) h[j] = (*vals)[j - 1];
      return h;
    }
  }
  throw UnfulfillableError("unreachable");
}

}  // namespace goedel
