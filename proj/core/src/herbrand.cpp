#include "goedel/herbrand.hpp"

#include <algorithm>

#include "goedel/errors.hpp"

namespace goedel {

std::vector<TermPtr> HerbrandForm::position_terms(
    const std::vector<TermPtr>& tuple) const {
  std::vector<TermPtr> out;
  out.reserve(positions.size());
  for (const auto& p : positions) {
    if (p.quant == Quant::Exists) {
      out.push_back(tuple.at(p.tuple_index));
    } else {
      std::vector<TermPtr> args;
      args.reserve(p.arg_tuple_indices.size());
      for (int idx : p.arg_tuple_indices) args.push_back(tuple.at(idx));
      out.push_back(Term::app(p.skolem_symbol, std::move(args)));
    }
  }
  return out;
}

HerbrandForm herbrand_form(const PrenexFormula& a) {
  Signature sig = Signature::of_formula(a.to_formula());
  HerbrandForm out;
  out.original = a;

  int next_const = 0, next_func = 1;
  auto fresh_constant = [&]() {
    for (;; ++next_const) {
      std::string name = "c" + std::to_string(next_const);
      if (!sig.has_symbol(name)) {
        sig.add_function(name, 0);
        ++next_const;
        return name;
      }
    }
  };
  auto fresh_function = [&](int arity) {
    for (;; ++next_func) {
      std::string name = "f" + std::to_string(next_func);
      if (!sig.has_symbol(name)) {
        sig.add_function(name, arity);
        ++next_func;
        return name;
      }
    }
  };

  std::vector<std::pair<Quant, std::string>> ex_prefix;
  std::vector<std::string> ex_vars;
  FormulaPtr matrix = a.matrix;
  for (const auto& [q, v] : a.prefix) {
    SkolemPosition pos;
    pos.quant = q;
    pos.variable = v;
    if (q == Quant::Exists) {
      pos.tuple_index = static_cast<int>(ex_vars.size());
      ex_prefix.emplace_back(Quant::Exists, v);
      ex_vars.push_back(v);
    } else {
      int k = static_cast<int>(ex_vars.size());
      pos.skolem_symbol = k == 0 ? fresh_constant() : fresh_function(k);
      std::vector<TermPtr> args;
      for (int i = 0; i < k; ++i) {
        pos.arg_tuple_indices.push_back(i);
        args.push_back(Term::var(ex_vars[i]));
      }
      matrix = matrix->substitute(v, Term::app(pos.skolem_symbol, std::move(args)));
    }
    out.positions.push_back(std::move(pos));
  }
  out.herbrand = PrenexFormula{std::move(ex_prefix), std::move(matrix)};
  return out;
}

HerbrandEnumerator::HerbrandEnumerator(Signature sig) : sig_(std::move(sig)) {
  added_ = sig_.herbrand_augment();
}

void HerbrandEnumerator::ensure_terms(std::size_t n) {
  while (terms_.size() < n) {
    int depth = max_depth_done_ + 1;
    std::vector<TermPtr> stage;
    if (depth == 0) {
      for (const auto& [name, arity] : sig_.functions())
        if (arity == 0) stage.push_back(Term::constant(name));
    } else {
      for (const auto& [name, arity] : sig_.functions()) {
        if (arity == 0) continue;
        // All argument tuples over terms of depth < `depth` with at least
        // one argument of depth exactly `depth`-1.
        std::vector<std::size_t> odo(arity, 0);
        std::size_t pool = terms_.size();
        for (;;) {
          int maxd = 0;
          for (std::size_t i : odo) maxd = std::max(maxd, terms_[i]->depth());
          if (maxd == depth - 1) {
            std::vector<TermPtr> args;
            for (std::size_t i : odo) args.push_back(terms_[i]);
            stage.push_back(Term::app(name, std::move(args)));
          }
          int j = arity - 1;
          while (j >= 0 && ++odo[j] == pool) odo[j--] = 0;
          if (j < 0) break;
        }
      }
    }
    std::sort(stage.begin(), stage.end(),
              [](const TermPtr& a, const TermPtr& b) { return term_less(*a, *b); });
    depth_begin_.push_back(terms_.size());
    terms_.insert(terms_.end(), stage.begin(), stage.end());
    max_depth_done_ = depth;
    if (stage.empty() && depth > 0)
      throw EvalError("Herbrand universe exhausted; signature not augmented");
  }
}

TermPtr HerbrandEnumerator::term(std::size_t i) {
  ensure_terms(i + 1);
  return terms_[i];
}

void HerbrandEnumerator::push_atom(const FormulaPtr& a) {
  std::string key = a->atom_key();
  if (atom_ids_.count(key)) return;
  atom_ids_[key] = atoms_.size();
  atoms_.push_back(a);
}

void HerbrandEnumerator::ensure_atoms(std::size_t n) {
  if (base_finite() && n > finite_base_size()) n = finite_base_size();
  while (atoms_.size() < n) {
    std::size_t stage = atom_stage_done_;
    if (stage == 0) {
      for (const auto& [name, arity] : sig_.predicates())
        if (arity == 0) push_atom(Formula::atom(name));
    } else {
      ensure_terms(stage);
      for (const auto& [name, arity] : sig_.predicates()) {
        if (arity == 0) continue;
        // Tuples over term indices 0..stage-1 whose maximum is stage-1,
        // in lexicographic order.
        std::vector<std::size_t> odo(arity, 0);
        for (;;) {
          std::size_t maxi = 0;
          for (std::size_t i : odo) maxi = std::max(maxi, i);
          if (maxi == stage - 1) {
            std::vector<TermPtr> args;
            for (std::size_t i : odo) args.push_back(terms_[i]);
            push_atom(Formula::atom(name, std::move(args)));
          }
          int j = arity - 1;
          while (j >= 0 && ++odo[j] == stage) odo[j--] = 0;
          if (j < 0) break;
        }
      }
    }
    ++atom_stage_done_;
  }
}

FormulaPtr HerbrandEnumerator::atom(std::size_t i) {
  ensure_atoms(i + 1);
  if (i >= atoms_.size()) throw EvalError("Herbrand base exhausted");
  return atoms_[i];
}

bool HerbrandEnumerator::base_finite() const {
  for (const auto& [name, arity] : sig_.predicates())
    if (arity > 0) return false;
  return true;
}

std::size_t HerbrandEnumerator::finite_base_size() const {
  std::size_t n = 0;
  for (const auto& [name, arity] : sig_.predicates())
    if (arity == 0) ++n;
  return n;
}

std::optional<std::size_t> HerbrandEnumerator::atom_index(
    const Formula& ground_atom, std::size_t limit) {
  ensure_atoms(limit);
  auto it = atom_ids_.find(ground_atom.atom_key());
  if (it == atom_ids_.end() || it->second >= limit) return std::nullopt;
  return it->second;
}

namespace {

void subterms_of(const TermPtr& t, std::vector<TermPtr>& out) {
  bool present = false;
  for (const auto& have : out) {
    if (have->equals(*t)) {
      present = true;
      break;
    }
  }
  if (!present) out.push_back(t);
  for (const auto& a : t->args()) subterms_of(a, out);
}

}  // namespace

std::vector<TermPtr> ell_term_closure(HerbrandEnumerator& en, std::size_t ell) {
  std::vector<TermPtr> closure;
  for (std::size_t i = 0; i < ell; ++i) {
    if (en.base_finite() && i >= en.finite_base_size()) break;
    for (const auto& t : en.atom(i)->terms()) subterms_of(t, closure);
  }
  std::sort(closure.begin(), closure.end(),
            [](const TermPtr& a, const TermPtr& b) { return term_less(*a, *b); });
  return closure;
}

std::vector<std::vector<TermPtr>> ell_instances(
    const FormulaPtr& matrix, const std::vector<std::string>& prefix_vars,
    std::size_t ell, HerbrandEnumerator& en) {
  std::vector<FormulaPtr> atoms;
  matrix->collect_atoms(atoms);

  // Ground atoms of the matrix itself must already lie in X_ell.
  for (const auto& a : atoms) {
    if (!a->free_variables().empty()) continue;
    if (!en.atom_index(*a, ell)) return {};
  }

  auto closure = ell_term_closure(en, ell);
  std::vector<std::vector<TermPtr>> candidates;
  for (const auto& v : prefix_vars) {
    bool occurs = false;
    for (const auto& a : atoms) {
      auto fv = a->free_variables();
      if (std::find(fv.begin(), fv.end(), v) != fv.end()) {
        occurs = true;
        break;
      }
    }
    if (occurs) {
      if (closure.empty()) return {};
      candidates.push_back(closure);
    } else {
      candidates.push_back({en.term(0)});
    }
  }

  std::vector<std::vector<TermPtr>> tuples;
  if (prefix_vars.empty()) {
    tuples.push_back({});
  } else {
    std::vector<std::size_t> odo(prefix_vars.size(), 0);
    for (;;) {
      std::vector<TermPtr> tuple;
      for (std::size_t i = 0; i < odo.size(); ++i)
        tuple.push_back(candidates[i][odo[i]]);
      tuples.push_back(std::move(tuple));
      int j = static_cast<int>(odo.size()) - 1;
      while (j >= 0 && ++odo[j] == candidates[j].size()) odo[j--] = 0;
      if (j < 0) break;
    }
  }

  std::vector<std::vector<TermPtr>> accepted;
  for (auto& tuple : tuples) {
    bool ok = true;
    for (const auto& a : atoms) {
      if (!ok) break;
      FormulaPtr ground = a;
      for (std::size_t i = 0; i < prefix_vars.size(); ++i)
        ground = ground->substitute(prefix_vars[i], tuple[i]);
      if (!ground->free_variables().empty())
        throw EvalError("matrix atom with a variable outside the prefix: " +
                        a->to_string());
      if (!en.atom_index(*ground, ell)) ok = false;
    }
    if (ok) accepted.push_back(std::move(tuple));
  }
  return accepted;
}

}  // namespace goedel
