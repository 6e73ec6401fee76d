#include "goedel/certificate.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

// ---------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------

struct Disjunct {
  std::vector<TermPtr> terms;  // instance term per original prefix position
  int next;                    // deepest unrestored position; -1 when done
};

struct Builder {
  const HerbrandForm& hf;
  std::vector<Disjunct> disjuncts;
  ProofOutline outline;
  FormulaPtr current;

  explicit Builder(const HerbrandForm& h) : hf(h) {}

  int positions() const { return static_cast<int>(hf.original.prefix.size()); }
  Quant quant_at(int pos) const { return hf.original.prefix[pos].first; }
  const std::string& var_at(int pos) const { return hf.original.prefix[pos].second; }

  // Formula of a disjunct with position `abstract_pos` left as its free
  // prefix variable (-1 abstracts nothing).
  FormulaPtr build(const Disjunct& d, int abstract_pos) const {
    FormulaPtr f = hf.original.matrix;
    for (int pos = 0; pos <= d.next; ++pos)
      if (pos != abstract_pos) f = f->substitute(var_at(pos), d.terms[pos]);
    for (int pos = positions() - 1; pos > d.next; --pos)
      f = Formula::quantified(quant_at(pos), var_at(pos), f);
    return f;
  }

  FormulaPtr formula_of(const Disjunct& d) const { return build(d, -1); }

  FormulaPtr comb() const {
    std::vector<FormulaPtr> parts;
    for (const auto& d : disjuncts) parts.push_back(formula_of(d));
    return disjunction_of(parts);
  }

  void emit(int rule, FormulaPtr conclusion) {
    outline.steps.push_back({rule, current, conclusion});
    current = std::move(conclusion);
  }

  void bring_to_front(std::size_t i) {
    if (i == 0) return;
    Disjunct d = disjuncts[i];
    disjuncts.erase(disjuncts.begin() + i);
    disjuncts.insert(disjuncts.begin(), std::move(d));
    emit(1, comb());
  }

  bool contract_once() {
    for (std::size_t i = 0; i < disjuncts.size(); ++i) {
      for (std::size_t j = i + 1; j < disjuncts.size(); ++j) {
        if (formula_of(disjuncts[i])->equals(*formula_of(disjuncts[j]))) {
          disjuncts.erase(disjuncts.begin() + j);
          emit(3, comb());
          return true;
        }
      }
    }
    return false;
  }

  // Restores the front disjunct's next position (an existential).
  void restore_exists() {
    Disjunct& d = disjuncts[0];
    int j = d.next;
    const std::string& y = var_at(j);
    FormulaPtr abstracted = build(d, j);
    if (disjuncts.size() == 1) {
      emit(5, Formula::exists(y, abstracted));
    } else {
      std::vector<FormulaPtr> rest;
      for (std::size_t i = 1; i < disjuncts.size(); ++i)
        rest.push_back(formula_of(disjuncts[i]));
      FormulaPtr rest_comb = disjunction_of(rest);
      emit(5, Formula::exists(y, Formula::disj(abstracted, rest_comb)));
      emit(7, Formula::disj(Formula::exists(y, abstracted), rest_comb));
    }
    --d.next;
  }

  void restore_forall() {
    Disjunct& d = disjuncts[0];
    int j = d.next;
    const std::string& y = var_at(j);
    FormulaPtr abstracted = build(d, j);
    if (disjuncts.size() == 1) {
      emit(4, Formula::forall(y, abstracted));
    } else {
      std::vector<FormulaPtr> rest;
      for (std::size_t i = 1; i < disjuncts.size(); ++i)
        rest.push_back(formula_of(disjuncts[i]));
      FormulaPtr rest_comb = disjunction_of(rest);
      emit(4, Formula::forall(y, Formula::disj(abstracted, rest_comb)));
      emit(6, Formula::disj(Formula::forall(y, abstracted), rest_comb));
    }
    --d.next;
  }

  // A universal position is ripe when its Skolem term occurs nowhere else
  // in the would-be conclusion: not in other disjuncts and not in its own
  // earlier instance terms.
  bool ripe(std::size_t i) const {
    const Disjunct& d = disjuncts[i];
    const Term& s = *d.terms[d.next];
    for (std::size_t k = 0; k < disjuncts.size(); ++k) {
      if (k == i) continue;
      if (formula_of(disjuncts[k])->mentions_term(s)) return false;
    }
    return !build(d, d.next)->mentions_term(s);
  }

  ProofOutline run(const std::vector<std::vector<TermPtr>>& tuples) {
    if (tuples.empty()) throw CertificateError("empty Herbrand disjunction");
    for (const auto& t : tuples)
      disjuncts.push_back(Disjunct{hf.position_terms(t), positions() - 1});
    current = comb();

    for (;;) {
      if (contract_once()) continue;

      bool all_done = true;
      for (const auto& d : disjuncts)
        if (d.next >= 0) all_done = false;
      if (all_done) {
        if (disjuncts.size() != 1)
          throw CertificateError("distinct fully-restored disjuncts remain");
        break;
      }

      // Existential restorations are always possible.
      bool acted = false;
      for (std::size_t i = 0; i < disjuncts.size() && !acted; ++i) {
        if (disjuncts[i].next >= 0 &&
            quant_at(disjuncts[i].next) == Quant::Exists) {
          bring_to_front(i);
          restore_exists();
          acted = true;
        }
      }
      if (acted) continue;

      // Universal restorations: deepest ripe Skolem term first.
      std::size_t best = disjuncts.size();
      int best_depth = -1;
      for (std::size_t i = 0; i < disjuncts.size(); ++i) {
        const Disjunct& d = disjuncts[i];
        if (d.next < 0) continue;
        if (!ripe(i)) continue;
        int depth = d.terms[d.next]->depth();
        if (depth > best_depth) {
          best_depth = depth;
          best = i;
        }
      }
      if (best == disjuncts.size())
        throw CertificateError("no applicable reverse-Skolemization step");
      bring_to_front(best);
      restore_forall();
    }

    FormulaPtr target = hf.original.to_formula();
    if (!current->equals(*target))
      throw CertificateError("reverse Skolemization ended at '" +
                             current->to_string() + "' instead of the original");
    return std::move(outline);
  }
};

// ---------------------------------------------------------------------
// Checker (independent of the builder's bookkeeping)
// ---------------------------------------------------------------------

bool match_term(const Term& pattern, const TermPtr& actual, const std::string& x,
                bool shadowed, std::optional<TermPtr>& s) {
  if (pattern.is_variable() && pattern.symbol() == x && !shadowed) {
    if (s) return (*s)->equals(*actual);
    s = actual;
    return true;
  }
  if (pattern.kind() != actual->kind() || pattern.symbol() != actual->symbol() ||
      pattern.args().size() != actual->args().size())
    return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match_term(*pattern.args()[i], actual->args()[i], x, shadowed, s))
      return false;
  return true;
}

bool match_formula(const Formula& pattern, const Formula& actual, const std::string& x,
                   bool shadowed, std::optional<TermPtr>& s) {
  if (pattern.kind() != actual.kind() || pattern.symbol() != actual.symbol())
    return false;
  switch (pattern.kind()) {
    case Formula::Kind::Atom: {
      if (pattern.terms().size() != actual.terms().size()) return false;
      for (std::size_t i = 0; i < pattern.terms().size(); ++i)
        if (!match_term(*pattern.terms()[i], actual.terms()[i], x, shadowed, s))
          return false;
      return true;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return match_formula(*pattern.left(), *actual.left(), x,
                           shadowed || pattern.symbol() == x, s);
    default:
      return match_formula(*pattern.left(), *actual.left(), x, shadowed, s) &&
             match_formula(*pattern.right(), *actual.right(), x, shadowed, s);
  }
}

std::multiset<std::string> leaf_keys(const FormulaPtr& f) {
  std::multiset<std::string> out;
  for (const auto& part : flatten_disjunction(f)) out.insert(part->to_string());
  return out;
}

std::vector<std::string> leaf_seq(const FormulaPtr& f) {
  std::vector<std::string> out;
  for (const auto& part : flatten_disjunction(f)) out.push_back(part->to_string());
  return out;
}

void fail(std::size_t index, const std::string& why) {
  throw CertificateError("step " + std::to_string(index + 1) + ": " + why);
}

void check_step(std::size_t index, const OutlineStep& step) {
  const FormulaPtr& p = step.premise;
  const FormulaPtr& c = step.conclusion;
  switch (step.rule) {
    case 1: {
      if (leaf_keys(p) != leaf_keys(c))
        fail(index, "commutativity must permute the disjuncts");
      return;
    }
    case 2: {
      if (leaf_seq(p) != leaf_seq(c))
        fail(index, "associativity must preserve the disjunct sequence");
      return;
    }
    case 3: {
      auto pk = leaf_keys(p), ck = leaf_keys(c);
      if (pk.size() != ck.size() + 1)
        fail(index, "contraction removes exactly one disjunct");
      std::multiset<std::string> diff;
      std::set_difference(pk.begin(), pk.end(), ck.begin(), ck.end(),
                          std::inserter(diff, diff.begin()));
      if (diff.size() != 1 || ck.count(*diff.begin()) == 0)
        fail(index, "contraction may only drop a duplicate disjunct");
      return;
    }
    case 4:
    case 5: {
      bool universal = step.rule == 4;
      if (c->kind() != (universal ? Formula::Kind::Forall : Formula::Kind::Exists))
        fail(index, "conclusion must introduce the quantifier");
      const std::string& x = c->symbol();
      std::optional<TermPtr> s;
      if (!match_formula(*c->left(), *p, x, false, s))
        fail(index, "premise is not an instance of the conclusion's body");
      if (universal && s) {
        const Term& witness = **s;
        if (witness.is_variable()) {
          auto fv = c->free_variables();
          if (std::find(fv.begin(), fv.end(), witness.symbol()) != fv.end())
            fail(index, "generalized variable still free in the conclusion");
        } else {
          std::vector<std::string> vars;
          witness.collect_variables(vars);
          if (!vars.empty())
            fail(index, "generalization witness must be ground or a variable");
          if (c->mentions_term(witness))
            fail(index, "generalization witness '" + witness.to_string() +
                            "' occurs in the conclusion");
        }
      }
      return;
    }
    case 6:
    case 7: {
      bool universal = step.rule == 6;
      auto qkind = universal ? Formula::Kind::Forall : Formula::Kind::Exists;
      if (p->kind() != qkind || p->left()->kind() != Formula::Kind::Or)
        fail(index, "premise must be a quantified disjunction");
      const std::string& x = p->symbol();
      if (c->kind() != Formula::Kind::Or || c->left()->kind() != qkind ||
          c->left()->symbol() != x)
        fail(index, "conclusion must confine the quantifier to the left disjunct");
      if (!c->left()->left()->equals(*p->left()->left()) ||
          !c->right()->equals(*p->left()->right()))
        fail(index, "distribution must not alter the disjuncts");
      auto fv = c->right()->free_variables();
      if (std::find(fv.begin(), fv.end(), x) != fv.end())
        fail(index, "quantified variable free in the unquantified disjunct");
      return;
    }
    default:
      fail(index, "unknown rule " + std::to_string(step.rule));
  }
}

}  // namespace

ProofOutline reverse_skolemize(const HerbrandForm& hf,
                               const std::vector<std::vector<TermPtr>>& tuples) {
  return Builder(hf).run(tuples);
}

void check_outline(const ProofOutline& outline, const FormulaPtr& disjunction,
                   const FormulaPtr& original) {
  if (outline.empty()) {
    if (!disjunction->equals(*original))
      throw CertificateError("empty outline for distinct endpoint formulas");
    return;
  }
  if (!outline.first_line()->equals(*disjunction))
    throw CertificateError("outline does not start at the Herbrand disjunction");
  if (!outline.last_line()->equals(*original))
    throw CertificateError("outline does not end at the original formula");
  for (std::size_t i = 0; i < outline.steps.size(); ++i) {
    if (i > 0 &&
        !outline.steps[i].premise->equals(*outline.steps[i - 1].conclusion))
      throw CertificateError("step " + std::to_string(i + 1) +
                             ": premise differs from the previous conclusion");
    check_step(i, outline.steps[i]);
  }
}

}  // namespace goedel
