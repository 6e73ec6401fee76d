#include "goedel/prover.hpp"

#include <algorithm>
#include <chrono>

#include "goedel/errors.hpp"

namespace goedel {

namespace {

struct GroundInstance {
  std::vector<TermPtr> tuple;
  FormulaPtr formula;
};

std::vector<GroundInstance> ground_instances(const FormulaPtr& matrix,
                                             const std::vector<std::string>& vars,
                                             std::size_t ell, HerbrandEnumerator& en) {
  std::vector<GroundInstance> out;
  for (auto& tuple : ell_instances(matrix, vars, ell, en)) {
    FormulaPtr g = matrix;
    for (std::size_t i = 0; i < vars.size(); ++i) g = g->substitute(vars[i], tuple[i]);
    out.push_back({std::move(tuple), std::move(g)});
  }
  return out;
}

// Candidate countermodel from an open constraint: the domain is an initial
// segment of the Herbrand universe covering the constraint's terms,
// functions act syntactically (clamped at the frontier), and atom values
// realize the constraint; atoms beyond it continue strictly descending
// where the set allows.
struct CandidateBuild {
  Interpretation interp;
  std::vector<std::string> domain_terms;
};

CandidateBuild build_candidate(const Constraint& c, HerbrandEnumerator& en,
                               std::size_t ell, const SymbolicValueSet& vset,
                               const Value& cap) {
  auto closure = ell_term_closure(en, ell);
  std::size_t max_index = 0;
  for (const auto& t : closure) {
    for (std::size_t i = 0;; ++i) {
      if (en.term(i)->equals(*t)) {
        max_index = std::max(max_index, i + 1);
        break;
      }
    }
  }
  std::size_t domain = std::max<std::size_t>(max_index, 1);

  CandidateBuild out;
  out.interp.domain_size = static_cast<int>(domain);
  std::vector<TermPtr> elems;
  for (std::size_t i = 0; i < domain; ++i) {
    elems.push_back(en.term(i));
    out.domain_terms.push_back(en.term(i)->to_string());
  }
  auto index_of = [&](const Term& t) -> int {
    for (std::size_t i = 0; i < domain; ++i)
      if (elems[i]->equals(t)) return static_cast<int>(i);
    return -1;
  };

  const Signature& sig = en.signature();
  for (const auto& [name, arity] : sig.functions()) {
    FuncTable ft;
    ft.arity = arity;
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= domain;
    ft.table.resize(entries);
    std::vector<int> args(arity, 0);
    for (std::size_t e = 0; e < entries; ++e) {
      std::vector<TermPtr> arg_terms;
      for (int a : args) arg_terms.push_back(elems[a]);
      int idx = index_of(*Term::app(name, arg_terms));
      if (idx < 0) idx = arity > 0 ? args[0] : 0;  // frontier clamp
      ft.table[Interpretation::flat_index(args, out.interp.domain_size)] = idx;
      int j = 0;
      while (j < arity && ++args[j] == static_cast<int>(domain)) args[j++] = 0;
    }
    out.interp.funcs[name] = std::move(ft);
  }

  auto h = realize_constraint(c, vset, cap);
  Classification cls = classify(vset);

  // Values for atoms beyond the verified segment: keep descending.
  Value prev = cap;
  for (std::size_t j = 1; j + 1 < h.size(); ++j) prev = std::min(prev, h[j]);
  auto next_below = [&](const Value& bound) -> Value {
    if (cls.kind == SetCardinality::Uncountable) {
      auto x = witness_between(vset, Value(0), bound);
      if (x) return *x;
    } else if (cls.kind == SetCardinality::CountablyInfinite) {
      for (const auto& p : vset.pieces()) {
        if (auto* sq = std::get_if<SeqPiece>(&p); sq && !sq->ascending) {
          auto num = numerator(Value(1) / bound);
          auto den = denominator(Value(1) / bound);
          long long k = (num / den).convert_to<long long>() + 1;
          while (Value(1, k) >= bound) ++k;
          return Value(1, k);
        }
      }
    }
    return Value(0);
  };

  for (const auto& [name, arity] : sig.predicates()) {
    PredTable pt;
    pt.arity = arity;
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) entries *= domain;
    pt.table.resize(entries, Value(0));
    std::vector<int> args(arity, 0);
    for (std::size_t e = 0; e < entries; ++e) {
      std::vector<TermPtr> arg_terms;
      for (int a : args) arg_terms.push_back(elems[a]);
      FormulaPtr atom = Formula::atom(name, arg_terms);
      auto id = en.atom_index(*atom, ell);
      Value v;
      if (id && c.has_atom(static_cast<int>(*id) + 1)) {
        v = h[c.class_of(static_cast<int>(*id) + 1)];
      } else {
        v = next_below(prev);
        if (v > 0) prev = v;
      }
      pt.table[Interpretation::flat_index(args, out.interp.domain_size)] = v;
      int j = 0;
      while (j < arity && ++args[j] == static_cast<int>(domain)) args[j++] = 0;
    }
    out.interp.preds[name] = std::move(pt);
  }
  return out;
}

Value choose_cap(const SymbolicValueSet& vset, std::size_t class_count) {
  Classification cls = classify(vset);
  if (cls.kind == SetCardinality::CountablyInfinite) {
    for (const auto& p : vset.pieces())
      if (auto* sq = std::get_if<SeqPiece>(&p); sq && sq->ascending) {
        // Leave room for class_count ascending values 1 - 1/k below the cap.
        long long k = 2 * static_cast<long long>(class_count) + 4;
        return Value(k - 1, k);
      }
  }
  return Value(9, 10);
}

}  // namespace

ProofResult prove_prenex(const PrenexFormula& a, const SymbolicValueSet& vset,
                         const Budget& budget) {
  if (!a.to_formula()->is_closed())
    throw EvalError("prover requires a closed formula");
  if (a.matrix->has_quantifier())
    throw EvalError("prenex matrix must be quantifier-free");

  HerbrandForm hf = herbrand_form(a);
  const FormulaPtr& matrix = hf.herbrand.matrix;
  std::vector<std::string> vars;
  for (const auto& [q, v] : hf.herbrand.prefix) vars.push_back(v);

  HerbrandEnumerator en(Signature::of_formula(hf.herbrand.to_formula()));
  Classification cls = classify(vset);
  std::size_t prune_classes =
      cls.kind == SetCardinality::Finite ? cls.finite_size : 0;

  TreeStats stats;
  std::vector<Constraint> frontier{Constraint::root()};
  std::vector<std::vector<TermPtr>> witnesses;
  auto started = std::chrono::steady_clock::now();

  for (std::size_t ell = 0;; ++ell) {
    auto instances = ground_instances(matrix, vars, ell, en);
    auto atom_id = [&](const Formula& atom) {
      auto id = en.atom_index(atom, ell);
      if (!id) throw EvalError("instance atom outside X_ell: " + atom.to_string());
      return static_cast<int>(*id) + 1;
    };

    std::vector<Constraint> open;
    for (const auto& node : frontier) {
      ++stats.nodes;
      stats.max_level = static_cast<int>(ell);
      const std::vector<TermPtr>* witness = nullptr;
      for (const auto& inst : instances) {
        if (eval_under_constraint(inst.formula, node, atom_id) == node.top_class()) {
          witness = &inst.tuple;
          break;
        }
      }
      if (witness) {
        ++stats.leaves;
        bool dup = false;
        for (const auto& have : witnesses) {
          if (have.size() == witness->size()) {
            bool same = true;
            for (std::size_t i = 0; i < have.size(); ++i)
              if (!have[i]->equals(*(*witness)[i])) same = false;
            if (same) dup = true;
          }
        }
        if (!dup) witnesses.push_back(*witness);
        continue;
      }
      open.push_back(node);
    }

    if (open.empty()) {
      // Every branch closed: the disjunction of the witnesses is valid.
      ValidCertificate valid;
      valid.stats = stats;
      valid.instances = witnesses;
      std::vector<FormulaPtr> parts;
      for (const auto& tuple : witnesses) {
        FormulaPtr g = matrix;
        for (std::size_t i = 0; i < vars.size(); ++i)
          g = g->substitute(vars[i], tuple[i]);
        parts.push_back(std::move(g));
      }
      valid.disjunction = disjunction_of(parts);
      valid.outline = reverse_skolemize(hf, witnesses);
      check_outline(valid.outline, valid.disjunction, a.to_formula());
      return valid;
    }

    // A finite base cannot grow past its size: surviving constraints are
    // genuine countermodels (all instances stay below 1 forever).
    if (en.base_finite() && ell >= en.finite_base_size()) {
      const Constraint& c = open.front();
      Value cap = choose_cap(vset, c.class_count());
      auto cand = build_candidate(c, en, ell, vset, cap);
      CountermodelResult cm;
      cm.value_count = static_cast<int>(c.class_count());
      cm.interpretation = std::move(cand.interp);
      cm.value = eval(cm.interpretation, a.to_formula());
      return cm;
    }

    bool out_of_time =
        budget.wall_clock &&
        std::chrono::steady_clock::now() - started >= *budget.wall_clock;
    if (static_cast<int>(ell) >= budget.max_level ||
        stats.nodes >= budget.max_nodes || out_of_time) {
      const Constraint& deepest = open.front();
      Value cap = choose_cap(vset, deepest.class_count());
      UnknownResult unknown;
      unknown.verified_level = static_cast<int>(ell);
      unknown.cap = cap;
      unknown.stats = stats;
      auto namer = [&](int id) { return en.atom(id - 1)->to_string(); };
      for (const auto& c : open) unknown.open_constraints.push_back(c.to_string(namer));
      auto cand = build_candidate(deepest, en, ell, vset, cap);
      unknown.candidate = std::move(cand.interp);
      unknown.domain_terms = std::move(cand.domain_terms);
      return unknown;
    }

    std::vector<Constraint> next;
    for (const auto& node : open) {
      for (auto& child : node.extensions(static_cast<int>(ell) + 1)) {
        if (prune_classes > 0 && child.class_count() > prune_classes) {
          ++stats.pruned;
          continue;
        }
        next.push_back(std::move(child));
      }
    }
    if (next.empty())
      throw Error("internal: open constraints produced no children");
    frontier = std::move(next);
  }
}

ProofResult prove_existential(const PrenexFormula& a, const SymbolicValueSet& vset,
                              const Budget& budget) {
  if (!a.purely_existential())
    throw EvalError("prove_existential requires a purely existential prefix");
  return prove_prenex(a, vset, budget);
}

std::optional<FiniteCountermodel> finite_counter_search(const FormulaPtr& a, int max_m,
                                                        int max_domain,
                                                        unsigned long long guard,
                                                        int jobs) {
  for (int m = 2; m <= max_m; ++m) {
    BruteForceOptions opts;
    opts.max_domain = max_domain;
    opts.guard = guard;
    opts.jobs = jobs;
    auto cm = brute_force_validity(a, vm_values(m), opts);
    if (cm) return FiniteCountermodel{m, std::move(cm->interpretation), std::move(cm->value)};
  }
  return std::nullopt;
}

}  // namespace goedel
