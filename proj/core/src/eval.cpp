#include "goedel/eval.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "goedel/errors.hpp"
#include "goedel/signature.hpp"

namespace goedel {

namespace {

using Env = std::vector<std::pair<std::string, int>>;

int lookup_var(const std::string& name, const Interpretation& interp, const Env& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return it->second;
  auto a = interp.assignment.find(name);
  if (a != interp.assignment.end()) return a->second;
  return -1;
}

int eval_term(const Term& t, const Interpretation& interp, const Env& env) {
  if (t.is_variable()) {
    int d = lookup_var(t.symbol(), interp, env);
    if (d >= 0) return d;
    // Free variables are constants when the tables provide them.
    auto f = interp.funcs.find(t.symbol());
    if (f != interp.funcs.end() && f->second.arity == 0) return f->second.table.at(0);
    throw EvalError("unbound variable '" + t.symbol() + "'");
  }
  std::vector<int> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(*a, interp, env));
  return interp.apply_function(t.symbol(), args);
}

Value eval_rec(const Formula& f, const Interpretation& interp, Env& env) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<int> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(eval_term(*t, interp, env));
      return interp.predicate_value(f.symbol(), args);
    }
    case Formula::Kind::Bottom:
      return Value(0);
    case Formula::Kind::Top:
      return Value(1);
    case Formula::Kind::And:
      return std::min(eval_rec(*f.left(), interp, env),
                      eval_rec(*f.right(), interp, env));
    case Formula::Kind::Or:
      return std::max(eval_rec(*f.left(), interp, env),
                      eval_rec(*f.right(), interp, env));
    case Formula::Kind::Implies: {
      Value a = eval_rec(*f.left(), interp, env);
      Value b = eval_rec(*f.right(), interp, env);
      return a > b ? b : Value(1);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool is_forall = f.kind() == Formula::Kind::Forall;
      Value acc = is_forall ? Value(1) : Value(0);
      env.emplace_back(f.symbol(), 0);
      for (int d = 0; d < interp.domain_size; ++d) {
        env.back().second = d;
        Value v = eval_rec(*f.left(), interp, env);
        acc = is_forall ? std::min(acc, v) : std::max(acc, v);
        // min/max over the domain saturate at the lattice ends
        if (is_forall ? acc == 0 : acc == 1) break;
      }
      env.pop_back();
      return acc;
    }
  }
  throw EvalError("unreachable formula kind");
}

// One digit per table entry; functions first (name order), then predicates.
struct ConfigSpace {
  const Signature* sig;
  const std::vector<Value>* values;
  int n;
  std::vector<std::pair<std::string, std::size_t>> func_entries;  // name, count
  std::vector<std::pair<std::string, std::size_t>> pred_entries;
  unsigned long long total = 1;
  bool overflowed = false;

  ConfigSpace(const Signature& s, const std::vector<Value>& vals, int domain)
      : sig(&s), values(&vals), n(domain) {
    auto mul_pow = [&](unsigned long long base, std::size_t exp) {
      for (std::size_t i = 0; i < exp; ++i) {
        if (total > (1ULL << 62) / base) {
          overflowed = true;
          return;
        }
        total *= base;
      }
    };
    for (const auto& [name, arity] : s.functions()) {
      std::size_t entries = 1;
      for (int i = 0; i < arity; ++i) entries *= static_cast<std::size_t>(domain);
      func_entries.emplace_back(name, entries);
      mul_pow(static_cast<unsigned long long>(domain), entries);
      if (overflowed) return;
    }
    for (const auto& [name, arity] : s.predicates()) {
      std::size_t entries = 1;
      for (int i = 0; i < arity; ++i) entries *= static_cast<std::size_t>(domain);
      pred_entries.emplace_back(name, entries);
      mul_pow(static_cast<unsigned long long>(vals.size()), entries);
      if (overflowed) return;
    }
  }

  Interpretation decode(unsigned long long index) const {
    Interpretation interp;
    interp.domain_size = n;
    for (const auto& [name, entries] : func_entries) {
      FuncTable ft;
      ft.arity = sig->function_arity(name);
      ft.table.resize(entries);
      for (std::size_t e = 0; e < entries; ++e) {
        ft.table[e] = static_cast<int>(index % static_cast<unsigned long long>(n));
        index /= static_cast<unsigned long long>(n);
      }
      interp.funcs[name] = std::move(ft);
    }
    std::size_t m = values->size();
    for (const auto& [name, entries] : pred_entries) {
      PredTable pt;
      pt.arity = sig->predicate_arity(name);
      pt.table.resize(entries);
      for (std::size_t e = 0; e < entries; ++e) {
        pt.table[e] = (*values)[static_cast<std::size_t>(index % m)];
        index /= m;
      }
      interp.preds[name] = std::move(pt);
    }
    return interp;
  }
};

void validate_sample(const std::vector<Value>& values) {
  if (values.size() < 2) throw Error("truth value sample needs at least {0, 1}");
  if (!std::is_sorted(values.begin(), values.end()))
    throw Error("truth value sample must be sorted");
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw Error("truth value sample must be distinct");
  if (values.front() != 0 || values.back() != 1)
    throw Error("truth value sample must contain 0 and 1");
}

}  // namespace

Value eval(const Interpretation& interp, const FormulaPtr& f) {
  Env env;
  return eval_rec(*f, interp, env);
}

std::optional<Countermodel> brute_force_validity(const FormulaPtr& f,
                                                 const std::vector<Value>& values,
                                                 const BruteForceOptions& opts) {
  validate_sample(values);
  if (!f->is_closed())
    throw EvalError("brute force requires a closed formula");
  Signature sig = Signature::of_formula(f);

  int max_domain = opts.max_domain;
  bool propositional = !f->has_quantifier() && sig.functions().empty();
  for (const auto& [name, arity] : sig.predicates())
    if (arity > 0) propositional = false;
  if (propositional) max_domain = 1;

  // Guard the whole search space before visiting anything.
  unsigned long long grand_total = 0;
  std::vector<ConfigSpace> spaces;
  for (int n = 1; n <= max_domain; ++n) {
    spaces.emplace_back(sig, values, n);
    if (!spaces.back().overflowed) grand_total += spaces.back().total;
    if (spaces.back().overflowed || grand_total > opts.guard)
      throw GuardExceededError("brute-force space exceeds guard of " +
                               std::to_string(opts.guard) + " evaluations");
  }

  for (const auto& space : spaces) {
    unsigned long long total = space.total;
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || total < 1024) {
      for (unsigned long long i = 0; i < total; ++i) {
        Interpretation interp = space.decode(i);
        Value v = eval(interp, f);
        if (v < 1) return Countermodel{std::move(interp), std::move(v)};
      }
    } else {
      std::atomic<unsigned long long> best(total);
      std::vector<std::thread> workers;
      unsigned long long chunk = (total + jobs - 1) / jobs;
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
          unsigned long long lo = chunk * w;
          unsigned long long hi = std::min(total, lo + chunk);
          for (unsigned long long i = lo; i < hi; ++i) {
            if (best.load(std::memory_order_relaxed) <= lo) return;
            Interpretation interp = space.decode(i);
            if (eval(interp, f) < 1) {
              unsigned long long cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        });
      }
      for (auto& t : workers) t.join();
      if (best.load() < total) {
        Interpretation interp = space.decode(best.load());
        Value v = eval(interp, f);
        return Countermodel{std::move(interp), std::move(v)};
      }
    }
  }
  return std::nullopt;
}

Interpretation collapse_above(const Interpretation& interp, const Value& v) {
  if (v < 0 || v >= 1)
    throw EvalError("collapse requires 0 <= v < 1");
  Interpretation out = interp;
  for (auto& [name, pt] : out.preds)
    for (auto& entry : pt.table)
      if (entry > v) entry = 1;
  return out;
}

bool check_order_invariance(const FormulaPtr& f, const Interpretation& interp,
                            const std::vector<std::pair<Value, Value>>& injection) {
  if (f->has_quantifier())
    throw EvalError("order invariance is a quantifier-free property");

  std::vector<std::pair<Value, Value>> map = injection;
  std::sort(map.begin(), map.end());
  for (std::size_t i = 0; i + 1 < map.size(); ++i) {
    if (map[i].first == map[i + 1].first) {
      if (map[i].second != map[i + 1].second)
        throw EvalError("injection maps one value twice");
    } else if (map[i].second >= map[i + 1].second) {
      throw EvalError("injection is not order-preserving");
    }
  }
  auto apply = [&](const Value& v) -> Value {
    for (const auto& [from, to] : map)
      if (from == v) return to;
    if (v == 0 || v == 1) return v;  // endpoints fixed implicitly
    throw EvalError("injection undefined on atom value " + value_to_string(v));
  };
  if (apply(Value(0)) != 0 || apply(Value(1)) != 1)
    throw EvalError("injection must fix 0 and 1");

  // Transport exactly the entries the formula's atoms reach.
  std::vector<FormulaPtr> atoms;
  f->collect_atoms(atoms);
  Interpretation transported = interp;
  Env env;
  for (const auto& a : atoms) {
    std::vector<int> args;
    for (const auto& t : a->terms()) args.push_back(eval_term(*t, interp, env));
    std::size_t idx = Interpretation::flat_index(args, interp.domain_size);
    auto& table = transported.preds.at(a->symbol()).table;
    table.at(idx) = apply(interp.preds.at(a->symbol()).table.at(idx));
  }

  return apply(eval(interp, f)) == eval(transported, f);
}

}  // namespace goedel
