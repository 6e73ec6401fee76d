#include "goedel/reduction.hpp"

#include <algorithm>

#include "goedel/errors.hpp"
#include "goedel/eval.hpp"
#include "goedel/signature.hpp"

namespace goedel {

namespace {

const char* kReserved[] = {"P", "L", "zero", "succ", "leq", "c1", "c2"};

FormulaPtr mem(TermPtr x, TermPtr y) {
  return Formula::neg(Formula::neg(Formula::atom("L", {std::move(x), std::move(y)})));
}

FormulaPtr prec(TermPtr x, TermPtr y) {
  auto px = Formula::atom("P", {std::move(x)});
  auto py = Formula::atom("P", {std::move(y)});
  return Formula::implies(Formula::implies(py, px), py);
}

FormulaPtr leq(TermPtr x, TermPtr y) {
  return Formula::neg(Formula::neg(Formula::atom("leq", {std::move(x), std::move(y)})));
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& parts) {
  FormulaPtr out = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it)
    out = Formula::conj(*it, out);
  return out;
}

// A with every atom double-negated and quantifiers relativized to the
// nonempty levels.
FormulaPtr relativize(const FormulaPtr& f, int& fresh) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      return Formula::neg(Formula::neg(f));
    case Formula::Kind::Bottom:
    case Formula::Kind::Top:
      return f;
    case Formula::Kind::And:
      return Formula::conj(relativize(f->left(), fresh), relativize(f->right(), fresh));
    case Formula::Kind::Or:
      return Formula::disj(relativize(f->left(), fresh), relativize(f->right(), fresh));
    case Formula::Kind::Implies:
      return Formula::implies(relativize(f->left(), fresh),
                              relativize(f->right(), fresh));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string w = "w" + std::to_string(fresh++);
      auto r = Formula::exists(w, mem(Term::var(w), Term::var(f->symbol())));
      auto body = relativize(f->left(), fresh);
      if (f->kind() == Formula::Kind::Forall)
        return Formula::forall(f->symbol(), Formula::implies(r, body));
      return Formula::exists(f->symbol(), Formula::conj(r, body));
    }
  }
  return f;
}

}  // namespace

TranslationArtifacts translate_finite_validity(const FormulaPtr& a) {
  if (!a->is_closed()) throw EvalError("translation requires a closed sentence");
  Signature sig = Signature::of_formula(a);
  for (const char* name : kReserved)
    if (sig.has_symbol(name))
      throw SymbolClashError("input uses the reserved symbol '" + std::string(name) + "'");

  TranslationArtifacts out;
  out.original = a;
  out.abbreviations = {
      {"x in y", "~~L(x,y)"},
      {"x prec y", "(P(y) -> P(x)) -> P(y)"},
      {"R(i)", "ex w (w in i)"},
  };

  auto v = [](const char* name) { return Term::var(name); };
  auto zero = Term::constant("zero");
  auto succ = [](TermPtr t) { return Term::app("succ", {std::move(t)}); };

  // S: double-negated axioms for zero, successor and leq. Antisymmetry of
  // leq is definitional for the induced equality (the language has no
  // equality symbol); successor injectivity is omitted because it fails on
  // the clamped successor of every finite truncation.
  std::vector<FormulaPtr> s_axioms;
  s_axioms.push_back(Formula::forall("x", leq(zero, v("x"))));
  s_axioms.push_back(Formula::forall("x", leq(v("x"), succ(v("x")))));
  s_axioms.push_back(Formula::forall(
      "x", Formula::forall(
               "y", Formula::forall(
                        "z", Formula::implies(
                                 Formula::conj(leq(v("x"), v("y")), leq(v("y"), v("z"))),
                                 leq(v("x"), v("z")))))));
  s_axioms.push_back(Formula::forall(
      "x", Formula::forall("y", Formula::disj(leq(v("x"), v("y")), leq(v("y"), v("x"))))));
  s_axioms.push_back(Formula::forall(
      "x", Formula::neg(Formula::conj(leq(succ(v("x")), zero), leq(zero, succ(v("x")))))));
  out.arithmetic = conj_all(s_axioms);

  // K: between any prec-ordered pair from levels <= i there is an element
  // of level succ(i) strictly between.
  auto k_antecedent = conj_all({leq(v("j"), v("i")), mem(v("x"), v("j")),
                                leq(v("k"), v("i")), mem(v("y"), v("k")),
                                prec(v("x"), v("y"))});
  auto k_consequent = conj_all({mem(v("z"), succ(v("i"))), prec(v("x"), v("z")),
                                prec(v("z"), v("y"))});
  out.level_axiom = Formula::implies(k_antecedent, k_consequent);

  auto densify = Formula::forall(
      "x", Formula::forall(
               "y", Formula::forall(
                        "j", Formula::forall(
                                 "k", Formula::exists("z", out.level_axiom)))));
  auto empty_next = Formula::forall("x", Formula::neg(Formula::atom(
                                             "L", {v("x"), succ(v("i"))})));
  auto level_part = Formula::forall("i", Formula::disj(densify, empty_next));

  auto c1 = Term::constant("c1");
  auto c2 = Term::constant("c2");
  auto antecedent = conj_all({out.arithmetic, mem(c1, zero), mem(c2, zero),
                              prec(c2, c1), level_part});

  int fresh = 1;
  out.relativized = relativize(a, fresh);
  auto consequent =
      Formula::disj(out.relativized,
                    Formula::exists("u", Formula::atom("P", {Term::var("u")})));
  out.a_goedel = Formula::implies(antecedent, consequent);
  return out;
}

std::vector<Value> default_level_values(std::size_t count, const Value& cap) {
  std::vector<Value> out;
  for (std::size_t k = 1; k <= count; ++k)
    out.push_back(cap * (Value(1) - Value(1, static_cast<long long>(k) + 1)));
  return out;
}

Interpretation build_goedel_countermodel(const FormulaPtr& a,
                                         const ClassicalStructure& structure,
                                         const std::vector<Value>& level_values,
                                         const Value& cap) {
  if (cap <= 0 || cap >= 1) throw Error("cap must lie strictly in (0,1)");
  Signature sig = Signature::of_formula(a);
  if (!sig.functions().empty())
    throw Error("classical sentences with function symbols are not supported");

  // The structure must falsify the sentence classically (0/1 tables).
  Interpretation classical;
  classical.domain_size = structure.domain_size;
  for (const auto& [name, pt] : structure.preds) {
    for (const auto& val : pt.table)
      if (val != 0 && val != 1)
        throw Error("classical structure must be two-valued");
    classical.preds[name] = pt;
  }
  if (eval(classical, a) == 1)
    throw Error("structure does not falsify the sentence classically");

  int n = structure.domain_size - 1;
  if (n > 6) throw Error("classical domain too large for the level cascade");

  // Cascade positions 0..2^n carry strictly ascending P-values; position
  // p sits at level 0 at the ends and level n - v2(p) inside, so every
  // level i+1 holds the midpoints of the level-<=i grid. Each level >= 1
  // also holds a duplicate of the top value so K can interpolate around
  // the maximum.
  int positions = (1 << n) + 1;
  if (level_values.size() < static_cast<std::size_t>(positions))
    throw Error("insufficient level values: need " + std::to_string(positions));
  std::vector<Value> w(level_values.begin(), level_values.begin() + positions);
  for (int i = 0; i + 1 < positions; ++i)
    if (!(w[i] < w[i + 1]))
      throw Error("level values must be strictly ascending");
  if (!(w.back() < cap)) throw Error("level values must stay below the cap");

  int element_count = positions + n;  // cascade + top duplicates
  int domain = std::max(element_count, n + 1);

  auto level_of = [&](int number) -> int {
    if (number >= positions) return number - positions + 1;  // duplicates
    if (number == 0 || number == positions - 1) return 0;
    int v2 = 0, p = number;
    while (p % 2 == 0) {
      ++v2;
      p /= 2;
    }
    return n - v2;
  };

  Interpretation out;
  out.domain_size = domain;

  FuncTable zero_t{0, {0}};
  out.funcs["zero"] = zero_t;
  FuncTable succ_t{1, {}};
  succ_t.table.resize(domain);
  for (int x = 0; x < domain; ++x) succ_t.table[x] = std::min(x + 1, domain - 1);
  out.funcs["succ"] = std::move(succ_t);
  out.funcs["c1"] = FuncTable{0, {positions - 1}};
  out.funcs["c2"] = FuncTable{0, {0}};

  PredTable leq_t{2, {}};
  leq_t.table.resize(static_cast<std::size_t>(domain) * domain);
  for (int x = 0; x < domain; ++x)
    for (int y = 0; y < domain; ++y)
      leq_t.table[Interpretation::flat_index({x, y}, domain)] = Value(x <= y ? 1 : 0);
  out.preds["leq"] = std::move(leq_t);

  PredTable l_t{2, {}};
  l_t.table.resize(static_cast<std::size_t>(domain) * domain);
  for (int x = 0; x < domain; ++x)
    for (int i = 0; i < domain; ++i)
      l_t.table[Interpretation::flat_index({x, i}, domain)] =
          Value(level_of(x) == i ? 1 : 0);
  out.preds["L"] = std::move(l_t);

  PredTable p_t{1, {}};
  p_t.table.resize(domain);
  for (int x = 0; x < domain; ++x)
    p_t.table[x] = x < positions ? w[x] : w[positions - 1];
  out.preds["P"] = std::move(p_t);

  // The sentence's predicates: the classical tables, padded with 0 for
  // arguments outside the classical domain {0..n}.
  for (const auto& [name, pt] : structure.preds) {
    PredTable big;
    big.arity = pt.arity;
    std::size_t entries = 1;
    for (int i = 0; i < pt.arity; ++i) entries *= static_cast<std::size_t>(domain);
    big.table.assign(entries, Value(0));
    std::vector<int> args(pt.arity, 0);
    for (std::size_t e = 0; e < entries; ++e) {
      bool inside = true;
      for (int arg : args)
        if (arg > n) inside = false;
      if (inside)
        big.table[Interpretation::flat_index(args, domain)] =
            pt.table[Interpretation::flat_index(args, structure.domain_size)];
      int j = 0;
      while (j < pt.arity && ++args[j] == domain) args[j++] = 0;
    }
    out.preds[name] = std::move(big);
  }
  return out;
}

PrenexFormula prenexify_translation(const TranslationArtifacts& t) {
  FormulaPtr ag = rectify(t.a_goedel);
  if (ag->kind() != Formula::Kind::Implies)
    throw Error("translation artifact lost its implication shape");
  FormulaPtr antecedent = ag->left();
  FormulaPtr consequent = ag->right();
  if (consequent->kind() != Formula::Kind::Or ||
      consequent->right()->kind() != Formula::Kind::Exists)
    throw Error("translation artifact lost its consequent shape");
  FormulaPtr relativized = consequent->left();
  const std::string& u = consequent->right()->symbol();
  FormulaPtr pu = consequent->right()->left();

  // The antecedent needs only shifts valid in every Goedel logic; the
  // relativized part is classical (every atom double-negated), which
  // licenses the remaining shifts.
  PrenexFormula b0 = to_prenex(antecedent, PrenexRegime::IntuitionisticSafe);
  PrenexFormula a0 = to_prenex(relativized, PrenexRegime::GUp);

  PrenexFormula out;
  for (const auto& [q, var] : b0.prefix)
    out.prefix.emplace_back(q == Quant::Forall ? Quant::Exists : Quant::Forall, var);
  for (const auto& [q, var] : a0.prefix) out.prefix.emplace_back(q, var);
  out.prefix.emplace_back(Quant::Exists, u);
  out.matrix = Formula::implies(b0.matrix, Formula::disj(a0.matrix, pu));
  return out;
}

}  // namespace goedel
