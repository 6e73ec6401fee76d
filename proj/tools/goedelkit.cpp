// goedelkit: evaluate, prove, classify and translate over first-order
// Goedel logics.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goedel/certificate.hpp"
#include "goedel/errors.hpp"
#include "goedel/eval.hpp"
#include "goedel/parser.hpp"
#include "goedel/prenex.hpp"
#include "goedel/prover.hpp"
#include "goedel/reduction.hpp"
#include "goedel/valueset.hpp"

using namespace goedel;
using nlohmann::json;

namespace {

// Exit codes: 0 valid/success, 1 countermodel/negative verdict, 2 unknown,
// 3 usage or parse error.
enum ExitCode { kOk = 0, kNegative = 1, kUnknown = 2, kUsage = 3 };

bool color_enabled() {
  const char* env = std::getenv("GOEDELKIT_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(fileno(stdout));
}

std::string styled(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_text(const std::string& verdict) {
  if (verdict == "valid") return styled(verdict, "32");
  if (verdict == "unknown") return styled(verdict, "33");
  return styled(verdict, "31");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One formula per line; '#' starts a comment.
std::vector<std::string> formula_lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(begin, end - begin + 1));
  }
  return out;
}

json outline_json(const ProofOutline& outline) {
  json steps = json::array();
  for (const auto& s : outline.steps)
    steps.push_back({{"rule", s.rule},
                     {"from", s.premise->to_string()},
                     {"to", s.conclusion->to_string()}});
  return steps;
}

json stats_json(const TreeStats& stats) {
  return {{"nodes", stats.nodes},
          {"leaves", stats.leaves},
          {"pruned", stats.pruned},
          {"max_level", stats.max_level}};
}

json instances_json(const std::vector<std::vector<TermPtr>>& instances) {
  json out = json::array();
  for (const auto& tuple : instances) {
    json t = json::array();
    for (const auto& term : tuple) t.push_back(term->to_string());
    out.push_back(t);
  }
  return out;
}

struct ProveOptions {
  std::string vset = "[0,1]";
  int budget_level = 8;
  long long budget_nodes = 20000;
  int max_m = 5;
  int max_domain = 2;
  int jobs = 1;
  bool emit_json = false;
};

int run_prove_single(const std::string& text, const ProveOptions& opt) {
  auto started = std::chrono::steady_clock::now();
  auto vset = SymbolicValueSet::parse(opt.vset);
  auto formula = parse_formula(text);
  auto prenex = to_prenex(formula, PrenexRegime::GUp);
  Budget budget{opt.budget_level, opt.budget_nodes, std::nullopt};
  auto result = prove_prenex(prenex, vset, budget);
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - started)
        .count();
  };
  if (!opt.emit_json)
    std::cout << "prove over " << vset.to_string() << ": " << formula->to_string()
              << "\n";

  if (auto* valid = std::get_if<ValidCertificate>(&result)) {
    if (opt.emit_json) {
      json j{{"verdict", "valid"},
             {"formula", formula->to_string()},
             {"prenex", prenex.to_string()},
             {"instances", instances_json(valid->instances)},
             {"disjunction", valid->disjunction->to_string()},
             {"outline", outline_json(valid->outline)},
             {"stats", stats_json(valid->stats)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << verdict_text("valid") << "\n";
      std::cout << "prenex form: " << prenex.to_string() << "\n";
      std::cout << "herbrand disjunction: " << valid->disjunction->to_string() << "\n";
      std::cout << "outline (" << valid->outline.steps.size() << " steps):\n";
      for (const auto& s : valid->outline.steps)
        std::cout << "  (" << s.rule << ") " << s.conclusion->to_string() << "\n";
      std::cout << "tree: " << valid->stats.nodes << " nodes, "
                << valid->stats.leaves << " leaves, max level "
                << valid->stats.max_level << "\n";
    }
    std::cerr << "completed in " << elapsed_ms() << " ms\n";
    return kOk;
  }

  if (auto* cm = std::get_if<CountermodelResult>(&result)) {
    if (opt.emit_json) {
      json j{{"verdict", "countermodel"},
             {"formula", formula->to_string()},
             {"m", cm->value_count},
             {"value", value_to_string(cm->value)},
             {"interpretation", json::parse(cm->interpretation.to_json_string())}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << verdict_text("countermodel") << " (value "
                << value_to_string(cm->value) << ", " << cm->value_count
                << " truth values)\n";
      std::cout << cm->interpretation.to_json_string(2) << "\n";
    }
    std::cerr << "completed in " << elapsed_ms() << " ms\n";
    return kNegative;
  }

  const auto& unknown = std::get<UnknownResult>(result);
  // The tree gave no verdict; look for a finite-valued refutation.
  std::optional<FiniteCountermodel> finite;
  try {
    finite = finite_counter_search(formula, opt.max_m, opt.max_domain,
                                   10'000'000ULL, opt.jobs);
  } catch (const GuardExceededError&) {
    finite = std::nullopt;
  }
  if (finite) {
    if (opt.emit_json) {
      json j{{"verdict", "countermodel"},
             {"formula", formula->to_string()},
             {"m", finite->m},
             {"value", value_to_string(finite->value)},
             {"interpretation", json::parse(finite->interpretation.to_json_string())}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "verdict: " << verdict_text("countermodel") << " over V_"
                << finite->m << " (value " << value_to_string(finite->value) << ")\n";
      std::cout << finite->interpretation.to_json_string(2) << "\n";
    }
    std::cerr << "completed in " << elapsed_ms() << " ms\n";
    return kNegative;
  }

  if (opt.emit_json) {
    json j{{"verdict", "unknown"},
           {"formula", formula->to_string()},
           {"verified_level", unknown.verified_level},
           {"cap", value_to_string(unknown.cap)},
           {"open_constraints", unknown.open_constraints},
           {"candidate", json::parse(unknown.candidate.to_json_string())},
           {"domain_terms", unknown.domain_terms},
           {"stats", stats_json(unknown.stats)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict_text("unknown") << " (verified to level "
              << unknown.verified_level << ", cap " << value_to_string(unknown.cap)
              << ")\n";
    std::cout << "open constraints:\n";
    for (const auto& c : unknown.open_constraints) std::cout << "  " << c << "\n";
    std::cout << "candidate countermodel over {";
    for (std::size_t i = 0; i < unknown.domain_terms.size(); ++i)
      std::cout << (i ? ", " : "") << unknown.domain_terms[i];
    std::cout << "}:\n" << unknown.candidate.to_json_string(2) << "\n";
  }
  std::cerr << "completed in " << elapsed_ms() << " ms\n";
  return kUnknown;
}

int worst_exit(int a, int b) {
  auto rank = [](int code) {
    switch (code) {
      case kUsage: return 3;
      case kUnknown: return 2;
      case kNegative: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

// ------------------------------------------------------------ corpus ----

int run_corpus(unsigned long long seed, int jobs) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? styled("ok  ", "32") : styled("FAIL", "31")) << " " << what
              << "\n";
    if (!ok) ++failures;
  };
  auto unit = SymbolicValueSet::unit_interval();
  Budget budget{8, 20000};
  BruteForceOptions opts;
  opts.max_domain = 2;
  opts.jobs = jobs;

  const char* prove_texts[] = {
      "all x all y ((P(x) -> P(y)) | (P(y) -> P(x)))",
      "all x ex y (P(x) -> P(y))",
      "ex x (P(x) -> P(x))",
      "all x ((P(x) -> Q(x)) | (Q(x) -> P(x)))",
      "(A -> B) | (B -> A)",
      "A -> (B -> A)",
      "((A -> B) & (B -> C)) -> (A -> C)",
      "~~(A | ~A)",
  };
  for (const char* text : prove_texts) {
    bool ok = false;
    std::string note = text;
    try {
      auto pf = to_prenex(parse_formula(text), PrenexRegime::GUp);
      auto r = prove_prenex(pf, unit, budget);
      if (auto* v = std::get_if<ValidCertificate>(&r)) {
        check_outline(v->outline, v->disjunction, pf.to_formula());
        ok = !brute_force_validity(v->disjunction, vm_values(5), opts);
      }
    } catch (const Error& e) {
      note += std::string(" (") + e.what() + ")";
    }
    report(ok, std::string("prove + certify: ") + note);
  }

  for (int m = 2; m <= 4; ++m) {
    std::string chain;
    for (int i = 1; i <= m; ++i)
      chain += (i > 1 ? " | (" : "(") + ("A" + std::to_string(i)) + " -> A" +
               std::to_string(i + 1) + ")";
    auto f = parse_formula(chain);
    bool ok = !brute_force_validity(f, vm_values(m), opts) &&
              brute_force_validity(f, vm_values(m + 1), opts).has_value();
    report(ok, "separation at m=" + std::to_string(m));
  }

  {
    auto s1 = parse_formula("(all x (P(x) | Q)) -> ((all x P(x)) | Q)");
    auto s2 = parse_formula("(Q -> ex x P(x)) -> ex x (Q -> P(x))");
    auto s3 = parse_formula("((all x P(x)) -> Q) -> ex x (P(x) -> Q)");
    report(!brute_force_validity(s1, vm_values(4), opts), "S1 holds over V_4");
    report(!brute_force_validity(s2, vm_values(4), opts),
           "S2 holds over V_4 (finite domains)");
    report(!brute_force_validity(s3, vm_values(4), opts),
           "S3 holds over V_4 (finite domains)");
  }

  {
    bool ok = classify(SymbolicValueSet::vm(5)).kind == SetCardinality::Finite &&
              classify(SymbolicValueSet::vup()).kind ==
                  SetCardinality::CountablyInfinite &&
              classify(SymbolicValueSet::vdown()).kind ==
                  SetCardinality::CountablyInfinite &&
              classify(SymbolicValueSet::cantor()).kind == SetCardinality::Uncountable &&
              classify(SymbolicValueSet::unit_interval()).kind ==
                  SetCardinality::Uncountable;
    report(ok, "classification table");
  }

  {
    auto c_up = to_prenex(parse_formula("ex x (P(x) -> all y P(y))"),
                          PrenexRegime::IntuitionisticSafe);
    Budget six{6, 20000};
    auto r = prove_prenex(c_up, unit, six);
    report(std::holds_alternative<UnknownResult>(r), "C-up open over [0,1] at level 6");
  }

  {
    // Random-valuation soundness of a proved disjunction.
    auto pf = to_prenex(parse_formula("all x ex y (P(x) -> P(y))"), PrenexRegime::GUp);
    auto r = prove_prenex(pf, unit, budget);
    bool ok = false;
    if (auto* v = std::get_if<ValidCertificate>(&r)) {
      ok = true;
      std::mt19937_64 rng(seed);
      for (int round = 0; round < 100 && ok; ++round) {
        Interpretation i;
        i.domain_size = 1 + static_cast<int>(rng() % 3);
        i.funcs["c0"] = FuncTable{0, {static_cast<int>(rng() % i.domain_size)}};
        PredTable pt;
        pt.arity = 1;
        for (int d = 0; d < i.domain_size; ++d) {
          long long num = static_cast<long long>(rng() % 25);
          pt.table.push_back(Value(num, 24));
        }
        i.preds["P"] = pt;
        ok = eval(i, v->disjunction) == 1;
      }
    }
    report(ok, "disjunction sound under 100 random valuations");
  }

  std::cout << (failures == 0 ? styled("all corpus checks passed", "32")
                              : styled(std::to_string(failures) + " corpus failures", "31"))
            << "\n";
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goedelkit: evaluation, proving, classification and translation "
               "for first-order Goedel logics"};
  app.require_subcommand(1);

  std::string formula_text, file_path, interp_path, vset_literal, structure_path;
  ProveOptions prove_opts;
  bool emit_json = false;
  unsigned long long seed = 0;
  int jobs = 1;
  int count = 8, depth = 4, max_m = 5, max_domain = 2, levels = 8;
  bool do_prenex = false;
  std::string cap_text = "9/10";

  auto* prove = app.add_subcommand("prove", "decide a formula with the semantic tree");
  prove->add_option("formula", formula_text, "formula text");
  prove->add_option("--file", file_path, "formula file, one per line, '#' comments");
  prove->add_option("--vset", prove_opts.vset, "truth-value set literal")
      ->capture_default_str();
  prove->add_option("--budget-level", prove_opts.budget_level, "max tree level")
      ->capture_default_str();
  prove->add_option("--budget-nodes", prove_opts.budget_nodes, "max tree nodes")
      ->capture_default_str();
  prove->add_option("--max-m", prove_opts.max_m, "finite refutation ladder bound")
      ->capture_default_str();
  prove->add_option("--max-domain", prove_opts.max_domain, "finite refutation domains")
      ->capture_default_str();
  prove->add_flag("--json", emit_json, "JSON output");
  prove->add_option("--jobs", jobs, "worker threads for brute-force search")
      ->capture_default_str();
  prove->add_option("--seed", seed, "rng seed (reserved for corpus)");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under a model");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--interp", interp_path, "interpretation JSON file")->required();
  eval_cmd->add_flag("--json", emit_json);

  auto* herbrand_cmd =
      app.add_subcommand("herbrand", "print the Herbrand form and enumeration");
  herbrand_cmd->add_option("formula", formula_text)->required();
  herbrand_cmd->add_option("--count", count, "stream prefix length")
      ->capture_default_str();
  herbrand_cmd->add_flag("--json", emit_json);

  auto* counter = app.add_subcommand("counter", "search V_m ladders for countermodels");
  counter->add_option("formula", formula_text);
  counter->add_option("--file", file_path, "formula file");
  counter->add_option("--max-m", max_m)->capture_default_str();
  counter->add_option("--max-domain", max_domain)->capture_default_str();
  counter->add_option("--jobs", jobs)->capture_default_str();
  counter->add_flag("--json", emit_json);

  auto* classify_cmd = app.add_subcommand("classify", "classify a truth-value set");
  classify_cmd->add_option("vset", vset_literal)->required();
  classify_cmd->add_flag("--json", emit_json);

  auto* witness_cmd =
      app.add_subcommand("witness", "dense suborder witness of an uncountable set");
  witness_cmd->add_option("vset", vset_literal)->required();
  witness_cmd->add_option("--depth", depth)->capture_default_str();
  witness_cmd->add_flag("--json", emit_json);

  auto* translate = app.add_subcommand(
      "translate", "reduce classical finite-model validity to Goedel validity");
  translate->add_option("formula", formula_text)->required();
  translate->add_flag("--prenex", do_prenex, "also print the prenex form");
  translate->add_option("--structure", structure_path,
                        "classical countermodel JSON to lift");
  translate->add_option("--cap", cap_text, "supremum bound for P-values")
      ->capture_default_str();
  translate->add_option("--levels", levels, "level-value ladder length")
      ->capture_default_str();
  translate->add_flag("--json", emit_json);

  auto* corpus = app.add_subcommand("corpus", "run the bundled acceptance corpus");
  corpus->add_option("--seed", seed)->capture_default_str();
  corpus->add_option("--jobs", jobs)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (prove->parsed()) {
      prove_opts.emit_json = emit_json;
      prove_opts.jobs = jobs;
      if (!file_path.empty()) {
        int exit_code = kOk;
        for (const auto& line : formula_lines(file_path)) {
          std::cout << "# " << line << "\n";
          exit_code = worst_exit(exit_code, run_prove_single(line, prove_opts));
        }
        return exit_code;
      }
      if (formula_text.empty()) throw Error("prove needs a formula or --file");
      return run_prove_single(formula_text, prove_opts);
    }

    if (eval_cmd->parsed()) {
      auto interp = Interpretation::from_json_string(read_file(interp_path));
      auto value = eval(interp, parse_formula(formula_text));
      if (emit_json)
        std::cout << json{{"value", value_to_string(value)}}.dump() << "\n";
      else
        std::cout << value_to_string(value) << "\n";
      return kOk;
    }

    if (herbrand_cmd->parsed()) {
      auto pf = to_prenex(parse_formula(formula_text), PrenexRegime::GUp);
      auto hf = herbrand_form(pf);
      HerbrandEnumerator en(Signature::of_formula(hf.herbrand.to_formula()));
      if (emit_json) {
        json terms = json::array(), atoms = json::array();
        for (int i = 0; i < count; ++i) terms.push_back(en.term(i)->to_string());
        for (int i = 0; i < count; ++i) {
          if (en.base_finite() && i >= static_cast<int>(en.finite_base_size())) break;
          atoms.push_back(en.atom(i)->to_string());
        }
        json j{{"prenex", pf.to_string()},
               {"herbrand_form", hf.herbrand.to_string()},
               {"universe", terms},
               {"base", atoms},
               {"augmented", en.augmented_symbols()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "prenex form:   " << pf.to_string() << "\n";
        std::cout << "herbrand form: " << hf.herbrand.to_string() << "\n";
        if (!en.augmented_symbols().empty()) {
          std::cout << "augmented with:";
          for (const auto& s : en.augmented_symbols()) std::cout << " " << s;
          std::cout << "\n";
        }
        std::cout << "universe:";
        for (int i = 0; i < count; ++i) std::cout << " " << en.term(i)->to_string();
        std::cout << " ...\nbase:    ";
        for (int i = 0; i < count; ++i) {
          if (en.base_finite() && i >= static_cast<int>(en.finite_base_size())) break;
          std::cout << " " << en.atom(i)->to_string();
        }
        std::cout << (en.base_finite() ? "\n" : " ...\n");
      }
      return kOk;
    }

    if (counter->parsed()) {
      auto search = [&](const std::string& text) {
        auto found =
            finite_counter_search(parse_formula(text), max_m, max_domain,
                                  10'000'000ULL, jobs);
        if (found) {
          if (emit_json) {
            json j{{"found", true},
                   {"m", found->m},
                   {"value", value_to_string(found->value)},
                   {"interpretation",
                    json::parse(found->interpretation.to_json_string())}};
            std::cout << j.dump(2) << "\n";
          } else {
            std::cout << "countermodel over V_" << found->m << " (value "
                      << value_to_string(found->value) << ")\n"
                      << found->interpretation.to_json_string(2) << "\n";
          }
          return kNegative;
        }
        if (emit_json)
          std::cout << json{{"found", false}, {"max_m", max_m}}.dump() << "\n";
        else
          std::cout << "no countermodel up to V_" << max_m << " with domains <= "
                    << max_domain << "\n";
        return kOk;
      };
      if (!file_path.empty()) {
        int exit_code = kOk;
        for (const auto& line : formula_lines(file_path)) {
          std::cout << "# " << line << "\n";
          exit_code = worst_exit(exit_code, search(line));
        }
        return exit_code;
      }
      if (formula_text.empty()) throw Error("counter needs a formula or --file");
      return search(formula_text);
    }

    if (classify_cmd->parsed()) {
      auto set = SymbolicValueSet::parse(vset_literal);
      auto c = classify(set);
      auto verdict = axiomatizability_verdict(c);
      std::string kind = c.kind == SetCardinality::Finite ? "finite"
                         : c.kind == SetCardinality::CountablyInfinite
                             ? "countably-infinite"
                             : "uncountable";
      if (emit_json) {
        json j{{"set", set.to_string()},
               {"classification", kind},
               {"axiomatizable", verdict.axiomatizable}};
        if (c.kind == SetCardinality::Finite) j["size"] = c.finite_size;
        if (verdict.axiomatizable) j["basis"] = verdict.basis;
        else j["reason"] = verdict.reason;
        if (verdict.characteristic_axiom)
          j["characteristic_axiom"] = verdict.characteristic_axiom->to_string();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << set.to_string() << ": " << kind;
        if (c.kind == SetCardinality::Finite) std::cout << "(" << c.finite_size << ")";
        if (verdict.axiomatizable) {
          std::cout << "; prenex fragment " << styled("axiomatizable", "32") << " ("
                    << verdict.basis << ")\n";
          if (verdict.characteristic_axiom)
            std::cout << "characteristic axiom: "
                      << verdict.characteristic_axiom->to_string() << "\n";
        } else {
          std::cout << "; prenex fragment " << styled("NOT axiomatizable", "31")
                    << "\n";
        }
      }
      return verdict.axiomatizable ? kOk : kNegative;
    }

    if (witness_cmd->parsed()) {
      auto set = SymbolicValueSet::parse(vset_literal);
      try {
        auto points = dense_suborder_witness(set, depth);
        if (emit_json) {
          json arr = json::array();
          for (const auto& p : points) arr.push_back(value_to_string(p));
          std::cout << json{{"set", set.to_string()}, {"points", arr}}.dump(2) << "\n";
        } else {
          for (const auto& p : points) std::cout << value_to_string(p) << "\n";
        }
        return kOk;
      } catch (const ValueSetError& e) {
        std::cerr << "not uncountable: " << e.what() << "\n";
        return kNegative;
      }
    }

    if (translate->parsed()) {
      auto a = parse_formula(formula_text);
      auto t = translate_finite_validity(a);
      json report{{"formula", a->to_string()}, {"a_goedel", t.a_goedel->to_string()}};
      if (!emit_json) {
        std::cout << "A^g: " << t.a_goedel->to_string() << "\n";
        std::cout << "abbreviations:\n";
        for (const auto& [from, to] : t.abbreviations)
          std::cout << "  " << from << "  ==  " << to << "\n";
      }
      if (do_prenex) {
        auto pf = prenexify_translation(t);
        report["prenex"] = pf.to_string();
        if (!emit_json) std::cout << "prenex form: " << pf.to_string() << "\n";
      }
      if (!structure_path.empty()) {
        auto raw = Interpretation::from_json_string(read_file(structure_path));
        ClassicalStructure s;
        s.domain_size = raw.domain_size;
        s.preds = raw.preds;
        Value cap = parse_value(cap_text);
        auto ig = build_goedel_countermodel(a, s, default_level_values(levels, cap), cap);
        Value ante = eval(ig, t.a_goedel->left());
        Value cons = eval(ig, t.a_goedel->right());
        report["antecedent_value"] = value_to_string(ante);
        report["consequent_value"] = value_to_string(cons);
        report["verdict"] =
            ante == 1 && cons < 1 ? "countermodel-constructed" : "lift-failed";
        if (!emit_json)
          std::cout << "lifted countermodel: antecedent " << value_to_string(ante)
                    << ", consequent " << value_to_string(cons) << "\n";
      }
      if (emit_json) std::cout << report.dump(2) << "\n";
      return kOk;
    }

    if (corpus->parsed()) return run_corpus(seed, jobs);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
