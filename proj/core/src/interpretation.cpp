#include "goedel/interpretation.hpp"

#include <algorithm>

#include <json.hpp>

#include "goedel/errors.hpp"

namespace goedel {

std::size_t Interpretation::flat_index(const std::vector<int>& args, int n) {
  std::size_t idx = 0, mult = 1;
  for (int a : args) {
    idx += static_cast<std::size_t>(a) * mult;
    mult *= static_cast<std::size_t>(n);
  }
  return idx;
}

int Interpretation::apply_function(const std::string& name,
                                   const std::vector<int>& args) const {
  auto it = funcs.find(name);
  if (it == funcs.end()) throw EvalError("unbound function symbol '" + name + "'");
  if (static_cast<int>(args.size()) != it->second.arity)
    throw EvalError("arity mismatch for function '" + name + "'");
  return it->second.table.at(flat_index(args, domain_size));
}

const Value& Interpretation::predicate_value(const std::string& name,
                                             const std::vector<int>& args) const {
  auto it = preds.find(name);
  if (it == preds.end()) throw EvalError("unbound predicate symbol '" + name + "'");
  if (static_cast<int>(args.size()) != it->second.arity)
    throw EvalError("arity mismatch for predicate '" + name + "'");
  return it->second.table.at(flat_index(args, domain_size));
}

std::vector<Value> Interpretation::atom_values() const {
  std::vector<Value> out;
  for (const auto& [name, pt] : preds)
    for (const auto& v : pt.table)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string tuple_key(const std::vector<int>& args) {
  std::string key = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(args[i]);
  }
  return key + ")";
}

std::vector<int> parse_tuple_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw Error("malformed tuple key '" + key + "'");
  std::vector<int> out;
  std::string body = key.substr(1, key.size() - 2);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    out.push_back(std::stoi(body.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Iterates all argument tuples of the given arity over {0..n-1} in flat
// index order.
template <typename F>
void for_each_tuple(int arity, int n, F&& fn) {
  std::vector<int> args(arity, 0);
  for (;;) {
    fn(args);
    int j = 0;
    while (j < arity && ++args[j] == n) args[j++] = 0;
    if (j == arity) break;
  }
}

}  // namespace

std::string Interpretation::to_json_string(int indent) const {
  nlohmann::json j;
  j["domain"] = domain_size;
  nlohmann::json jf = nlohmann::json::object();
  for (const auto& [name, ft] : funcs) {
    nlohmann::json entries = nlohmann::json::object();
    for_each_tuple(ft.arity, domain_size, [&](const std::vector<int>& args) {
      entries[tuple_key(args)] = ft.table.at(flat_index(args, domain_size));
    });
    jf[name] = entries;
  }
  j["funcs"] = jf;
  nlohmann::json jp = nlohmann::json::object();
  for (const auto& [name, pt] : preds) {
    nlohmann::json entries = nlohmann::json::object();
    for_each_tuple(pt.arity, domain_size, [&](const std::vector<int>& args) {
      entries[tuple_key(args)] = value_to_string(pt.table.at(flat_index(args, domain_size)));
    });
    jp[name] = entries;
  }
  j["preds"] = jp;
  if (!assignment.empty()) {
    nlohmann::json jv = nlohmann::json::object();
    for (const auto& [name, d] : assignment) jv[name] = d;
    j["vars"] = jv;
  }
  return indent >= 0 ? j.dump(indent) : j.dump();
}

Interpretation Interpretation::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("malformed interpretation JSON: ") + e.what());
  }
  Interpretation out;
  out.domain_size = j.at("domain").get<int>();
  if (out.domain_size < 1) throw Error("domain must be nonempty");
  std::size_t n = static_cast<std::size_t>(out.domain_size);
  if (j.count("funcs")) {
    for (auto it = j["funcs"].begin(); it != j["funcs"].end(); ++it) {
      FuncTable ft;
      bool first = true;
      std::size_t size = 1;
      for (auto e = it.value().begin(); e != it.value().end(); ++e) {
        auto args = parse_tuple_key(e.key());
        if (first) {
          ft.arity = static_cast<int>(args.size());
          for (int i = 0; i < ft.arity; ++i) size *= n;
          ft.table.assign(size, 0);
          first = false;
        }
        int v = e.value().get<int>();
        if (v < 0 || v >= out.domain_size)
          throw Error("function value out of domain in '" + it.key() + "'");
        ft.table.at(flat_index(args, out.domain_size)) = v;
      }
      if (first) ft.table.assign(1, 0);  // 0-ary with no entries
      out.funcs[it.key()] = std::move(ft);
    }
  }
  if (j.count("preds")) {
    for (auto it = j["preds"].begin(); it != j["preds"].end(); ++it) {
      PredTable pt;
      bool first = true;
      std::size_t size = 1;
      for (auto e = it.value().begin(); e != it.value().end(); ++e) {
        auto args = parse_tuple_key(e.key());
        if (first) {
          pt.arity = static_cast<int>(args.size());
          for (int i = 0; i < pt.arity; ++i) size *= n;
          pt.table.assign(size, Value(0));
          first = false;
        }
        Value v = e.value().is_string() ? parse_value(e.value().get<std::string>())
                                        : Value(e.value().get<long long>());
        if (!in_unit_interval(v))
          throw Error("predicate value outside [0,1] in '" + it.key() + "'");
        pt.table.at(flat_index(args, out.domain_size)) = v;
      }
      if (first) pt.table.assign(1, Value(0));
      out.preds[it.key()] = std::move(pt);
    }
  }
  if (j.count("vars")) {
    for (auto it = j["vars"].begin(); it != j["vars"].end(); ++it)
      out.assignment[it.key()] = it.value().get<int>();
  }
  return out;
}

}  // namespace goedel
