#pragma once

#include <map>
#include <string>
#include <vector>

#include "goedel/term.hpp"
#include "goedel/value.hpp"

namespace goedel {

// Flat total map D^arity -> D (functions) or D^arity -> V (predicates).
// Entry index of (a_0, ..., a_{k-1}) is a_0 + a_1*n + a_2*n^2 + ... for
// domain size n.
struct FuncTable {
  int arity = 0;
  std::vector<int> table;
};

struct PredTable {
  int arity = 0;
  std::vector<Value> table;
};

// Finite-domain many-valued interpretation: domain {0, ..., domain_size-1},
// total function and predicate tables, and an assignment for free
// variables. Bottom always evaluates to 0. Immutable by convention: the
// evaluator never mutates one, and transformed copies are fresh objects.
class Interpretation {
public:
  int domain_size = 1;
  std::map<std::string, FuncTable> funcs;
  std::map<std::string, PredTable> preds;
  std::map<std::string, int> assignment;

  static std::size_t flat_index(const std::vector<int>& args, int n);

  int apply_function(const std::string& name, const std::vector<int>& args) const;
  const Value& predicate_value(const std::string& name,
                               const std::vector<int>& args) const;

  // All truth values the predicate tables mention.
  std::vector<Value> atom_values() const;

  std::string to_json_string(int indent = -1) const;
  static Interpretation from_json_string(const std::string& text);
};

}  // namespace goedel
