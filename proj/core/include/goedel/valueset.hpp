#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/value.hpp"

namespace goedel {

// Symbolic pieces of a closed subset of [0,1].
struct PointPiece {
  Value v;
};
struct IntervalPiece {
  Value lo, hi;  // lo < hi
};
// Affine image of the standard Cantor set onto [lo, hi].
struct CantorPiece {
  Value lo, hi;
};
// ascending: V_up = {1 - 1/k : k >= 1} u {1};  else V_down = {1/k} u {0}.
struct SeqPiece {
  bool ascending;
};
using Piece = std::variant<PointPiece, IntervalPiece, CantorPiece, SeqPiece>;

// A truth-value set given as a finite union of symbolic pieces. Kept in
// canonical form: pieces sorted, intervals merged, covered points dropped.
// Must contain 0 and 1.
class SymbolicValueSet {
public:
  static SymbolicValueSet from_pieces(std::vector<Piece> pieces);
  // Literal syntax: "Vm(5)", "Vup", "Vdown", "[0,1]", "[lo,hi]", "cantor",
  // "point(3/4)", "union(a, b, ...)".
  static SymbolicValueSet parse(const std::string& literal);

  static SymbolicValueSet vm(int m);
  static SymbolicValueSet unit_interval();
  static SymbolicValueSet cantor();
  static SymbolicValueSet vup();
  static SymbolicValueSet vdown();

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool contains(const Value& v) const;
  std::string to_string() const;

  // All points when every piece is a point (the finite case).
  std::vector<Value> finite_values() const;

private:
  explicit SymbolicValueSet(std::vector<Piece> pieces, bool validate);

  std::vector<Piece> pieces_;
};

enum class SetCardinality { Finite, CountablyInfinite, Uncountable };

struct Classification {
  SetCardinality kind;
  std::size_t finite_size = 0;
  // The perfect kernel (iterated isolated-piece removal) and the removed
  // countable part; meaningful only when kind == Uncountable.
  std::vector<Piece> kernel;
  std::vector<Piece> countable_part;
};

Classification classify(const SymbolicValueSet& v);

// Dense linear suborder of the perfect kernel, to a finite depth. Interval
// pieces contribute dyadic subdivision points (denominators up to 2^depth);
// Cantor pieces contribute the border-point approximants: finite {0,2}
// words extended by an even run of the border digit and a repeating "02"
// tail, with total word length up to ceil(5*depth/2). Sorted, distinct.
// Throws ValueSetError when the set is not uncountable.
std::vector<Value> dense_suborder_witness(const SymbolicValueSet& v, int depth);

// First witness point strictly inside (lo, hi) in canonical generation
// order (depth, then piece, then value), deepening up to max_depth.
std::optional<Value> witness_between(const SymbolicValueSet& v, const Value& lo,
                                     const Value& hi, int max_depth = 64);

// `count` strictly ascending values of the set strictly inside (0, cap)
// for countably infinite sets (drawn from the sequence pieces).
std::optional<std::vector<Value>> ascending_interior_values(
    const SymbolicValueSet& v, std::size_t count, const Value& cap);

struct AxiomVerdict {
  bool axiomatizable = false;
  std::string basis;
  // Finite case: the characteristic m-valued axiom schema.
  FormulaPtr characteristic_axiom;
  std::string reason;
};

AxiomVerdict axiomatizability_verdict(const Classification& c);

// Membership of a rational in the standard Cantor set, decided on the
// eventually periodic ternary expansion.
bool in_standard_cantor(const Value& v);

// Value of the ternary word `prefix` followed by the repeating tail "02".
Value cantor_word_value(const std::vector<int>& prefix);

}  // namespace goedel
