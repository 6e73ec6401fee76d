#pragma once

#include <map>
#include <string>
#include <vector>

#include "goedel/formula.hpp"
#include "goedel/interpretation.hpp"
#include "goedel/prenex.hpp"

namespace goedel {

// The translation A -> A^g reducing classical validity in all finite
// structures to Goedel validity. Reserved symbols: P (unary), L (binary),
// zero, succ, leq, c1, c2; they must not occur in the input.
//
// Abbreviations:   x in y   ==  ~~L(x,y)
//                  x prec y ==  (P(y) -> P(x)) -> P(y)
//                  R(i)     ==  ex w (w in i)
//
// A^g == ( S  &  c1 in zero  &  c2 in zero  &  c2 prec c1
//          &  all i [ all x all y all j all k ex z K  |  all x ~(x in succ(i)) ] )
//       ->  (A' | ex u P(u))
//
// where K interpolates a successor level between any prec-ordered pair of
// leveled elements, S is a fixed conjunction of double-negated axioms for
// zero, successor and leq (listed in the README), and A' is A with atoms
// double-negated and quantifiers relativized to R.
struct TranslationArtifacts {
  FormulaPtr original;
  FormulaPtr a_goedel;           // A^g
  FormulaPtr relativized;        // A'
  FormulaPtr level_axiom;        // K (with free variables x, y, z, i, j, k)
  FormulaPtr arithmetic;         // S
  std::vector<std::pair<std::string, std::string>> abbreviations;
};

TranslationArtifacts translate_finite_validity(const FormulaPtr& a);

// A finite classical structure for the input sentence: domain {0..n},
// boolean predicate tables.
struct ClassicalStructure {
  int domain_size = 1;
  std::map<std::string, PredTable> preds;  // values restricted to {0, 1}
};

// Extends a classical countermodel of `a` to a finite Goedel
// interpretation of A^g: levels 0..n nonempty, P-values strictly ordered
// below `cap` along a dyadic level cascade (each level adds midpoints and
// a top duplicate), arithmetic symbols natural with a clamped successor.
// The antecedent of A^g evaluates to exactly 1 and A^g itself to the
// largest P-value (< 1). Throws when the structure does not falsify `a`
// classically or `level_values` has too few values below the cap.
Interpretation build_goedel_countermodel(const FormulaPtr& a,
                                         const ClassicalStructure& structure,
                                         const std::vector<Value>& level_values,
                                         const Value& cap);

// Default level-value ladder: `count` ascending values below cap drawn
// from the reflected V_down prefix cap*(1 - 1/(k+1)).
std::vector<Value> default_level_values(std::size_t count, const Value& cap);

// Prenex form of A^g following the proof's shift order: the antecedent is
// prenexed with shifts valid in every Goedel logic and its prefix
// dualized across the implication; A's (classical) prefix is lifted; the
// witness for ex u P(u) goes innermost.
PrenexFormula prenexify_translation(const TranslationArtifacts& t);

}  // namespace goedel
