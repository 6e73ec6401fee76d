#pragma once

#include "goedel/formula.hpp"

namespace goedel {

// Quantifier-shift regimes for prenexing.
//
// IntuitionisticSafe uses only shifts valid in every Goedel logic: the
// intuitionistic shifts plus S1 (pulling a universal out of a disjunction).
// It fails with NotPrenexableError when a blocked shift would be needed:
// S2 (existential out of an implication's consequent) or S3 (universal out
// of an antecedent, dualized to an existential).
//
// GUp additionally uses S2 and S3 and always succeeds; the result is
// equivalent to the input in logics where those shifts are equivalences
// (and, for classical 0/1-valued subformulas, in every Goedel logic).
enum class PrenexRegime { IntuitionisticSafe, GUp };

// The input is rectified internally; free variables are treated as
// constants. Prefix variables of the result are pairwise distinct.
PrenexFormula to_prenex(const FormulaPtr& f, PrenexRegime regime);

}  // namespace goedel
