#pragma once

#include <optional>
#include <string>

#include "goedel/formula.hpp"
#include "goedel/signature.hpp"

namespace goedel {

// Parses the surface syntax:
//
//   formula := impl
//   impl    := or ["->" impl]            (right-associative)
//   or      := and {"|" and}
//   and     := primary {"&" primary}
//   primary := "~" primary | "true" | "false" | quant | atom | "(" formula ")"
//   quant   := ("all"|"ex") IDENT primary
//   atom    := IDENT ["(" term {"," term} ")"]
//   term    := IDENT ["(" term {"," term} ")"]
//
// Unicode aliases are accepted for the connectives and quantifiers:
// ∀ ∃ ∧ ∨ → ¬ and also ⊥/⊤ for false/true. An identifier in term position
// is a variable when bound by an enclosing quantifier, a constant otherwise.
//
// Throws ParseError with a byte position on syntax errors, and when a
// symbol is used with inconsistent arities (or clashes with `expected`).
FormulaPtr parse_formula(const std::string& text);
FormulaPtr parse_formula(const std::string& text, const Signature& expected);

}  // namespace goedel
