#pragma once

#include <stdexcept>
#include <string>

namespace goedel {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error with a byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Unbound symbol / unbound variable / arity mismatch during evaluation.
class EvalError : public Error {
public:
  using Error::Error;
};

// The intuitionistic-safe prenexing regime hit a shift it may not use.
class NotPrenexableError : public Error {
public:
  NotPrenexableError(const std::string& shift, const std::string& blocking)
      : Error("not prenexable without shift " + shift + ": " + blocking),
        shift_(shift), blocking_(blocking) {}
  const std::string& needed_shift() const { return shift_; }
  const std::string& blocking_subformula() const { return blocking_; }

private:
  std::string shift_;
  std::string blocking_;
};

// Brute-force search space exceeds the evaluation guard.
class GuardExceededError : public Error {
public:
  using Error::Error;
};

// A constraint cannot be realized in the given truth-value set.
class UnfulfillableError : public Error {
public:
  using Error::Error;
};

// Certificate construction or verification failure.
class CertificateError : public Error {
public:
  using Error::Error;
};

// Value-set operation applied to a set of the wrong classification.
class ValueSetError : public Error {
public:
  using Error::Error;
};

// The translation's reserved symbols clash with the input formula.
class SymbolClashError : public Error {
public:
  using Error::Error;
};

}  // namespace goedel
