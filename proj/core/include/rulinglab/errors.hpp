#pragma once

#include <stdexcept>
#include <string>

namespace rulinglab {

/// Malformed input file or option string. Carries line/column when known.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line), column(column) {}

  int line;
  int column;
};

/// Structurally valid input that violates a precondition of the requested
/// operation (boundary mismatch, open tangle, non-simple front, ...).
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The operation needs a hypothesis that the tangle does not satisfy
/// (unmarked right cusp, missing base point on a cusped component).
class HypothesisError : public InputError {
  using InputError::InputError;
};

/// Enumeration would exceed the configured assignment budget.
class BudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rulinglab
