#pragma once

#include <stdexcept>
#include <string>

namespace classize {

/// Violated precondition or out-of-range argument.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text.  Positions are 1-based.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Evaluation failure (unbound variable, unsupported fragment).
struct eval_error : std::runtime_error {
  explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

/// Step budget exhausted during quantifier evaluation.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace classize
