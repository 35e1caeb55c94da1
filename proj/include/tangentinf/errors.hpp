#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tangentinf {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text did not conform to the expression or problem-file grammar.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// Structurally invalid problem: name clashes, missing objective, constant
// contradictions and the like.
struct ProblemError : Error {
  using Error::Error;
};

// More inequality constraints than the active-set enumeration cap allows.
struct ActiveSetCapError : ProblemError {
  using ProblemError::ProblemError;
};

// A symbolic stage ran past its step budget. `stage` names the stage so the
// caller can decide whether a fallback route exists.
struct BudgetExceededError : Error {
  std::string stage;
  std::uint64_t steps;
  BudgetExceededError(const std::string& stage_, std::uint64_t steps_)
      : Error("budget exceeded in " + stage_ + " after " +
              std::to_string(steps_) + " steps"),
        stage(stage_),
        steps(steps_) {}
};

// Elimination produced nothing usable (zero elimination ideal where a curve
// or value polynomial was required).
struct NonGenericSystemError : Error {
  using Error::Error;
};

// Symbolic and numeric answers disagree past tolerance, or certification
// failed outright where theory says a branch must exist. Exit code 3.
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace tangentinf
