#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parser failures carry a position so the CLI can point at the offending text.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

struct BudgetExceeded : Error {
  long long budget = 0;
  explicit BudgetExceeded(const std::string& what_, long long budget_)
      : Error(what_ + ": budget " + std::to_string(budget_) + " exceeded"), budget(budget_) {}
};

struct LimitExceeded : Error {
  explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

struct SignatureMismatch : Error {
  explicit SignatureMismatch(const std::string& msg) : Error(msg) {}
};

struct IncompatiblePartition : Error {
  explicit IncompatiblePartition(const std::string& msg) : Error(msg) {}
};

struct NotGenerated : Error {
  explicit NotGenerated(const std::string& msg) : Error(msg) {}
};

struct NotCentral : Error {
  explicit NotCentral(const std::string& msg) : Error(msg) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& msg) : Error(msg) {}
};

struct NotASection : Error {
  explicit NotASection(const std::string& msg) : Error(msg) {}
};

struct DecompositionFailed : Error {
  explicit DecompositionFailed(const std::string& msg) : Error(msg) {}
};

struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& msg) : Error(msg) {}
};

struct NotSurjective : Error {
  explicit NotSurjective(const std::string& msg) : Error(msg) {}
};

struct IncompatibleResult : Error {
  explicit IncompatibleResult(const std::string& msg) : Error(msg) {}
};

}  // namespace ualg
