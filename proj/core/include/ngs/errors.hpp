#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ngs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The policy assigned zero weight to every feasible token of a
/// non-terminal state. This is a contract violation of the policy or
/// environment, never a normal search outcome.
class NoFeasibleTokenError : public Error {
 public:
  NoFeasibleTokenError() : Error("no feasible token") {}
};

/// A non-terminal state produced an all-false feasibility mask.
class EnvironmentDeadlockError : public Error {
 public:
  EnvironmentDeadlockError() : Error("environment deadlock") {}
};

/// A token was applied that the feasibility mask forbids.
class MaskViolationError : public Error {
 public:
  explicit MaskViolationError(const std::string& reason)
      : Error("mask violation: " + reason) {}
};

/// File ingestion failure (TSPLib, heatmap, instance JSON).
class ParseError : public Error {
  using Error::Error;
};

/// Exact enumeration exceeded its sequence budget.
class EnumerationBudgetError : public Error {
 public:
  explicit EnumerationBudgetError(std::size_t count)
      : Error("enumeration budget exceeded after " + std::to_string(count) +
              " sequences"),
        count_(count) {}

  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

}  // namespace ngs
