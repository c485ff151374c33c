#pragma once

#include <stdexcept>
#include <string>

namespace rbcat {

// Every validation failure names the broken law and carries a concrete
// witness (the offending elements) in the message.
enum class Code {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  ActionMismatch,
  NotSubgroup,
  NotNormal,
  NotHom,
  NotAutomorphism,
  NotBijective,
  InterchangeFailure,
  GroupoidAxiomFailure,
  NotGroupoidMorphism,
  EqPhiFailure,
  Peiffer1Failure,
  Peiffer2Failure,
  EquivarianceFailure,
  SquareFailure,
  RRBFailure,
  ComponentFailure,
  MixedFailure,
  MixedIdentityFailure,
  IdentityFailure,
  CocycleFailure,
  NotAdjointAction,
  BraidFailure,
  FunctorialityFailure,
  InvariantViolation,
  SearchBudgetExceeded,
  ParseError,
};

const char* code_name(Code c);

class CheckError : public std::runtime_error {
 public:
  CheckError(Code code, std::string detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  Code code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Code code_;
  std::string detail_;
};

class BudgetExceeded : public CheckError {
 public:
  BudgetExceeded(long long budget)
      : CheckError(Code::SearchBudgetExceeded,
                   "node budget of " + std::to_string(budget) +
                       " exhausted; partial results discarded to keep output "
                       "schedule-independent"),
        budget_(budget) {}

  long long budget() const { return budget_; }

 private:
  long long budget_;
};

class ParseError : public CheckError {
 public:
  explicit ParseError(std::string detail)
      : CheckError(Code::ParseError, std::move(detail)) {}
};

}  // namespace rbcat
