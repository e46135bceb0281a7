#pragma once

#include <stdexcept>
#include <string>

namespace multilat {

enum class Err {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  EmptySubset,
  ShapeMismatch,
  UnknownName,
  DomainMismatch,
  BudgetExceeded,
  NotAMaximum,
  SizeTooLarge,
  UnverifiedInput,
  ClosednessViolated,
  EmptySelection,
  ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

// CLI convention: 2 = malformed or unusable input, 1 = semantic failure.
inline int exit_code_for(Err e) {
  switch (e) {
    case Err::UnverifiedInput:
    case Err::ClosednessViolated:
      return 1;
    default:
      return 2;
  }
}

}  // namespace multilat
