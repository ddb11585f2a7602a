#ifndef CALQ_UTIL_ERROR_HPP
#define CALQ_UTIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace calq {

/// Failure categories surfaced by the library. The CLI maps ValidationError
/// to exit code 2 and NumericalError to exit code 3.
enum class ErrorKind {
  Validation,        // bad inputs, schema violations, precondition failures
  SingularPoint,     // weight evaluated on (or too near) its singular set
  InconsistentPartition,
  EigenvalueCollision,
  SolverDivergence,
  SupportViolation,
  BoundaryMismatch,
  DegenerateSweep,
  FrameViolation,
  TangentialReflection,
  EmptyFamily,
  Overflow,
  OutOfNeighborhood,
  UnsupportedFormat,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

  bool is_validation() const noexcept {
    switch (kind_) {
      case ErrorKind::Validation:
      case ErrorKind::SupportViolation:
      case ErrorKind::InconsistentPartition:
      case ErrorKind::FrameViolation:
      case ErrorKind::OutOfNeighborhood:
      case ErrorKind::UnsupportedFormat:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace calq

#endif
