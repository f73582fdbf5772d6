#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympdec {

enum class ErrorKind {
  DivisionByZero,
  ShapeMismatch,
  SingularMatrix,
  NotInGroup,
  IndexOutOfRange,
  OutOfRange,
  EvenN,
  BadBezout,
  NotCoprime,
  HypothesisFailure,
  CaseMismatch,
  MalformedHom,
  BoundsTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// onto exit codes and JSON without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::BadBezout: return "BadBezout";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::HypothesisFailure: return "HypothesisFailure";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::MalformedHom: return "MalformedHom";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sympdec
