#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gww {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  MismatchedParents,
  NotGaloisSymmetric,
  SingularForm,
  NotAlternating,
  NonCommuting,
  ShapeMismatch,
  NotEmbedding,
  PointOnCurve,
  DegenerateConfiguration,
  ChartFailure,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw MathError(kind, what);
}

}  // namespace gww
