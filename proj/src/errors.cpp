#include "gww/errors.hpp"

namespace gww {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MismatchedParents: return "MismatchedParents";
    case ErrorKind::NotGaloisSymmetric: return "NotGaloisSymmetric";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotEmbedding: return "NotEmbedding";
    case ErrorKind::PointOnCurve: return "PointOnCurve";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::ChartFailure: return "ChartFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gww
