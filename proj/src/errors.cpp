#include "moment_gibbs/errors.hpp"

namespace mgibbs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::EmptyStateSet: return "EmptyStateSet";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidLabels: return "InvalidLabels";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::InvalidOptions: return "InvalidOptions";
    case ErrorKind::TargetOutsideHull: return "TargetOutsideHull";
    case ErrorKind::TargetOnBoundary: return "TargetOnBoundary";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OffAffineSpan: return "OffAffineSpan";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::InvalidTotal: return "InvalidTotal";
    case ErrorKind::AllZeroWeights: return "AllZeroWeights";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace mgibbs
