#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mgibbs {

enum class ErrorKind {
  DimensionMismatch,
  LengthMismatch,
  DuplicatePoint,
  EmptyStateSet,
  NonFinite,
  InvalidLabels,
  InvalidDistribution,
  InvalidOptions,
  TargetOutsideHull,
  TargetOnBoundary,
  NoConvergence,
  OffAffineSpan,
  UnsupportedDimension,
  ZeroDirection,
  NotNegativeDefinite,
  BadSplit,
  InvalidTotal,
  AllZeroWeights,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. `kind()` lets
/// callers (the CLI in particular) triage without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a target mean lies outside, or on the boundary of, the hull.
class InfeasibleTarget : public Error {
 public:
  InfeasibleTarget(ErrorKind kind, const std::string& message, double margin)
      : Error(kind, message), margin_(margin) {}

  /// Signed interior margin of the rejected target.
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

}  // namespace mgibbs
