#pragma once

#include <vector>

#include "moment_gibbs/polytope.hpp"
#include "moment_gibbs/state_space.hpp"

namespace mgibbs {

struct SolveOptions {
  double grad_tol = 1e-10;
  int max_iter = 100;
  double line_search_shrink = 0.5;
  double regularization_floor = 1e-12;

  /// Throws InvalidOptions unless every field is positive, grad_tol < 1 and
  /// line_search_shrink < 1.
  void validate() const;
};

struct SolveReport {
  CoVector beta;
  int iterations = 0;
  /// ||target - <E>(beta)||_inf in span coordinates, divided by the hull diameter.
  double grad_norm = 0.0;
  double entropy = 0.0;
  bool converged = false;
  /// The state set spans a proper affine subspace: the solve ran in span
  /// coordinates and beta is only determined up to the span's annihilator.
  bool reduced = false;
  /// Squared Newton decrement g^T H^{-1} g before each step.
  std::vector<double> decrements;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& message, SolveReport report)
      : Error(ErrorKind::NoConvergence, message), report_(std::move(report)) {}

  const SolveReport& report() const noexcept { return report_; }

 private:
  SolveReport report_;
};

/// Hull-relative margin below which a target counts as boundary, as a
/// fraction of the hull diameter.
inline constexpr double kBoundaryMargin = 1e-9;

/// Finds beta with <E>(beta) = target by damped Newton on the convex dual
/// F(beta) = log Z(beta) + (beta, target). The Gibbs distribution at the
/// returned beta is the maximum-entropy distribution with mean `target`.
///
/// Targets outside the hull raise TargetOutsideHull; targets within
/// kBoundaryMargin * diameter of the boundary raise TargetOnBoundary (the
/// solution runs off to infinity there, see tropical_limit). Both carry the
/// signed margin. Exhausting max_iter raises NoConvergence with the report.
SolveReport invert_mean_energy(const StateSet& states, const Vector& target,
                               const SolveOptions& opts = {});

/// Same, reusing a hull already computed for `states`.
SolveReport invert_mean_energy(const StateSet& states, const Polytope& hull,
                               const Vector& target, const SolveOptions& opts = {});

/// S(target): entropy of the maximum-entropy distribution with mean `target`.
double entropy_of_mean(const StateSet& states, const Vector& target,
                       const SolveOptions& opts = {});

/// Gradient of entropy_of_mean at `target`, which is the solved beta.
CoVector solve_gradient(const StateSet& states, const Vector& target,
                        const SolveOptions& opts = {});

}  // namespace mgibbs
