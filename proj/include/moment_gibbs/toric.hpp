#pragma once

#include "moment_gibbs/state_space.hpp"

namespace mgibbs {

/// Squared amplitudes |a_w|^2 of a point of projective space, one per state.
class WeightVector {
 public:
  /// Throws AllZeroWeights when every weight is zero, NonFinite or
  /// InvalidDistribution for non-finite or negative entries.
  explicit WeightVector(Vector weights);

  const Vector& weights() const noexcept { return weights_; }
  Index size() const noexcept { return weights_.size(); }

 private:
  Vector weights_;
};

/// Point x(beta) = (exp(-(beta, w)))_w of the positive part of the toric
/// variety, rescaled so that its largest entry is 1. The rescaling does not
/// change the projective point.
WeightVector positive_point(const StateSet& states, const CoVector& beta);

/// Moment map sum_w w |a_w|^2 / sum_w |a_w|^2.
Vector projective_moment(const StateSet& states, const WeightVector& weights);

/// Moment map restricted to the positive part, as a function of beta. Equals
/// mean_energy(states, 2 beta).
Vector moment_of_beta(const StateSet& states, const CoVector& beta);

}  // namespace mgibbs
