#include "moment_gibbs/toric.hpp"

namespace mgibbs {

WeightVector::WeightVector(Vector weights) : weights_(std::move(weights)) {
  if (!weights_.allFinite()) {
    throw Error(ErrorKind::NonFinite, "weights must be finite");
  }
  if ((weights_.array() < 0.0).any()) {
    throw Error(ErrorKind::InvalidDistribution, "weights must be non-negative");
  }
  if (weights_.size() == 0 || !(weights_.sum() > 0.0)) {
    throw Error(ErrorKind::AllZeroWeights, "weights are all zero");
  }
}

namespace {

// exp(-factor * (beta, w) - m) with m the largest exponent.
Vector normalized_exponentials(const StateSet& states, const CoVector& beta, double factor) {
  require_dim(states, beta);
  const Vector exponents = -factor * (states.points() * beta.components());
  return (exponents.array() - exponents.maxCoeff()).exp();
}

}  // namespace

WeightVector positive_point(const StateSet& states, const CoVector& beta) {
  return WeightVector(normalized_exponentials(states, beta, 1.0));
}

Vector projective_moment(const StateSet& states, const WeightVector& weights) {
  if (weights.size() != states.size()) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(states.size()) +
                                               " weights, got " + std::to_string(weights.size()));
  }
  const Vector& w = weights.weights();
  return states.points().transpose() * w / w.sum();
}

Vector moment_of_beta(const StateSet& states, const CoVector& beta) {
  // |x(beta)_w|^2 = exp(-2 (beta, w)), formed directly in log space.
  return projective_moment(states, WeightVector(normalized_exponentials(states, beta, 2.0)));
}

}  // namespace mgibbs
