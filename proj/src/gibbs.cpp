#include "moment_gibbs/gibbs.hpp"

#include <cmath>

namespace mgibbs {

Distribution::Distribution(Vector probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) {
    throw Error(ErrorKind::InvalidDistribution, "distribution is empty");
  }
  if (!probs_.allFinite() || (probs_.array() < 0.0).any()) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities must be finite and non-negative");
  }
  const double total = probs_.sum();
  if (std::abs(total - 1.0) > kDistributionSumTolerance) {
    throw Error(ErrorKind::InvalidDistribution,
                "probabilities sum to " + std::to_string(total) + ", expected 1");
  }
}

Distribution Distribution::uniform(Index count) {
  return Distribution(Vector::Constant(count, 1.0 / static_cast<double>(count)));
}

namespace {

// Exponents -(beta, w) for every state.
Vector negative_pairings(const StateSet& states, const CoVector& beta) {
  require_dim(states, beta);
  return -(states.points() * beta.components());
}

double log_sum_exp(const Vector& exponents) {
  const double shift = exponents.maxCoeff();
  return shift + std::log((exponents.array() - shift).exp().sum());
}

Vector probabilities(const Vector& exponents, double log_z) {
  Vector p = (exponents.array() - log_z).exp();
  // Renormalize away the last few ulps so the sum invariant holds tightly.
  return p / p.sum();
}

}  // namespace

double log_partition(const StateSet& states, const CoVector& beta) {
  return log_sum_exp(negative_pairings(states, beta));
}

Distribution gibbs_distribution(const StateSet& states, const CoVector& beta) {
  const Vector exponents = negative_pairings(states, beta);
  return Distribution(probabilities(exponents, log_sum_exp(exponents)));
}

double mean_observable(const Distribution& p, const Observable& observable) {
  if (observable.size() != p.size()) {
    throw Error(ErrorKind::LengthMismatch, "observable has " + std::to_string(observable.size()) +
                                               " values, distribution has " +
                                               std::to_string(p.size()) + " states");
  }
  return p.probs().dot(observable.values());
}

Vector expected_point(const StateSet& states, const Distribution& p) {
  if (p.size() != states.size()) {
    throw Error(ErrorKind::LengthMismatch, "distribution does not index this state set");
  }
  // Average the offsets from the barycenter; keeps cancellation small when
  // the points sit far from the origin.
  const Vector center = states.frame().origin;
  const Matrix offsets = states.points().rowwise() - center.transpose();
  return center + offsets.transpose() * p.probs();
}

Vector mean_energy(const StateSet& states, const CoVector& beta) {
  return expected_point(states, gibbs_distribution(states, beta));
}

namespace {

Matrix covariance_of(const StateSet& states, const Vector& probs, const Vector& mean) {
  const Matrix centered = states.points().rowwise() - mean.transpose();
  Matrix cov = centered.transpose() * probs.asDiagonal() * centered;
  return 0.5 * (cov + cov.transpose());
}

}  // namespace

Matrix energy_covariance(const StateSet& states, const CoVector& beta) {
  const Distribution p = gibbs_distribution(states, beta);
  return covariance_of(states, p.probs(), expected_point(states, p));
}

double entropy(const Distribution& p) {
  double s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    const double q = p[i];
    if (q > 0.0) s -= q * std::log(q);
  }
  return s;
}

GibbsSummary gibbs_summary(const StateSet& states, const CoVector& beta) {
  const Vector exponents = negative_pairings(states, beta);
  const double log_z = log_sum_exp(exponents);
  Distribution p(probabilities(exponents, log_z));
  Vector mean = expected_point(states, p);
  Matrix cov = covariance_of(states, p.probs(), mean);
  const double s = entropy(p);
  return GibbsSummary{log_z, std::move(p), std::move(mean), std::move(cov), s};
}

}  // namespace mgibbs
