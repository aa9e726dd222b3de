#pragma once

#include "moment_gibbs/state_space.hpp"

namespace mgibbs {

/// Probability vector over the states of a finite set.
/// Entries are non-negative and sum to 1 within kDistributionSumTolerance.
class Distribution {
 public:
  explicit Distribution(Vector probs);

  static Distribution uniform(Index count);

  const Vector& probs() const noexcept { return probs_; }
  Index size() const noexcept { return probs_.size(); }
  double operator[](Index i) const { return probs_[i]; }

 private:
  Vector probs_;
};

inline constexpr double kDistributionSumTolerance = 1e-12;

struct GibbsSummary {
  double log_z;
  Distribution distribution;
  Vector mean_energy;
  Matrix covariance;
  double entropy;  // nats
};

/// log Z(beta) = log sum_w exp(-(beta, w)), evaluated with a max shift so it
/// is finite for every finite beta.
double log_partition(const StateSet& states, const CoVector& beta);

/// p_w = exp(-(beta, w) - log Z(beta)).
Distribution gibbs_distribution(const StateSet& states, const CoVector& beta);

double mean_observable(const Distribution& p, const Observable& observable);

/// <E>(beta) = sum_w p_w(beta) w = -grad log Z(beta).
Vector mean_energy(const StateSet& states, const CoVector& beta);

/// Covariance of the energy vector under the Gibbs distribution. This is the
/// Hessian of log Z and minus the Jacobian of mean_energy.
Matrix energy_covariance(const StateSet& states, const CoVector& beta);

/// Shannon entropy in nats, with 0 log 0 = 0.
double entropy(const Distribution& p);

GibbsSummary gibbs_summary(const StateSet& states, const CoVector& beta);

/// Mean of the state points under an arbitrary distribution on them.
Vector expected_point(const StateSet& states, const Distribution& p);

}  // namespace mgibbs
