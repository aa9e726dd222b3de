#include "moment_gibbs/microstates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mgibbs {

namespace {

void require_total(std::int64_t total) {
  if (total < 1) {
    throw Error(ErrorKind::InvalidTotal, "total must be at least 1, got " + std::to_string(total));
  }
}

}  // namespace

MicrostateCounts sample_counts(const Distribution& p, std::int64_t total, std::uint64_t seed) {
  require_total(total);
  std::vector<double> cumulative(static_cast<std::size_t>(p.size()));
  double running = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    running += p[i];
    cumulative[static_cast<std::size_t>(i)] = running;
  }
  for (double& c : cumulative) c /= running;

  MicrostateCounts result;
  result.counts.assign(cumulative.size(), 0);
  result.total = static_cast<std::uint64_t>(total);
  result.seed = seed;

  SplitMix64 rng(seed);
  for (std::int64_t draw = 0; draw < total; ++draw) {
    const double u = rng.next_double();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;  // u rounds above the last cumulative
    // Step back over trailing zero-probability states.
    while (it != cumulative.begin() && p[it - cumulative.begin()] == 0.0) --it;
    ++result.counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return result;
}

Distribution empirical_distribution(const MicrostateCounts& c) {
  Vector q(static_cast<Index>(c.counts.size()));
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    q[static_cast<Index>(i)] = static_cast<double>(c.counts[i]) / static_cast<double>(c.total);
  }
  return Distribution(std::move(q));
}

double log_multinomial_measure(const Distribution& p, const MicrostateCounts& counts) {
  if (static_cast<Index>(counts.counts.size()) != p.size()) {
    throw Error(ErrorKind::LengthMismatch, "counts have " + std::to_string(counts.counts.size()) +
                                               " entries, distribution has " +
                                               std::to_string(p.size()));
  }
  double value = std::lgamma(static_cast<double>(counts.total) + 1.0);
  for (Index i = 0; i < p.size(); ++i) {
    const auto n = static_cast<double>(counts.counts[static_cast<std::size_t>(i)]);
    if (n == 0.0) continue;
    if (p[i] == 0.0) return -std::numeric_limits<double>::infinity();
    value += n * std::log(p[i]) - std::lgamma(n + 1.0);
  }
  return value;
}

double log_equilibrium_count(const Distribution& p, std::int64_t total) {
  require_total(total);
  const auto n = static_cast<double>(total);
  double value = std::lgamma(n + 1.0);
  for (Index i = 0; i < p.size(); ++i) value -= std::lgamma(n * p[i] + 1.0);
  return value;
}

double log_likelihood_gap(const Distribution& q, const Distribution& p) {
  if (q.size() != p.size()) {
    throw Error(ErrorKind::LengthMismatch, "distributions have different lengths");
  }
  double value = 0.0;
  for (Index i = 0; i < q.size(); ++i) {
    if (q[i] == 0.0) continue;
    if (p[i] == 0.0) return -std::numeric_limits<double>::infinity();
    value += q[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return value;
}

}  // namespace mgibbs
