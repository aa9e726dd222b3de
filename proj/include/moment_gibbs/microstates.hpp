#pragma once

#include <cstdint>
#include <vector>

#include "moment_gibbs/gibbs.hpp"

namespace mgibbs {

/// SplitMix64 (Steele, Lea & Flood 2014). Output i of seed s depends only on
/// (s, i), so streams can be split or skipped without shared state.
///
/// Test vectors, seed 1234567, outputs 0..4:
///   6457827717110365317, 3203168211198807973, 9817491932198370423,
///   4593380528125082431, 16408922859458223821
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  /// Output number `counter` of the stream.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return at(seed_, counter_++); }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// A child stream keyed by the next output.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Occupation numbers of `total` distinguishable particles.
struct MicrostateCounts {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t seed = 0;
};

/// Draws `total` i.i.d. states from p (inverse CDF on SplitMix64 uniforms)
/// and counts them. Deterministic in (p, total, seed).
MicrostateCounts sample_counts(const Distribution& p, std::int64_t total, std::uint64_t seed);

/// q_w = counts_w / total.
Distribution empirical_distribution(const MicrostateCounts& c);

/// Log-probability of the occupation numbers under the multinomial measure:
/// log total! - sum log counts_w! + sum counts_w log p_w.
/// Returns -infinity (the measure-zero outcome) when some state with p_w = 0
/// is occupied.
double log_multinomial_measure(const Distribution& p, const MicrostateCounts& counts);

/// log Gamma(total + 1) - sum_w log Gamma(total p_w + 1): the log-number of
/// equilibrium microstates, interpolated for non-integer total * p_w.
double log_equilibrium_count(const Distribution& p, std::int64_t total);

/// sum_w q_w (log p_w - log q_w) = -KL(q || p). At most 0, with equality
/// exactly when q = p. Returns -infinity when q puts mass where p has none.
double log_likelihood_gap(const Distribution& q, const Distribution& p);

}  // namespace mgibbs
