#pragma once

#include <cstdint>
#include <string>

namespace expanse {

/// State of the discrete doubling process: a determined outcome x0 uniformly
/// distributed over [1, s0 * 2^n], with the space partitioned into 2^n
/// contiguous blocks of size s0.
struct DoublingState {
  std::uint32_t n = 0;   // doubling count
  std::uint64_t s0 = 1;  // base partition size, >= 1
};

// Guards keeping the exact-integer paths at desk scale. Log-domain formulas
// in expansion.hpp cover larger doubling counts.
inline constexpr std::uint32_t kMaxExactDoublings = 62;       // integer totals
inline constexpr std::uint32_t kMaxEnumerationDoublings = 30; // 2^n summation terms
inline constexpr std::uint32_t kMaxMonteCarloDoublings = 20;

/// Double the sample space: n -> n + 1, s0 unchanged.
/// Throws std::overflow_error past kMaxExactDoublings.
DoublingState expand_once(const DoublingState& state);

/// s0 * 2^n. Throws std::overflow_error when it does not fit 64 bits.
std::uint64_t total_size(const DoublingState& state);

/// Zero-based index of the contiguous partition block [k*s0 + 1, (k+1)*s0]
/// containing an outcome value in [1, total_size].
std::uint64_t partition_index(const DoublingState& state, std::uint64_t value);

/// Cumulative probability of x0 landing in any given partition of size s0,
/// as the exact rational (1/2)^n alongside its real value.
struct PartitionProbability {
  std::uint64_t numerator;    // always 1
  std::uint64_t denominator;  // 2^n
  double value;               // 2^-n
};
PartitionProbability partition_probability(const DoublingState& state);

/// Entropy in nats obtained by literally summing -p ln p over all 2^n
/// partitions, each holding cumulative probability (1/2)^n. Serves as the
/// brute-force oracle against the closed form n ln 2.
/// Throws std::invalid_argument past kMaxEnumerationDoublings.
double enumerate_entropy(const DoublingState& state);

struct MonteCarloResult {
  double frequency;       // empirical share of draws landing in partition 0
  double std_error;       // binomial standard error sqrt(f(1-f)/draws)
  std::uint64_t hits;
  std::uint64_t draws;
  std::uint64_t seed;
  std::string generator;  // algorithm identifier, recorded for reproducibility
};

/// Draw uniform integers over [1, s0 * 2^n] and report how often the first
/// partition is hit. Deterministic for a fixed seed.
MonteCarloResult monte_carlo_partition_probability(const DoublingState& state,
                                                   std::uint64_t draws,
                                                   std::uint64_t seed);

}  // namespace expanse
