#include "expanse/discrete.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace expanse {

namespace {

void check_state(const DoublingState& state) {
  if (state.s0 < 1) throw std::invalid_argument("base partition size s0 must be >= 1");
}

// Uniform integer in [1, bound] by rejection below the largest multiple of
// bound, so the mapping from raw 64-bit words is exactly uniform.
std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t word;
  do {
    word = rng();
  } while (word >= limit);
  return word % bound + 1;
}

}  // namespace

DoublingState expand_once(const DoublingState& state) {
  check_state(state);
  if (state.n >= kMaxExactDoublings)
    throw std::overflow_error("doubling count exceeds exact-integer bookkeeping limit");
  return DoublingState{state.n + 1, state.s0};
}

std::uint64_t total_size(const DoublingState& state) {
  check_state(state);
  if (state.n > kMaxExactDoublings)
    throw std::overflow_error("doubling count exceeds exact-integer bookkeeping limit");
  const std::uint64_t partitions = std::uint64_t{1} << state.n;
  if (state.s0 > std::numeric_limits<std::uint64_t>::max() / partitions)
    throw std::overflow_error("total sample-space size does not fit 64 bits");
  return state.s0 * partitions;
}

std::uint64_t partition_index(const DoublingState& state, std::uint64_t value) {
  if (value < 1 || value > total_size(state))
    throw std::out_of_range("outcome value outside [1, s0 * 2^n]");
  return (value - 1) / state.s0;
}

PartitionProbability partition_probability(const DoublingState& state) {
  check_state(state);
  if (state.n > kMaxExactDoublings)
    throw std::overflow_error("doubling count exceeds exact rational range");
  const std::uint64_t den = std::uint64_t{1} << state.n;
  return PartitionProbability{1, den, std::ldexp(1.0, -static_cast<int>(state.n))};
}

double enumerate_entropy(const DoublingState& state) {
  check_state(state);
  if (state.n > kMaxEnumerationDoublings)
    throw std::invalid_argument("enumeration limited to n <= 30 (2^n terms)");
  const std::uint64_t partitions = std::uint64_t{1} << state.n;
  const double p = std::ldexp(1.0, -static_cast<int>(state.n));
  // Kahan-compensated sum of 2^n identical terms -p ln p.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t k = 0; k < partitions; ++k) {
    const double term = (state.n == 0) ? 0.0 : -p * std::log(p) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

MonteCarloResult monte_carlo_partition_probability(const DoublingState& state,
                                                   std::uint64_t draws,
                                                   std::uint64_t seed) {
  check_state(state);
  if (state.n > kMaxMonteCarloDoublings)
    throw std::invalid_argument("Monte Carlo limited to n <= 20");
  if (draws < 1) throw std::invalid_argument("draws must be >= 1");
  const std::uint64_t total = total_size(state);

  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const std::uint64_t value = draw_uniform(rng, total);
    if (partition_index(state, value) == 0) ++hits;
  }

  const double frequency = static_cast<double>(hits) / static_cast<double>(draws);
  const double std_error = std::sqrt(frequency * (1.0 - frequency) / static_cast<double>(draws));
  return MonteCarloResult{frequency, std_error, hits, draws, seed, "mt19937_64-rejection"};
}

}  // namespace expanse
