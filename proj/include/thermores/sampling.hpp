#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

/// Seeded generators of small exact instances, shared by the oracle-check
/// command and the test suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  std::size_t uniform_index(std::size_t lo, std::size_t hi);
  bool coin(double p_true = 0.5);

  /// n entries k_i / sum(k) with k_i in [lo, max_units], lo = 0 when
  /// zeros are allowed; never all zero.
  std::vector<Rat> distribution(std::size_t n, int max_units = 12, bool allow_zero = false);

  /// Gibbs weights a/b with a in [1, max_num], b in [1, max_den].
  std::vector<Rat> weights(std::size_t n, int max_num = 5, int max_den = 3);

  ThermoState state(std::size_t n, bool allow_zero = false);
  ThermoState state_over(const std::vector<Rat>& weights, bool allow_zero = false);

  /// Shared-weight transition; with feasible = true the final state is the
  /// image of the initial one under an exact random Gibbs-stochastic map.
  Transition transition(std::size_t n, bool feasible, bool allow_zero = false);

 private:
  std::mt19937_64 rng_;
};

}  // namespace thermores
