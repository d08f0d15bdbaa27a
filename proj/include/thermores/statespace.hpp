#pragma once

#include <cstddef>
#include <vector>

#include "thermores/rational.hpp"

namespace thermores {

/// Energy-incoherent state: a probability vector paired with Gibbs weights
/// g_i = exp(-beta e_i). Energies are measured in units of k_B T, so the
/// weights carry the whole Hamiltonian and the partition function is sum(g).
///
/// Invariants, checked on construction: equal lengths >= 1, probabilities
/// nonnegative and summing to exactly 1, weights strictly positive.
class ThermoState {
 public:
  /// Throws Error with DimensionMismatch, NonPositiveWeight,
  /// NegativeProbability or ProbSumNotOne.
  static ThermoState make(std::vector<Rat> probs, std::vector<Rat> weights);

  const std::vector<Rat>& probs() const { return probs_; }
  const std::vector<Rat>& weights() const { return weights_; }
  std::size_t dimension() const { return probs_.size(); }

  Rat partition_function() const;
  std::vector<double> probs_as_double() const;
  /// e_i = -ln g_i. Display only; every decision uses the exact weights.
  std::vector<double> energies() const;
  std::size_t support_size() const;

  friend bool operator==(const ThermoState&, const ThermoState&) = default;

 private:
  ThermoState(std::vector<Rat> probs, std::vector<Rat> weights)
      : probs_(std::move(probs)), weights_(std::move(weights)) {}

  std::vector<Rat> probs_;
  std::vector<Rat> weights_;
};

inline ThermoState make_state(std::vector<Rat> probs, std::vector<Rat> weights) {
  return ThermoState::make(std::move(probs), std::move(weights));
}

/// Gibbs distribution g_i / Z over the same weights.
ThermoState gibbs_of(const ThermoState& state);

bool is_gibbs(const ThermoState& state);

/// Composite system: probabilities p_i q_j and weights g_i h_j, index i*|b|+j.
ThermoState tensor(const ThermoState& a, const ThermoState& b);

/// Pair of states over one shared set of Gibbs weights.
class Transition {
 public:
  /// Throws Error(DimensionMismatch / WeightMismatch) unless both states
  /// carry the same weights elementwise.
  static Transition make(ThermoState initial, ThermoState final);

  const ThermoState& initial() const { return initial_; }
  const ThermoState& final() const { return final_; }
  const std::vector<Rat>& weights() const { return initial_.weights(); }
  std::size_t dimension() const { return initial_.dimension(); }
  bool is_identity() const { return initial_ == final_; }

 private:
  Transition(ThermoState initial, ThermoState final)
      : initial_(std::move(initial)), final_(std::move(final)) {}

  ThermoState initial_;
  ThermoState final_;
};

inline Transition make_transition(ThermoState initial, ThermoState final) {
  return Transition::make(std::move(initial), std::move(final));
}

/// Time-dependent Hamiltonian via a two-level clock: the joint Hamiltonian
/// is H (x) |0><0| + H' (x) |1><1|. Joint weights are the concatenation
/// [g, g']; the initial state lives on the clock-0 block and the final state
/// on the clock-1 block.
Transition clock_lift(const ThermoState& initial_state, const ThermoState& final_state);

}  // namespace thermores
