#include "thermores/statespace.hpp"

#include <string>

#include "thermores/errors.hpp"

namespace thermores {

ThermoState ThermoState::make(std::vector<Rat> probs, std::vector<Rat> weights) {
  if (probs.empty()) throw Error(ErrorCode::DimensionMismatch, "state must have at least one level");
  if (probs.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(probs.size()) + " probabilities vs " +
                    std::to_string(weights.size()) + " weights");
  }
  Rat total;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (weights[i].sign() <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight " + std::to_string(i) + " = " + weights[i].str());
    }
    if (probs[i].sign() < 0) {
      throw Error(ErrorCode::NegativeProbability,
                  "probability " + std::to_string(i) + " = " + probs[i].str());
    }
    total += probs[i];
  }
  if (total != Rat(1)) throw Error(ErrorCode::ProbSumNotOne, "probabilities sum to " + total.str());
  return ThermoState(std::move(probs), std::move(weights));
}

Rat ThermoState::partition_function() const {
  Rat z;
  for (const auto& g : weights_) z += g;
  return z;
}

std::vector<double> ThermoState::probs_as_double() const {
  std::vector<double> out;
  out.reserve(probs_.size());
  for (const auto& p : probs_) out.push_back(p.to_double());
  return out;
}

std::vector<double> ThermoState::energies() const {
  std::vector<double> out;
  out.reserve(weights_.size());
  for (const auto& g : weights_) out.push_back(-g.log());
  return out;
}

std::size_t ThermoState::support_size() const {
  std::size_t n = 0;
  for (const auto& p : probs_) n += p.is_zero() ? 0 : 1;
  return n;
}

ThermoState gibbs_of(const ThermoState& state) {
  const Rat z = state.partition_function();
  std::vector<Rat> probs;
  probs.reserve(state.dimension());
  for (const auto& g : state.weights()) probs.push_back(g / z);
  return ThermoState::make(std::move(probs), state.weights());
}

bool is_gibbs(const ThermoState& state) { return state == gibbs_of(state); }

ThermoState tensor(const ThermoState& a, const ThermoState& b) {
  std::vector<Rat> probs;
  std::vector<Rat> weights;
  probs.reserve(a.dimension() * b.dimension());
  weights.reserve(a.dimension() * b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      probs.push_back(a.probs()[i] * b.probs()[j]);
      weights.push_back(a.weights()[i] * b.weights()[j]);
    }
  }
  return ThermoState::make(std::move(probs), std::move(weights));
}

Transition Transition::make(ThermoState initial, ThermoState final) {
  if (initial.dimension() != final.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "initial and final states differ in dimension");
  }
  if (initial.weights() != final.weights()) {
    throw Error(ErrorCode::WeightMismatch,
                "initial and final states must share their Gibbs weights (use clock_lift "
                "for a time-dependent Hamiltonian)");
  }
  return Transition(std::move(initial), std::move(final));
}

Transition clock_lift(const ThermoState& initial_state, const ThermoState& final_state) {
  const std::size_t n = initial_state.dimension();
  const std::size_t m = final_state.dimension();
  std::vector<Rat> weights;
  weights.reserve(n + m);
  weights.insert(weights.end(), initial_state.weights().begin(), initial_state.weights().end());
  weights.insert(weights.end(), final_state.weights().begin(), final_state.weights().end());

  std::vector<Rat> p(n + m), q(n + m);
  for (std::size_t i = 0; i < n; ++i) p[i] = initial_state.probs()[i];
  for (std::size_t j = 0; j < m; ++j) q[n + j] = final_state.probs()[j];
  return Transition::make(ThermoState::make(std::move(p), weights),
                          ThermoState::make(std::move(q), weights));
}

}  // namespace thermores
