#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

/// Qubit Carnot engine, H_S = epsilon |1><1|, k_B = 1. Temperatures are
/// stored directly so that the efficiency 1 - T_C/T_H is one rounding away
/// from exact.
struct EngineSpec {
  double epsilon = 1.0;
  double t_hot = 2.0;
  double t_cold = 1.0;

  double beta_hot() const { return 1.0 / t_hot; }
  double beta_cold() const { return 1.0 / t_cold; }
};

/// Throws Error(InvalidTemperatures) unless 0 < t_cold <= t_hot, and
/// Error(InvalidArgument) unless epsilon > 0.
void validate(const EngineSpec& spec);

/// One row of the combined reservoir: probability x_C * x_H and the three
/// energies the level takes in rho_W1, rho_W2, rho_W3.
struct LevelRow {
  std::string label;
  double probability;
  std::array<double, 3> energy;
};

using LevelTable = std::array<LevelRow, 4>;

/// Energies -T_H ln(c1 x) - T_C ln(c2 y) for the four population products.
LevelTable reservoir_level_table(const EngineSpec& spec, double c1 = 1.0, double c2 = 1.0);

/// Exact zero-dissipation certificate for one work-extraction step, built on
/// rational approximations of the populations and Boltzmann factor.
struct StepCertificate {
  std::string name;
  double temperature;
  ThermoState approx_state;
  Reservoir reservoir;
  bool verified;
  /// Largest absolute error introduced by the rational approximation.
  double approximation_gap;
  /// Work extracted, in energy units: T * average_work(reservoir).
  double work;
};

struct EngineReport {
  EngineSpec spec;
  double p_cold;  // excited-state population of tau_C
  double p_hot;
  double s_cold;  // von Neumann entropy of tau_C, nats
  double s_hot;
  double q_hot;   // heat into the hot bath
  double q_cold;
  double work;
  double eta;
  double work_hot_step;   // T_H D(tau_C || tau_H)
  double work_cold_step;  // T_C D(tau_H || tau_C)
  LevelTable levels;
  std::vector<StepCertificate> steps;
};

inline constexpr std::uint64_t kEngineMaxDenominator = 1000000;

EngineReport run_carnot(const EngineSpec& spec,
                        std::uint64_t max_denominator = kEngineMaxDenominator);

/// Qubit thermal state at temperature t as (ground, excited) probabilities.
std::array<double, 2> qubit_gibbs(double epsilon, double t);

}  // namespace thermores
