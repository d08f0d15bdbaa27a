#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "thermores/statespace.hpp"

namespace thermores {

struct AlphaWitness {
  double alpha;
  double d_initial;
  double d_final;
};

struct CtoVerdict {
  /// false is an exact rejection; true only means no grid point objected.
  bool feasible = true;
  std::vector<AlphaWitness> witnessed_alphas;
  /// A finite grid can reject but never certify the all-alpha condition.
  bool sound_for_rejection_only = true;
  /// Some alpha < 0 met a zero in the initial or final state (value +inf).
  bool negative_alpha_zero = false;
};

/// D_alpha(initial||tau) >= D_alpha(final||tau) at each grid point, with
/// 1e-12 slack.
CtoVerdict cto_feasible(const Transition& t, const std::vector<double>& alpha_grid);

/// Splits a joint state over system (x) catalyst, index i * catalyst_dim + j.
struct ProductFactors {
  ThermoState system;
  ThermoState catalyst;
};

/// Throws DimensionMismatch or NotProductState (probabilities or weights do
/// not factor exactly).
ProductFactors factor_product(const ThermoState& joint, std::size_t catalyst_dim);

/// Catalyst elimination under zero dissipation: given product joint states
/// with a common catalyst marginal and coincident joint curves, the system
/// curves coincide too. Returns that system-level verdict (always true when
/// the preconditions hold). Throws NotProductState, CatalystMarginalMismatch,
/// WeightMismatch, or JointCurvesDiffer when the joint curves do not coincide.
bool strip_catalyst(const ThermoState& joint_init, const ThermoState& joint_fin,
                    std::size_t catalyst_dim);

/// (curves coincide, D_alpha(.||tau) equal at every grid point within 1e-12).
/// Throws WeightMismatch when a and b use different weights.
std::pair<bool, bool> coincide_iff_alpha_equal(const ThermoState& a, const ThermoState& b,
                                               const std::vector<double>& alpha_grid);

}  // namespace thermores
