#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

class Reservoir;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DivergenceValue {
  double value = 0.0;
  /// Set when alpha < 0 and p vanishes somewhere q does not; value is +inf.
  bool negative_alpha_zero = false;
};

/// Classical Renyi divergence in nats. alpha = 0, 1 and +inf are the limits
/// -ln sum_{p>0} q, KL and max ln(p/q). For alpha < 0 the prefactor carries
/// sgn(alpha) so that D_alpha stays nonnegative and monotone under Gibbs
/// maps. Throws Error(DimensionMismatch).
double renyi(double alpha, const ThermoState& p, const ThermoState& q);
DivergenceValue renyi_flagged(double alpha, const ThermoState& p, const ThermoState& q);

/// Same, on raw probability vectors.
DivergenceValue renyi_probs(double alpha, const std::vector<Rat>& p, const std::vector<Rat>& q);

/// Exact inner argument of D_0: sum of q over p's support. D_0 = -ln of it.
Rat d0_argument(const ThermoState& p, const ThermoState& q);
/// Exact inner argument of D_inf: max p_i/q_i. nullopt when q vanishes on
/// p's support (D_inf = +inf).
std::optional<Rat> dinf_argument(const ThermoState& p, const ThermoState& q);

/// D_1(initial||tau) - D_1(final||tau). Feasibility is not checked.
double entropy_production(const Transition& t);

/// -ln Z + D_alpha(p || gibbs_of(p)), with k_B T = 1.
double alpha_free_energy(double alpha, const ThermoState& p);

struct AlphaProfile {
  std::vector<double> alphas;
  std::vector<double> values;
};

AlphaProfile alpha_profile(const ThermoState& p, const ThermoState& q,
                           const std::vector<double>& alphas);

/// {-2, -1, -1/2, 0, 1/4, 1/2, 1, 2, 4, inf}.
std::vector<double> default_alpha_grid();
/// Default grid restricted to alpha >= 0.
std::vector<double> nonnegative_alpha_grid();

/// Free-energy ratio identity for an efficient reservoir of `sys`, read in
/// the formation direction (the reservoir runs from res.final_state() back to
/// res.initial_state()):
///   exp(F_a(initial_W) - F_a(final_W)) = (sum_i y_i k_i^(a-1))^(1/(1-a)) / Z_S
/// over the curve segments (y_i, k_i) of sys, checked at each alpha to 1e-9
/// relative. The left side uses the unsigned log-moments over each state's
/// support, which stay finite for a < 0 where renyi() itself is +inf.
bool jarzynski_ratio_check(const Reservoir& res, const ThermoState& sys,
                           const std::vector<double>& alphas);

}  // namespace thermores
