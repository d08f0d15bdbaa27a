#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/statespace.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores {

/// A 2d-level work reservoir. Levels 0..d-1 carry initWeights, levels
/// d..2d-1 carry finWeights; the reservoir starts in (r, 0) and ends in (0, r).
class Reservoir {
 public:
  /// Throws DimensionMismatch (empty or unequal lengths), NegativeProbability
  /// (some r_i <= 0), ProbSumNotOne or NonPositiveWeight.
  static Reservoir make(std::vector<Rat> r, std::vector<Rat> init_weights,
                        std::vector<Rat> fin_weights);

  /// r = (1), both levels at weight g: the reservoir that does nothing.
  static Reservoir trivial(const Rat& g = Rat(1));

  const std::vector<Rat>& r() const { return r_; }
  const std::vector<Rat>& init_weights() const { return init_; }
  const std::vector<Rat>& fin_weights() const { return fin_; }
  std::size_t size() const { return r_.size(); }
  std::size_t dimension() const { return 2 * r_.size(); }

  std::vector<Rat> level_weights() const;
  ThermoState initial_state() const;
  ThermoState final_state() const;

  /// All weights times c: an energy shift, which changes nothing physical.
  Reservoir scaled(const Rat& c) const;

  /// Levels sorted by (r, init, fin) descending, weights divided by the
  /// first level's init weight. Two reservoirs related by relabeling and a
  /// common shift have equal canonical forms.
  Reservoir canonical() const;

  friend bool operator==(const Reservoir&, const Reservoir&) = default;

 private:
  Reservoir(std::vector<Rat> r, std::vector<Rat> init, std::vector<Rat> fin)
      : r_(std::move(r)), init_(std::move(init)), fin_(std::move(fin)) {}

  std::vector<Rat> r_;
  std::vector<Rat> init_;
  std::vector<Rat> fin_;
};

/// D_0(p || tau): deterministic work a two-level reservoir can extract.
double two_level_extraction_bound(const ThermoState& p);
/// D_inf(p || tau): deterministic work a two-level reservoir must spend to form p.
double two_level_formation_bound(const ThermoState& p);

/// p -> gibbs_of(p).
Transition extraction_transition(const ThermoState& p);

/// The 2m-level reservoir for p -> tau, with (r_i, a_i) the m curve
/// segments of p: initWeights_i = r_i / c, finWeights_i = r_i / (c Z a_i).
/// Throws Error(GibbsInput) when p is Gibbs, InvalidArgument when c <= 0.
Reservoir minimal_extraction_reservoir(const ThermoState& p, const Rat& c = Rat(1));

/// 2 * num_distinct_slopes(curve_of(p)).
std::size_t dimension_lower_bound(const ThermoState& p);

/// Efficient reservoir for an arbitrary shared-weight transition. The
/// refinement r comes from merging the cumulative distributions of both
/// states, each taken over its own support in its own beta-order. Level
/// weights are fixed up to one constant, chosen so that initWeights_0 =
/// anchor. Identity transitions get Reservoir::trivial(anchor).
Reservoir general_efficient_reservoir(const Transition& t, const Rat& anchor = Rat(1));

/// The 2n^2-level construction for a trivial Hamiltonian: r_ij = p_i p'_j,
/// initWeights_ij = p_i, finWeights_ij = p'_j (index i*n + j).
/// Throws NontrivialHamiltonian or ZeroProbability.
Reservoir alt_product_reservoir(const Transition& t);

/// Exact zero-dissipation test: do the curves of initial (x) p_W and
/// final (x) p'_W coincide? Reservoirs never certify themselves.
bool verify_efficient(const Transition& t, const Reservoir& res);

/// sum_i r_i ln(initWeights_i / finWeights_i), in nats (k_B T = 1).
double average_work(const Reservoir& res);

/// Is (candidate_init, candidate_fin) = (b (x) x1, b (x) y1) for one common
/// b, where (x1, y1) is the minimal formation pair of sys? Throws GibbsInput.
bool characterize_formation_family(const ThermoState& sys, const Curve& candidate_init,
                                   const Curve& candidate_fin);

/// The minimal formation pair (x1, y1): curves of the minimal extraction
/// reservoir's final and initial states.
std::pair<Curve, Curve> minimal_formation_pair(const ThermoState& sys);

}  // namespace thermores
