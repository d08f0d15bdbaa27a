#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "thermores/rational.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

/// Dense column-stochastic matrix, row-major: at(i, j) is the probability
/// of moving from level j to level i.
template <class T>
struct BasicGibbsMap {
  std::size_t n = 0;
  std::vector<T> m;

  static BasicGibbsMap identity(std::size_t n) {
    BasicGibbsMap g{n, std::vector<T>(n * n, T(0))};
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = T(1);
    return g;
  }

  T& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
  const T& at(std::size_t i, std::size_t j) const { return m[i * n + j]; }

  std::vector<T> apply(const std::vector<T>& p) const {
    std::vector<T> out(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i] += at(i, j) * p[j];
    }
    return out;
  }

  /// this * other: apply other first.
  BasicGibbsMap compose(const BasicGibbsMap& other) const {
    BasicGibbsMap out{n, std::vector<T>(n * n, T(0))};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
    return out;
  }
};

using GibbsMap = BasicGibbsMap<double>;
using ExactGibbsMap = BasicGibbsMap<Rat>;

struct LpResult {
  bool feasible = false;
  std::optional<GibbsMap> witness;
  /// Phase-I objective at termination (sum of artificial variables).
  double residual = 0.0;
};

inline constexpr std::size_t kDefaultDimensionCap = 8;
inline constexpr double kLpTolerance = 1e-9;

/// Is there a G >= 0 with unit column sums, G tau = tau and G p = p'?
/// Dense Phase-I simplex with Bland's rule. Throws DimensionCapExceeded.
LpResult lp_feasible(const Transition& t, std::size_t dimension_cap = kDefaultDimensionCap);

/// Non-negative entries, unit column sums and G tau = tau, all within tol.
bool is_gibbs_map(const GibbsMap& g, const std::vector<double>& tau, double tol = kLpTolerance);

/// R_ij = G_ji tau_i / tau_j (the Petz-style recovery map).
GibbsMap recovery_map(const GibbsMap& g, const std::vector<double>& tau);

std::vector<double> gibbs_vector(const ThermoState& s);
std::vector<Rat> exact_gibbs_vector(const ThermoState& s);

/// Random Gibbs-stochastic matrix: a convex mixture of the identity, full
/// thermalization (every column tau) and pairwise exchange maps, possibly
/// composed with a second such mixture. Deterministic per seed. A
/// non-negative identity_weight pins the identity's share of the mixture
/// (1 gives the identity).
GibbsMap random_gibbs_map(const std::vector<double>& tau, std::uint64_t seed,
                          double identity_weight = -1.0);
/// Exact variant over rational tau, with rational mixture weights.
ExactGibbsMap random_exact_gibbs_map(const std::vector<Rat>& tau, std::uint64_t seed);

}  // namespace thermores
