#include "thermores/gibbsoracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <type_traits>

#include "thermores/errors.hpp"

namespace thermores {
namespace {

constexpr double kPivotEps = 1e-12;

// Phase-I simplex on A x = b, x >= 0, b >= 0, one artificial per row.
// Returns the artificial sum at optimum and the primal values of the
// structural variables.
struct PhaseOne {
  double objective;
  std::vector<double> x;
};

PhaseOne phase_one(const std::vector<std::vector<double>>& a, const std::vector<double>& b) {
  const std::size_t m = a.size();
  const std::size_t nv = a.empty() ? 0 : a.front().size();
  const std::size_t cols = nv + m;
  // tab[r] = [A | I | b]; last row holds reduced costs with -objective in rhs.
  std::vector<std::vector<double>> tab(m + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < nv; ++j) tab[r][j] = a[r][j];
    tab[r][nv + r] = 1.0;
    tab[r][cols] = b[r];
    basis[r] = nv + r;
  }
  auto& cost = tab[m];
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < nv || j == cols) cost[j] -= tab[r][j];
    }
  }

  for (std::size_t iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= kPivotEps) continue;
      const double ratio = tab[r][cols] / tab[r][enter];
      if (ratio < best - kPivotEps ||
          (ratio <= best + kPivotEps && leave < m && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in Phase I

    const double piv = tab[leave][enter];
    for (double& v : tab[leave]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = tab[r][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  PhaseOne out{-cost[cols], std::vector<double>(nv, 0.0)};
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < nv) out.x[basis[r]] = std::max(0.0, tab[r][cols]);
  }
  return out;
}

template <class T, class Coeff>
BasicGibbsMap<T> random_mixture(const std::vector<T>& tau, std::mt19937_64& rng, Coeff coeff,
                                double identity_weight) {
  const std::size_t n = tau.size();
  std::vector<BasicGibbsMap<T>> parts;
  parts.push_back(BasicGibbsMap<T>::identity(n));

  BasicGibbsMap<T> thermal{n, std::vector<T>(n * n, T(0))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) thermal.at(i, j) = tau[i];
  }
  parts.push_back(std::move(thermal));

  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t exchanges = n > 1 ? 1 + pick(rng) : 0;
  for (std::size_t k = 0; k < exchanges; ++k) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (i + 1) % n;
    if (tau[i] < tau[j]) std::swap(i, j);
    BasicGibbsMap<T> ex = BasicGibbsMap<T>::identity(n);
    const T ratio = tau[j] / tau[i];
    ex.at(i, i) = T(1) - ratio;
    ex.at(j, i) = ratio;
    ex.at(i, j) = T(1);
    ex.at(j, j) = T(0);
    parts.push_back(std::move(ex));
  }

  std::vector<T> w;
  T total(0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    w.push_back(coeff(rng));
    total += w.back();
  }
  if (total == T(0)) {
    w[0] = T(1);
    total = T(1);
  }
  for (auto& x : w) x = x / total;
  if constexpr (std::is_floating_point_v<T>) {
    if (identity_weight >= 0.0) {
      // Rescale the non-identity part to share 1 - identity_weight.
      const T rest = T(1) - w[0];
      for (std::size_t k = 1; k < w.size(); ++k) {
        w[k] = rest == T(0) ? T(0) : w[k] / rest * (1.0 - identity_weight);
      }
      w[0] = identity_weight;
    }
  }

  BasicGibbsMap<T> out{n, std::vector<T>(n * n, T(0))};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t e = 0; e < n * n; ++e) out.m[e] += w[k] * parts[k].m[e];
  }
  return out;
}

}  // namespace

std::vector<double> gibbs_vector(const ThermoState& s) {
  const Rat z = s.partition_function();
  std::vector<double> tau;
  tau.reserve(s.dimension());
  for (const auto& g : s.weights()) tau.push_back((g / z).to_double());
  return tau;
}

std::vector<Rat> exact_gibbs_vector(const ThermoState& s) { return gibbs_of(s).probs(); }

LpResult lp_feasible(const Transition& t, std::size_t dimension_cap) {
  const std::size_t n = t.dimension();
  if (n > dimension_cap) {
    throw Error(ErrorCode::DimensionCapExceeded,
                "dimension " + std::to_string(n) + " exceeds the oracle cap " +
                    std::to_string(dimension_cap));
  }
  const std::vector<double> tau = gibbs_vector(t.initial());
  const std::vector<double> p = t.initial().probs_as_double();
  const std::vector<double> q = t.final().probs_as_double();

  // Variable G_ij has index i*n + j.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i * n + j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(1.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = tau[j];
    a.push_back(std::move(row));
    b.push_back(tau[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = p[j];
    a.push_back(std::move(row));
    b.push_back(q[i]);
  }

  const PhaseOne sol = phase_one(a, b);
  LpResult out;
  out.residual = sol.objective;
  out.feasible = sol.objective <= kLpTolerance;
  if (out.feasible) out.witness = GibbsMap{n, sol.x};
  return out;
}

bool is_gibbs_map(const GibbsMap& g, const std::vector<double>& tau, double tol) {
  const std::size_t n = g.n;
  if (tau.size() != n || g.m.size() != n * n) return false;
  for (double v : g.m) {
    if (v < -tol) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += g.at(i, j);
    if (std::fabs(s - 1.0) > tol) return false;
  }
  const auto gt = g.apply(tau);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(gt[i] - tau[i]) > tol) return false;
  }
  return true;
}

GibbsMap recovery_map(const GibbsMap& g, const std::vector<double>& tau) {
  const std::size_t n = g.n;
  if (tau.size() != n) throw Error(ErrorCode::DimensionMismatch, "tau does not match the map");
  GibbsMap r{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (tau[j] <= 0.0) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
      r.at(i, j) = g.at(j, i) * tau[i] / tau[j];
    }
  }
  return r;
}

GibbsMap random_gibbs_map(const std::vector<double>& tau, std::uint64_t seed,
                          double identity_weight) {
  if (tau.empty()) throw Error(ErrorCode::InvalidArgument, "tau is empty");
  std::mt19937_64 rng(seed);
  auto coeff = [](std::mt19937_64& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(g);
    return x < 0.25 ? 0.0 : x;
  };
  GibbsMap out = random_mixture(tau, rng, coeff, identity_weight);
  if (identity_weight < 0.0 && (rng() & 1U)) {
    out = random_mixture(tau, rng, coeff, -1.0).compose(out);
  }
  return out;
}

ExactGibbsMap random_exact_gibbs_map(const std::vector<Rat>& tau, std::uint64_t seed) {
  if (tau.empty()) throw Error(ErrorCode::InvalidArgument, "tau is empty");
  std::mt19937_64 rng(seed);
  auto coeff = [](std::mt19937_64& g) {
    std::uniform_int_distribution<int> u(0, 6);
    const int x = u(g);
    return Rat(x < 2 ? 0 : x);
  };
  ExactGibbsMap out = random_mixture(tau, rng, coeff, -1.0);
  if (rng() & 1U) out = random_mixture(tau, rng, coeff, -1.0).compose(out);
  return out;
}

}  // namespace thermores
