#include "thermores/divergence.hpp"

#include <algorithm>
#include <cmath>

#include "thermores/errors.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores {
namespace {

double log_sum_exp(const std::vector<double>& terms) {
  if (terms.empty()) return -kInfinity;
  const double m = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

bool close_rel(double a, double b, double rel) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// ln sum_{p > 0} p^a q^(1-a); q is taken to be positive wherever p is.
double support_log_moment(double alpha, const ThermoState& p, const ThermoState& q) {
  std::vector<double> terms;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p.probs()[i].is_zero()) continue;
    terms.push_back(alpha * p.probs()[i].log() + (1.0 - alpha) * q.probs()[i].log());
  }
  return log_sum_exp(terms);
}

}  // namespace

DivergenceValue renyi_probs(double alpha, const std::vector<Rat>& p, const std::vector<Rat>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divergence arguments differ in dimension");
  }
  if (std::isnan(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha is NaN");
  const std::size_t n = p.size();

  if (alpha == 0.0) {
    Rat mass;
    for (std::size_t i = 0; i < n; ++i) {
      if (!p[i].is_zero()) mass += q[i];
    }
    return {mass.is_zero() ? kInfinity : -mass.log(), false};
  }
  if (std::isinf(alpha) && alpha > 0) {
    double best = -kInfinity;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i].is_zero()) continue;
      if (q[i].is_zero()) return {kInfinity, false};
      best = std::max(best, p[i].log() - q[i].log());
    }
    return {best, false};
  }
  if (alpha == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i].is_zero()) continue;
      if (q[i].is_zero()) return {kInfinity, false};
      s += p[i].to_double() * (p[i].log() - q[i].log());
    }
    return {s, false};
  }
  if (std::isinf(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha = -inf is not supported");

  std::vector<double> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool pz = p[i].is_zero();
    const bool qz = q[i].is_zero();
    if (pz && qz) continue;
    if (alpha < 0) {
      if (pz) return {kInfinity, true};
      if (qz) continue;  // q^(1-alpha) = 0
    } else if (alpha < 1) {
      if (pz || qz) continue;
    } else {
      if (pz) continue;
      if (qz) return {kInfinity, false};
    }
    terms.push_back(alpha * p[i].log() + (1.0 - alpha) * q[i].log());
  }
  const double lse = log_sum_exp(terms);
  if (std::isinf(lse) && lse < 0) return {kInfinity, false};  // disjoint supports, 0 < alpha < 1
  const double sign = alpha < 0 ? -1.0 : 1.0;
  return {sign * lse / (alpha - 1.0), false};
}

DivergenceValue renyi_flagged(double alpha, const ThermoState& p, const ThermoState& q) {
  return renyi_probs(alpha, p.probs(), q.probs());
}

double renyi(double alpha, const ThermoState& p, const ThermoState& q) {
  return renyi_flagged(alpha, p, q).value;
}

Rat d0_argument(const ThermoState& p, const ThermoState& q) {
  if (p.dimension() != q.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "divergence arguments differ in dimension");
  }
  Rat mass;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (!p.probs()[i].is_zero()) mass += q.probs()[i];
  }
  return mass;
}

std::optional<Rat> dinf_argument(const ThermoState& p, const ThermoState& q) {
  if (p.dimension() != q.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "divergence arguments differ in dimension");
  }
  std::optional<Rat> best;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const Rat& pi = p.probs()[i];
    if (pi.is_zero()) continue;
    if (q.probs()[i].is_zero()) return std::nullopt;
    Rat ratio = pi / q.probs()[i];
    if (!best || ratio > *best) best = std::move(ratio);
  }
  return best;
}

double entropy_production(const Transition& t) {
  const ThermoState tau = gibbs_of(t.initial());
  return renyi(1.0, t.initial(), tau) - renyi(1.0, t.final(), tau);
}

double alpha_free_energy(double alpha, const ThermoState& p) {
  return -p.partition_function().log() + renyi(alpha, p, gibbs_of(p));
}

AlphaProfile alpha_profile(const ThermoState& p, const ThermoState& q,
                           const std::vector<double>& alphas) {
  AlphaProfile out;
  out.alphas = alphas;
  out.values.reserve(alphas.size());
  for (double a : alphas) out.values.push_back(renyi(a, p, q));
  return out;
}

std::vector<double> default_alpha_grid() {
  return {-2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 2.0, 4.0, kInfinity};
}

std::vector<double> nonnegative_alpha_grid() {
  std::vector<double> g = default_alpha_grid();
  std::erase_if(g, [](double a) { return a < 0; });
  return g;
}

bool jarzynski_ratio_check(const Reservoir& res, const ThermoState& sys,
                           const std::vector<double>& alphas) {
  const ThermoState wi = res.initial_state();
  const ThermoState wf = res.final_state();
  const ThermoState tau = gibbs_of(wi);
  const Curve curve = curve_of(sys);
  const double log_z = sys.partition_function().log();

  for (double a : alphas) {
    // Finite alpha goes through the support log-moments directly: the
    // reservoir states vanish on half their levels, which sends every
    // alpha < 0 divergence to +inf on both sides.
    const double lhs = (a == 1.0 || std::isinf(a))
                           ? renyi(a, wi, tau) - renyi(a, wf, tau)
                           : (support_log_moment(a, wi, tau) - support_log_moment(a, wf, tau)) / (a - 1.0);
    if (std::isnan(lhs)) return false;

    double rhs = 0.0;
    if (a == 1.0) {
      double s = 0.0;
      for (const auto& seg : curve.segments()) s += seg.height.to_double() * seg.slope.log();
      rhs = -s;
    } else if (std::isinf(a)) {
      rhs = -curve.segments().front().slope.log();
    } else {
      std::vector<double> terms;
      for (const auto& seg : curve.segments()) {
        terms.push_back(seg.height.log() + (a - 1.0) * seg.slope.log());
      }
      rhs = log_sum_exp(terms) / (1.0 - a);
    }
    rhs -= log_z;
    if (!close_rel(std::exp(lhs), std::exp(rhs), 1e-9)) return false;
  }
  return true;
}

}  // namespace thermores
