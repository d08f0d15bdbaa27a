#include "thermores/catalysis.hpp"

#include <cmath>
#include <string>

#include "thermores/divergence.hpp"
#include "thermores/errors.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores {
namespace {

constexpr double kSlack = 1e-12;

bool same_value(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= kSlack * std::max(1.0, std::fabs(a));
}

}  // namespace

CtoVerdict cto_feasible(const Transition& t, const std::vector<double>& alpha_grid) {
  const ThermoState tau = gibbs_of(t.initial());
  CtoVerdict v;
  for (double a : alpha_grid) {
    const auto di = renyi_flagged(a, t.initial(), tau);
    const auto df = renyi_flagged(a, t.final(), tau);
    v.negative_alpha_zero = v.negative_alpha_zero || di.negative_alpha_zero || df.negative_alpha_zero;
    v.witnessed_alphas.push_back({a, di.value, df.value});
    bool violated = false;
    if (std::isinf(df.value)) {
      violated = !std::isinf(di.value);
    } else if (!std::isinf(di.value)) {
      violated = df.value - di.value > kSlack;
    }
    if (violated) v.feasible = false;
  }
  return v;
}

ProductFactors factor_product(const ThermoState& joint, std::size_t catalyst_dim) {
  if (catalyst_dim == 0 || joint.dimension() % catalyst_dim != 0) {
    throw Error(ErrorCode::DimensionMismatch, "joint dimension " + std::to_string(joint.dimension()) +
                                                  " is not a multiple of " +
                                                  std::to_string(catalyst_dim));
  }
  const std::size_t c = catalyst_dim;
  const std::size_t n = joint.dimension() / c;
  const auto& p = joint.probs();
  const auto& g = joint.weights();

  std::vector<Rat> ps(n), pc(c), gs(n), gc(c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      ps[i] += p[i * c + j];
      pc[j] += p[i * c + j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) gs[i] = g[i * c];
  for (std::size_t j = 0; j < c; ++j) gc[j] = g[j] / g[0];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (p[i * c + j] != ps[i] * pc[j]) {
        throw Error(ErrorCode::NotProductState, "joint probabilities do not factor");
      }
      if (g[i * c + j] != gs[i] * gc[j]) {
        throw Error(ErrorCode::NotProductState, "joint weights do not factor");
      }
    }
  }
  return {ThermoState::make(std::move(ps), std::move(gs)),
          ThermoState::make(std::move(pc), std::move(gc))};
}

bool strip_catalyst(const ThermoState& joint_init, const ThermoState& joint_fin,
                    std::size_t catalyst_dim) {
  if (joint_init.weights() != joint_fin.weights()) {
    throw Error(ErrorCode::WeightMismatch, "joint states must share their weights");
  }
  const ProductFactors fi = factor_product(joint_init, catalyst_dim);
  const ProductFactors ff = factor_product(joint_fin, catalyst_dim);
  if (fi.catalyst != ff.catalyst) {
    throw Error(ErrorCode::CatalystMarginalMismatch, "catalyst is not returned unchanged");
  }
  const Curve ci = curve_of(joint_init);
  const Curve cf = curve_of(joint_fin);
  if (!coincide(ci, cf)) {
    throw Error(ErrorCode::JointCurvesDiffer, "joint transition is dissipative");
  }
  // Cancel the catalyst curve from both joints; cancellation makes the
  // quotients unique, so equal joints leave equal system curves.
  const Curve cat = curve_of(fi.catalyst);
  const auto si = divide(ci, cat);
  const auto sf = divide(cf, cat);
  return si && sf && coincide(*si, *sf) && coincide(*si, curve_of(fi.system)) &&
         coincide(*sf, curve_of(ff.system));
}

std::pair<bool, bool> coincide_iff_alpha_equal(const ThermoState& a, const ThermoState& b,
                                               const std::vector<double>& alpha_grid) {
  if (a.weights() != b.weights()) {
    throw Error(ErrorCode::WeightMismatch, "states must share their weights");
  }
  const bool curves = coincide(curve_of(a), curve_of(b));
  const ThermoState tau = gibbs_of(a);
  bool values = true;
  for (double alpha : alpha_grid) {
    if (!same_value(renyi(alpha, a, tau), renyi(alpha, b, tau))) {
      values = false;
      break;
    }
  }
  return {curves, values};
}

}  // namespace thermores
