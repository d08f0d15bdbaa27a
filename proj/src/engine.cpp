#include "thermores/engine.hpp"

#include <algorithm>
#include <cmath>

#include "thermores/errors.hpp"

namespace thermores {
namespace {

double binary_entropy(double x) {
  auto term = [](double v) { return v > 0.0 ? -v * std::log(v) : 0.0; };
  return term(x) + term(1.0 - x);
}

// Relative entropy between two qubit distributions given by excited populations.
double qubit_kl(double p, double q) {
  auto term = [](double a, double b) { return a > 0.0 ? a * std::log(a / b) : 0.0; };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

// Small denominators keep the exact curves cheap, but a population or
// Boltzmann factor below 1/max_den would round to zero; those fall back to
// the double's exact binary value.
Rat approximate(double x, std::uint64_t max_den) {
  const Rat r = best_rational_approximation(x, max_den);
  if (!r.is_zero() && std::fabs(r.to_double() - x) <= 1e-6 * x) return r;
  return Rat(mpq_class(x));
}

StepCertificate certify_step(const std::string& name, double epsilon, double t_bath,
                             double excited, std::uint64_t max_den) {
  const double boltzmann = std::exp(-epsilon / t_bath);
  const Rat q = approximate(excited, max_den);
  const Rat g = approximate(boltzmann, max_den);
  const double gap = std::max(std::fabs(q.to_double() - excited), std::fabs(g.to_double() - boltzmann));

  ThermoState state = ThermoState::make({Rat(1) - q, q}, {Rat(1), g});
  if (is_gibbs(state)) {
    return {name, t_bath, state, Reservoir::trivial(), true, gap, 0.0};
  }
  Reservoir res = minimal_extraction_reservoir(state);
  const bool ok = verify_efficient(extraction_transition(state), res);
  const double w = t_bath * average_work(res);
  return {name, t_bath, std::move(state), std::move(res), ok, gap, w};
}

}  // namespace

void validate(const EngineSpec& spec) {
  if (!(spec.epsilon > 0.0) || !std::isfinite(spec.epsilon)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive and finite");
  }
  if (!(spec.t_cold > 0.0) || !std::isfinite(spec.t_hot) || !(spec.t_hot >= spec.t_cold)) {
    throw Error(ErrorCode::InvalidTemperatures, "need 0 < T_C <= T_H");
  }
}

std::array<double, 2> qubit_gibbs(double epsilon, double t) {
  const double b = std::exp(-epsilon / t);
  const double z = 1.0 + b;
  return {1.0 / z, b / z};
}

LevelTable reservoir_level_table(const EngineSpec& spec, double c1, double c2) {
  validate(spec);
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "c1, c2 must be positive");
  const double pc = qubit_gibbs(spec.epsilon, spec.t_cold)[1];
  const double ph = qubit_gibbs(spec.epsilon, spec.t_hot)[1];
  const double th = spec.t_hot;
  const double tc = spec.t_cold;

  struct Pick {
    const char* label;
    double x_cold;  // population tied to the hot-bath term in rho_W1
    double x_hot;   // its hot counterpart
    double y_hot;   // population tied to the cold-bath term in rho_W1
    double y_cold;  // its cold counterpart
  };
  const std::array<Pick, 4> picks{{
      {"pC*pH", pc, ph, ph, pc},
      {"pC*(1-pH)", pc, ph, 1.0 - ph, 1.0 - pc},
      {"(1-pC)*pH", 1.0 - pc, 1.0 - ph, ph, pc},
      {"(1-pC)*(1-pH)", 1.0 - pc, 1.0 - ph, 1.0 - ph, 1.0 - pc},
  }};

  LevelTable table;
  for (std::size_t k = 0; k < 4; ++k) {
    const Pick& s = picks[k];
    const double e1 = -th * std::log(c1 * s.x_cold) - tc * std::log(c2 * s.y_hot);
    const double e2 = -th * std::log(c1 * s.x_hot) - tc * std::log(c2 * s.y_hot);
    const double e3 = -th * std::log(c1 * s.x_hot) - tc * std::log(c2 * s.y_cold);
    table[k] = {s.label, s.x_cold * s.y_hot, {e1, e2, e3}};
  }
  return table;
}

EngineReport run_carnot(const EngineSpec& spec, std::uint64_t max_denominator) {
  validate(spec);
  EngineReport rep;
  rep.spec = spec;
  rep.p_cold = qubit_gibbs(spec.epsilon, spec.t_cold)[1];
  rep.p_hot = qubit_gibbs(spec.epsilon, spec.t_hot)[1];
  rep.s_cold = binary_entropy(rep.p_cold);
  rep.s_hot = binary_entropy(rep.p_hot);
  rep.q_hot = (rep.s_cold - rep.s_hot) / spec.beta_hot();
  rep.q_cold = (rep.s_hot - rep.s_cold) / spec.beta_cold();
  rep.work = -rep.q_hot - rep.q_cold;
  rep.eta = 1.0 - spec.t_cold / spec.t_hot;
  rep.work_hot_step = spec.t_hot * qubit_kl(rep.p_cold, rep.p_hot);
  rep.work_cold_step = spec.t_cold * qubit_kl(rep.p_hot, rep.p_cold);
  rep.levels = reservoir_level_table(spec);
  // Step 2: tau_C meets the hot bath. Step 4: tau_H meets the cold bath.
  rep.steps.push_back(certify_step("step2", spec.epsilon, spec.t_hot, rep.p_cold, max_denominator));
  rep.steps.push_back(certify_step("step4", spec.epsilon, spec.t_cold, rep.p_hot, max_denominator));
  return rep;
}

}  // namespace thermores
