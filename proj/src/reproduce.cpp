#include "thermores/reproduce.hpp"

#include <cmath>

#include "thermores/catalysis.hpp"
#include "thermores/divergence.hpp"
#include "thermores/engine.hpp"
#include "thermores/errors.hpp"
#include "thermores/io.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores {
namespace {

ReproCheck near(std::string name, double expected, double actual, double tol) {
  return {std::move(name), expected, actual, tol, std::fabs(expected - actual) <= tol};
}

ReproCheck exact(std::string name, bool holds) {
  return {std::move(name), 1.0, holds ? 1.0 : 0.0, 0.0, holds};
}

std::vector<Rat> rats(std::initializer_list<Rat> v) { return v; }

ReproReport run_table1() {
  ReproReport rep{"table1", {}, {}};
  const Transition t = table1_transition();
  const Reservoir res = table1_reservoir();
  const Curve sys_curve = curve_of(t.initial());
  const std::vector<Point> expected_pts{{0, 0}, {1, Rat(2, 3)}, {2, 1}};
  const Curve ji = curve_of(tensor(t.initial(), res.initial_state()));
  const Curve jf = curve_of(tensor(t.final(), res.final_state()));
  const std::vector<Point> joint_pts{{0, 0}, {3, Rat(2, 3)}, {6, 1}, {18, 1}};

  rep.checks.push_back(exact("system_initial_breakpoints", sys_curve.breakpoints() == expected_pts));
  rep.checks.push_back(exact("joint_initial_elbows", ji.breakpoints() == joint_pts));
  rep.checks.push_back(exact("joint_final_elbows", jf.breakpoints() == joint_pts));
  rep.checks.push_back(exact("verify_efficient", verify_efficient(t, res)));
  const auto [curves, alphas] = coincide_iff_alpha_equal(tensor(t.initial(), res.initial_state()),
                                                         tensor(t.final(), res.final_state()),
                                                         default_alpha_grid());
  rep.checks.push_back(exact("joint_alpha_equal", curves && alphas));
  const double w_expected = std::log(1.0 / 3.0) / 3.0 + 2.0 * std::log(2.0 / 3.0) / 3.0;
  rep.checks.push_back(near("average_work", w_expected, average_work(res), 1e-12));
  rep.checks.push_back(exact("dimension_lower_bound", dimension_lower_bound(t.initial()) == 4));

  rep.details = {{"transition", io::transition_to_json(t)},
                 {"reservoir", io::reservoir_to_json(res)},
                 {"system_initial_curve", io::curve_to_json(sys_curve)},
                 {"joint_initial_curve", io::curve_to_json(ji)},
                 {"joint_final_curve", io::curve_to_json(jf)},
                 {"average_work", average_work(res)}};
  return rep;
}

ReproReport run_example1() {
  ReproReport rep{"example1", {}, {}};
  const Transition t = example1_transition();
  const Reservoir res = general_efficient_reservoir(t);
  rep.checks.push_back(
      exact("weight_ratios", res.canonical() == example1_expected_reservoir().canonical()));
  rep.checks.push_back(exact("verify_efficient", verify_efficient(t, res)));
  rep.checks.push_back(near("average_work", -0.17216, average_work(res), 1e-4));
  rep.checks.push_back(near("free_energy_recovery", entropy_production(t), average_work(res), 1e-10));
  rep.details = {{"reservoir", io::reservoir_to_json(res)},
                 {"canonical", io::reservoir_to_json(res.canonical())},
                 {"average_work", average_work(res)}};
  return rep;
}

ReproReport run_example2() {
  ReproReport rep{"example2", {}, {}};
  const Transition t = example2_transition();
  const Reservoir res = general_efficient_reservoir(t);
  const double z = 3.0;
  const double z_prime = 2.0;
  const double z_free = average_work(res) - std::log(z_prime / z);
  rep.checks.push_back(
      exact("weight_ratios", res.canonical() == example2_expected_reservoir().canonical()));
  rep.checks.push_back(exact("verify_efficient", verify_efficient(t, res)));
  rep.checks.push_back(near("z_independent_work", 0.0022585, z_free, 1e-6));
  rep.details = {{"transition", io::transition_to_json(t)},
                 {"reservoir", io::reservoir_to_json(res)},
                 {"average_work", average_work(res)},
                 {"z_independent_work", z_free}};
  return rep;
}

ReproReport run_engine() {
  ReproReport rep{"engine", {}, {}};
  const EngineSpec spec{1.0, 2.0, 1.0};
  const EngineReport r = run_carnot(spec);
  rep.checks.push_back(exact("eta_carnot", r.eta == 1.0 - spec.t_cold / spec.t_hot));
  rep.checks.push_back(near("eta_value", 0.5, r.eta, 0.0));
  rep.checks.push_back(near("q_hot", -0.1612, r.q_hot, 1e-4));
  rep.checks.push_back(near("work", 0.0806, r.work, 1e-4));
  rep.checks.push_back(near("entropy_balance", 0.0, spec.beta_cold() * r.q_cold + spec.beta_hot() * r.q_hot, 1e-10));
  rep.checks.push_back(near("energy_conservation", 0.0, r.work + r.q_hot + r.q_cold, 1e-12));
  rep.checks.push_back(near("work_from_divergences", r.work, r.work_hot_step + r.work_cold_step, 1e-12));
  for (const auto& s : r.steps) rep.checks.push_back(exact(s.name + "_verified", s.verified));
  rep.details = io::engine_to_json(r);
  return rep;
}

}  // namespace

bool ReproReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string ReproReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!out.empty()) out += ", ";
    out += c.quantity;
  }
  return out;
}

Transition table1_transition() {
  return Transition::make(ThermoState::make(rats({Rat(1, 3), Rat(2, 3)}), rats({1, 1})),
                          ThermoState::make(rats({1, 0}), rats({1, 1})));
}

Reservoir table1_reservoir(const Rat& a) {
  return Reservoir::make(rats({Rat(1, 3), Rat(2, 3)}), {a, 2 * a}, {3 * a, 3 * a});
}

Transition example1_transition() {
  return Transition::make(ThermoState::make(rats({Rat(1, 2), Rat(1, 2)}), rats({2, 1})),
                          ThermoState::make(rats({Rat(1, 3), Rat(2, 3)}), rats({2, 1})));
}

Reservoir example1_expected_reservoir(const Rat& a) {
  return Reservoir::make(rats({Rat(1, 2), Rat(1, 3), Rat(1, 6)}),
                         {a * Rat(1, 4), a * Rat(2, 3), a * Rat(1, 12)},
                         {a * Rat(1, 3), a * Rat(4, 9), a * Rat(2, 9)});
}

Transition example2_transition() {
  return clock_lift(ThermoState::make(rats({Rat(1, 2), Rat(1, 2)}), rats({1, 2})),
                    ThermoState::make(rats({Rat(2, 3), Rat(1, 3)}), rats({1, 1})));
}

Reservoir example2_expected_reservoir(const Rat& a) {
  const Rat zr(3, 2);  // Z_S / Z'_S
  return Reservoir::make(rats({Rat(1, 2), Rat(1, 3), Rat(1, 6)}),
                         {a * Rat(3, 8), a * Rat(1, 2), a * Rat(1, 8)},
                         {a * zr * Rat(1, 3), a * zr * Rat(4, 9), a * zr * Rat(2, 9)});
}

std::vector<std::string> reproduction_targets() { return {"table1", "example1", "example2", "engine"}; }

ReproReport reproduce(std::string_view which) {
  if (which == "table1") return run_table1();
  if (which == "example1") return run_example1();
  if (which == "example2") return run_example2();
  if (which == "engine") return run_engine();
  throw Error(ErrorCode::InvalidArgument, "unknown reproduction target \"" + std::string(which) + "\"");
}

}  // namespace thermores
