// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "thermores/catalysis.hpp"
#include "thermores/divergence.hpp"
#include "thermores/engine.hpp"
#include "thermores/gibbsoracle.hpp"
#include "thermores/reproduce.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/sampling.hpp"
#include "thermores/thermocurve.hpp"

using namespace thermores;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++g_failures;
  std::printf("%s C%d %s: %s [%.3fs%s]\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              in_time ? "" : " over budget");
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Weights over their sum, levels ordered by r descending.
std::pair<std::vector<Rat>, std::vector<Rat>> normalized_weights(const Reservoir& res) {
  std::vector<std::size_t> idx(res.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return res.r()[a] > res.r()[b]; });
  Rat si, sf;
  for (std::size_t i = 0; i < res.size(); ++i) {
    si += res.init_weights()[i];
    sf += res.fin_weights()[i];
  }
  std::vector<Rat> wi, wf;
  for (std::size_t i : idx) {
    wi.push_back(res.init_weights()[i] / si);
    wf.push_back(res.fin_weights()[i] / sf);
  }
  return {wi, wf};
}

Outcome c1() {
  const Reservoir res = general_efficient_reservoir(example1_transition());
  const auto [wi, wf] = normalized_weights(res);
  const bool ratios = wi == std::vector<Rat>{Rat(1, 4), Rat(2, 3), Rat(1, 12)} &&
                      wf == std::vector<Rat>{Rat(1, 3), Rat(4, 9), Rat(2, 9)};
  const double w = average_work(res);
  const bool ok = ratios && verify_efficient(example1_transition(), res) && std::fabs(w + 0.17216) <= 1e-4;
  return {ok, std::string("ratios ") + (ratios ? "exact" : "WRONG") + fmt(", <W> = %.7f", w)};
}

Outcome c2() {
  const Transition t = table1_transition();
  bool exact = true;
  for (const Rat& a : {Rat(1), Rat(1, 7), Rat(5, 2)}) exact = exact && verify_efficient(t, table1_reservoir(a));
  const double expected = std::log(1.0 / 3.0) / 3.0 + 2.0 * std::log(2.0 / 3.0) / 3.0;
  const double err = std::fabs(average_work(table1_reservoir()) - expected);
  return {exact && err <= 1e-12, std::string("verify ") + (exact ? "exact" : "FAILED") + fmt(", |dW| = %.2e", err)};
}

Outcome c3() {
  const Transition t = example2_transition();
  const Reservoir res = general_efficient_reservoir(t);
  const double z_free = average_work(res) - std::log(2.0 / 3.0);
  const bool ok = verify_efficient(t, res) && std::fabs(z_free - 0.0022585) <= 1e-6;
  return {ok, fmt("Z-independent work = %.7f", z_free)};
}

Outcome c4() {
  const ThermoState bit = make_state({1, 0}, {1, 1});
  const double d0 = two_level_extraction_bound(bit);
  const double dinf = two_level_formation_bound(bit);
  const bool args = d0_argument(bit, gibbs_of(bit)) == Rat(1, 2) && *dinf_argument(bit, gibbs_of(bit)) == Rat(2);
  const bool ok = args && d0 == std::log(2.0) && dinf == std::log(2.0);
  return {ok, fmt("D0 = %.17g, Dinf = %.17g", d0, dinf)};
}

Outcome c5() {
  Sampler s(20240605);
  const int count = 600;
  int agree = 0, feasible = 0;
  for (int k = 0; k < count; ++k) {
    const Transition t = s.transition(s.uniform_index(2, 5), k % 2 == 0, s.coin(0.2));
    const bool curve = majorizes(curve_of(t.initial()), curve_of(t.final()));
    feasible += curve ? 1 : 0;
    if (lp_feasible(t).feasible == curve) ++agree;
  }
  return {agree == count, std::to_string(agree) + "/" + std::to_string(count) + " agree (" +
                              std::to_string(feasible) + " feasible)"};
}

Outcome c6() {
  Sampler s(77);
  int minimal_ok = 0, general_ok = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    ThermoState p = s.state(s.uniform_index(2, 4), s.coin(0.3));
    while (is_gibbs(p)) p = s.state(s.uniform_index(2, 4), s.coin(0.3));
    const Transition ext = extraction_transition(p);
    const Reservoir m = minimal_extraction_reservoir(p);
    if (verify_efficient(ext, m)) ++minimal_ok;
    worst = std::max(worst, std::fabs(average_work(m) - entropy_production(ext)));

    const Transition t = s.transition(s.uniform_index(1, 4), s.coin(), s.coin(0.3));
    const Reservoir g = general_efficient_reservoir(t);
    if (verify_efficient(t, g)) ++general_ok;
    worst = std::max(worst, std::fabs(average_work(g) - entropy_production(t)));
  }
  const bool ok = minimal_ok == 200 && general_ok == 200 && worst <= 1e-10;
  return {ok, std::to_string(minimal_ok) + " minimal, " + std::to_string(general_ok) + " general" +
                  fmt(", max |<W> - Sigma| = %.2e", worst)};
}

Outcome c7() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_entropy = 0.0, worst_energy = 0.0;
  bool eta_exact = true;
  int certified = 0;
  for (int k = 0; k < 50; ++k) {
    const double tc = 0.1 + 4.9 * u(rng);
    const EngineSpec spec{0.05 + 5.0 * u(rng), tc * (1.0 + 4.0 * u(rng)), tc};
    const EngineReport r = run_carnot(spec);
    eta_exact = eta_exact && r.eta == 1.0 - spec.t_cold / spec.t_hot;
    worst_entropy = std::max(worst_entropy, std::fabs(spec.beta_cold() * r.q_cold + spec.beta_hot() * r.q_hot));
    worst_energy = std::max(worst_energy, std::fabs(r.work + r.q_hot + r.q_cold));
    certified += (r.steps[0].verified && r.steps[1].verified) ? 1 : 0;
  }
  const bool ok = eta_exact && worst_entropy <= 1e-10 && worst_energy <= 1e-12 && certified == 50;
  return {ok, std::string("eta ") + (eta_exact ? "exact" : "INEXACT") +
                  fmt(", entropy balance %.1e, energy balance %.1e", worst_entropy, worst_energy) + ", " +
                  std::to_string(certified) + "/50 cycles certified"};
}

bool same(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a));
}

Outcome c8() {
  Sampler s(8);
  const auto grid = default_alpha_grid();
  int agree = 0;
  for (int k = 0; k < 100; ++k) {
    const Transition t = s.transition(s.uniform_index(1, 3), s.coin(), s.coin(0.3));
    const Reservoir r = general_efficient_reservoir(t);
    const ThermoState a = tensor(t.initial(), r.initial_state());
    const ThermoState b = tensor(t.final(), r.final_state());
    if (!coincide(curve_of(a), curve_of(b))) continue;
    const ThermoState tau = gibbs_of(a);
    bool all = true;
    for (double alpha : grid) all = all && same(renyi(alpha, a, tau), renyi(alpha, b, tau));
    agree += all ? 1 : 0;
  }
  int pairs = 0, separated = 0;
  while (pairs < 100) {
    const auto w = s.weights(s.uniform_index(2, 4));
    const ThermoState a = s.state_over(w, s.coin(0.3));
    const ThermoState b = s.state_over(w, s.coin(0.3));
    if (coincide(curve_of(a), curve_of(b))) continue;
    ++pairs;
    const ThermoState tau = gibbs_of(a);
    for (double alpha : grid) {
      if (!same(renyi(alpha, a, tau), renyi(alpha, b, tau))) {
        ++separated;
        break;
      }
    }
  }
  return {agree == 100 && separated >= 95, std::to_string(agree) + "/100 coincident agree, " +
                                               std::to_string(separated) + "/100 separated"};
}

Outcome c9() {
  Sampler s(9);
  auto rc = [&] { return curve_of(s.state(s.uniform_index(1, 3), s.coin(0.25))); };
  int laws = 0, trips = 0;
  for (int k = 0; k < 300; ++k) {
    const Curve a = rc(), b = rc(), c = rc();
    laws += (product(product(a, b), c) == product(a, product(b, c)) && product(a, b) == product(b, a) &&
             product(a, Curve::identity()) == a)
                ? 1
                : 0;
  }
  for (int k = 0; k < 300; ++k) {
    const Curve a = rc(), b = rc();
    const auto q = divide(product(a, b), a);
    trips += (q && *q == b) ? 1 : 0;
  }
  return {laws == 300 && trips == 300,
          std::to_string(laws) + "/300 triples, " + std::to_string(trips) + "/300 round trips"};
}

Outcome c10() {
  const ThermoState p = make_state({Rat(1, 3), Rat(2, 3)}, {1, 1});
  const Transition t = extraction_transition(p);
  int points = 0, efficient = 0;
  // Only the ratio of the two weights matters; sweep it over a fine grid.
  for (long num = 1; num <= 110; ++num) {
    for (long den = 1; den <= 100; ++den) {
      ++points;
      if (verify_efficient(t, Reservoir::make({1}, {Rat(den, 10)}, {Rat(num, 10)}))) ++efficient;
    }
  }
  const bool ok = num_distinct_slopes(curve_of(p)) == 2 && points >= 10000 && efficient == 0;
  return {ok, std::to_string(points) + " grid points, " + std::to_string(efficient) + " efficient"};
}

}  // namespace

int main() {
  criterion(1, "general reservoir weight ratios", 1.0, c1);
  criterion(2, "erasure reservoir", 1.0, c2);
  criterion(3, "clock-lifted Hamiltonian change", 1.0, c3);
  criterion(4, "two-level bounds", 0.0, c4);
  criterion(5, "LP oracle equivalence", 30.0, c5);
  criterion(6, "zero-dissipation suite", 30.0, c6);
  criterion(7, "engine identities", 5.0, c7);
  criterion(8, "coincidence and alpha equality", 0.0, c8);
  criterion(9, "monoid laws", 0.0, c9);
  criterion(10, "two-level reservoirs at m = 2", 60.0, c10);
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
