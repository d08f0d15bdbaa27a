#include <doctest.h>

#include <cmath>

#include "thermores/errors.hpp"
#include "thermores/engine.hpp"

using namespace thermores;

namespace {

double kl2(double p, double q) {
  return (1 - p) * std::log((1 - p) / (1 - q)) + p * std::log(p / q);
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("default engine") {
    const EngineReport r = run_carnot(EngineSpec{});
    CHECK(r.q_hot == doctest::Approx(-0.161288).epsilon(1e-5));
    CHECK(r.eta == 0.5);
    CHECK(r.p_cold == doctest::Approx(1.0 / (1.0 + std::exp(1.0))));
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[0].verified);
    CHECK(r.steps[1].verified);
    CHECK(r.steps[0].approx_state.dimension() == 2);
  }

  TEST_CASE("thermodynamic invariants") {
    for (double eps : {0.3, 1.0, 2.5}) {
      for (double th : {1.0, 1.5, 4.0}) {
        for (double tc : {0.25, 0.5, 1.0}) {
          const EngineSpec spec{eps, th, tc};
          const EngineReport r = run_carnot(spec);
          const double tau_h = r.p_hot, tau_c = r.p_cold;
          const double oracle = th * kl2(tau_c, tau_h) + tc * kl2(tau_h, tau_c);
          CHECK(r.work == doctest::Approx(oracle).epsilon(1e-10));
          CHECK(r.work == doctest::Approx(r.work_hot_step + r.work_cold_step).epsilon(1e-10));
          CHECK(r.q_hot / th + r.q_cold / tc == doctest::Approx(0.0).epsilon(1e-12));
          CHECK(r.work >= -1e-15);
          CHECK(r.eta == doctest::Approx(1.0 - tc / th));
          CHECK(r.steps[0].verified);
          CHECK(r.steps[1].verified);
          CHECK(r.steps[0].work == doctest::Approx(r.work_hot_step).epsilon(1e-4));
          CHECK(r.steps[1].work == doctest::Approx(r.work_cold_step).epsilon(1e-4));
        }
      }
    }
  }

  TEST_CASE("steps stay exact when the Boltzmann factor is tiny") {
    const EngineReport r = run_carnot({5.0, 5.0, 0.1});
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[1].verified);
    CHECK(r.steps[1].approx_state.weights()[1] > Rat(0));
    CHECK(r.steps[1].approximation_gap < 1e-12);
    CHECK(r.steps[1].work == doctest::Approx(r.work_cold_step).epsilon(1e-6));
  }

  TEST_CASE("equal temperatures do nothing") {
    const EngineReport r = run_carnot({1.0, 1.0, 1.0});
    CHECK(r.work == doctest::Approx(0.0));
    CHECK(r.q_hot == doctest::Approx(0.0));
    CHECK(r.eta == 0.0);
  }

  TEST_CASE("invalid specs") {
    for (const EngineSpec bad : {EngineSpec{1, 1, 2}, EngineSpec{1, 1, 0}, EngineSpec{1, 2, -1}}) {
      try {
        (void)run_carnot(bad);
        FAIL("expected InvalidTemperatures");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidTemperatures);
      }
    }
    CHECK_THROWS_AS(run_carnot({0.0, 2, 1}), Error);
    CHECK_THROWS_AS(reservoir_level_table({}, 0.0, 1.0), Error);
  }

  TEST_CASE("level table") {
    const EngineSpec spec{};
    const LevelTable t = reservoir_level_table(spec);
    double total = 0;
    for (const auto& row : t) total += row.probability;
    CHECK(total == doctest::Approx(1.0));
    const double pc = 1.0 / (1.0 + std::exp(1.0));
    const double ph = 1.0 / (1.0 + std::exp(0.5));
    CHECK(t[0].energy[0] == doctest::Approx(-2 * std::log(pc) - std::log(ph)));
    CHECK(t[3].energy[2] == doctest::Approx(-2 * std::log(1 - ph) - std::log(1 - pc)));
    CHECK(t[1].label == "pC*(1-pH)");
  }

  TEST_CASE("level table constants shift every energy uniformly") {
    const EngineSpec spec{1.3, 3.0, 0.7};
    const LevelTable base = reservoir_level_table(spec);
    const double c1 = 2.5, c2 = 0.4;
    const LevelTable shifted = reservoir_level_table(spec, c1, c2);
    const double shift = -spec.t_hot * std::log(c1) - spec.t_cold * std::log(c2);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(shifted[k].probability == base[k].probability);
      for (std::size_t col = 0; col < 3; ++col) {
        CHECK(shifted[k].energy[col] - base[k].energy[col] == doctest::Approx(shift));
      }
    }
  }
}
