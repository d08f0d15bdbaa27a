#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "support/property.hpp"
#include "thermores/divergence.hpp"
#include "thermores/errors.hpp"
#include "thermores/reproduce.hpp"
#include "thermores/reservoir.hpp"

using namespace thermores;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

ThermoState non_gibbs_state(Sampler& s, std::size_t lo, std::size_t hi) {
  for (;;) {
    ThermoState p = s.state(s.uniform_index(lo, hi), s.coin(0.3));
    if (!is_gibbs(p)) return p;
  }
}

}  // namespace

TEST_SUITE("reservoir") {
  TEST_CASE("make validates") {
    CHECK(code_of([] { Reservoir::make({}, {}, {}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { Reservoir::make({1}, {1, 1}, {1}); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([] { Reservoir::make({1, 0}, {1, 1}, {1, 1}); }) == ErrorCode::NegativeProbability);
    CHECK(code_of([] { Reservoir::make({Rat(1, 2)}, {1}, {1}); }) == ErrorCode::ProbSumNotOne);
    CHECK(code_of([] { Reservoir::make({1}, {0}, {1}); }) == ErrorCode::NonPositiveWeight);
    const Reservoir t = Reservoir::trivial(Rat(3));
    CHECK(t.dimension() == 2);
    CHECK(average_work(t) == 0.0);
  }

  TEST_CASE("states and level layout") {
    const Reservoir res = table1_reservoir();
    CHECK(res.level_weights() == std::vector<Rat>{1, 2, 3, 3});
    CHECK(res.initial_state().probs() == std::vector<Rat>{Rat(1, 3), Rat(2, 3), 0, 0});
    CHECK(res.final_state().probs() == std::vector<Rat>{0, 0, Rat(1, 3), Rat(2, 3)});
  }

  TEST_CASE("erasure of the biased bit") {
    const Transition t = table1_transition();
    const Reservoir res = table1_reservoir();
    CHECK(verify_efficient(t, res));
    CHECK(verify_efficient(t, table1_reservoir(Rat(5, 7))));
    const double expected = std::log(1.0 / 3.0) / 3.0 + 2.0 * std::log(2.0 / 3.0) / 3.0;
    CHECK(std::fabs(average_work(res) - expected) < 1e-12);
    CHECK(std::fabs(average_work(res) - entropy_production(t)) < 1e-12);
    const Curve joint = curve_of(tensor(t.initial(), res.initial_state()));
    CHECK(joint.breakpoints() ==
          std::vector<Point>{{0, 0}, {3, Rat(2, 3)}, {6, 1}, {18, 1}});
    // Four sloped levels, but they pair up into two equal slopes.
    CHECK(num_distinct_slopes(joint) == 2);
    CHECK(dimension_lower_bound(t.initial()) == 4);
  }

  TEST_CASE("minimal extraction reservoir examples") {
    const ThermoState sigma = make_state({Rat(1, 3), Rat(2, 3)}, {1, 1});
    const Reservoir m = minimal_extraction_reservoir(sigma);
    CHECK(m.r() == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
    CHECK(m.init_weights() == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
    CHECK(m.fin_weights() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    CHECK(m.dimension() == dimension_lower_bound(sigma));
    CHECK(code_of([&] { minimal_extraction_reservoir(gibbs_of(sigma)); }) == ErrorCode::GibbsInput);
    CHECK(code_of([&] { minimal_extraction_reservoir(sigma, Rat(0)); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("minimal reservoirs are efficient and tight") {
    prop::for_all("minimal", 200, 41, [](Sampler& s) {
      const ThermoState p = non_gibbs_state(s, 2, 5);
      const Rat c(static_cast<long>(s.uniform_index(1, 6)), static_cast<long>(s.uniform_index(1, 6)));
      const Reservoir m = minimal_extraction_reservoir(p, c);
      const Transition t = extraction_transition(p);
      const double d = renyi(1.0, p, gibbs_of(p));
      return verify_efficient(t, m) && m.dimension() == dimension_lower_bound(p) &&
             std::fabs(average_work(m) - d) < 1e-10 && m.canonical() == minimal_extraction_reservoir(p).canonical();
    });
  }

  TEST_CASE("general reservoir examples") {
    const Reservoir r1 = general_efficient_reservoir(example1_transition());
    CHECK(r1.canonical() == example1_expected_reservoir().canonical());
    CHECK(average_work(r1) == doctest::Approx(-0.17216).epsilon(1e-4));
    const Reservoir r2 = general_efficient_reservoir(example2_transition());
    CHECK(r2.canonical() == example2_expected_reservoir().canonical());
    CHECK(average_work(r2) - std::log(2.0 / 3.0) == doctest::Approx(0.0022585).epsilon(1e-4));
    const Transition id = make_transition(make_state({1, 0}, {1, 1}), make_state({1, 0}, {1, 1}));
    CHECK(general_efficient_reservoir(id, Rat(4)) == Reservoir::trivial(Rat(4)));
    CHECK(general_efficient_reservoir(example1_transition(), Rat(3)).init_weights().front() == Rat(3));
  }

  TEST_CASE("general reservoirs are efficient and recover the free energy") {
    prop::for_all("general", 200, 42, [](Sampler& s) {
      const Transition t = s.transition(s.uniform_index(1, 5), s.coin(), s.coin(0.3));
      const Reservoir r = general_efficient_reservoir(t);
      return verify_efficient(t, r) && std::fabs(average_work(r) - entropy_production(t)) < 1e-10;
    });
  }

  TEST_CASE("clock-lifted transitions with different weights") {
    prop::for_all("clock general", 100, 43, [](Sampler& s) {
      const Transition t = clock_lift(s.state(s.uniform_index(1, 4), s.coin(0.3)),
                                      s.state(s.uniform_index(1, 4), s.coin(0.3)));
      const Reservoir r = general_efficient_reservoir(t);
      return verify_efficient(t, r) && std::fabs(average_work(r) - entropy_production(t)) < 1e-10;
    });
  }

  TEST_CASE("energy shifts leave everything unchanged") {
    prop::for_all("translation", 200, 44, [](Sampler& s) {
      const Transition t = s.transition(s.uniform_index(1, 4), s.coin(), s.coin(0.3));
      const Reservoir r = general_efficient_reservoir(t);
      const Rat c(static_cast<long>(s.uniform_index(1, 9)), static_cast<long>(s.uniform_index(1, 9)));
      const Reservoir shifted = r.scaled(c);
      return verify_efficient(t, shifted) && std::fabs(average_work(shifted) - average_work(r)) < 1e-12 &&
             shifted.canonical() == r.canonical() &&
             general_efficient_reservoir(t, c) == shifted;
    });
  }

  TEST_CASE("reservoir entropy is conserved") {
    prop::for_all("entropy", 200, 45, [](Sampler& s) {
      const Transition t = s.transition(s.uniform_index(1, 4), s.coin(), s.coin(0.3));
      const Reservoir r = general_efficient_reservoir(t);
      const double hi = oracle::shannon(oracle::to_double(r.initial_state().probs()));
      const double hf = oracle::shannon(oracle::to_double(r.final_state().probs()));
      return std::fabs(hi - hf) < 1e-14;
    });
  }

  TEST_CASE("canonical form ignores relabeling") {
    const Reservoir a = Reservoir::make({Rat(1, 4), Rat(3, 4)}, {2, 6}, {5, 1});
    const Reservoir b = Reservoir::make({Rat(3, 4), Rat(1, 4)}, {3, 1}, {Rat(1, 2), Rat(5, 2)});
    CHECK(a.canonical() == b.canonical());
    CHECK_FALSE(a.canonical() == Reservoir::make({Rat(3, 4), Rat(1, 4)}, {3, 1}, {1, Rat(5, 2)}).canonical());
  }

  TEST_CASE("two-level reservoirs never suffice for two slopes") {
    const ThermoState p = make_state({Rat(1, 3), Rat(2, 3)}, {1, 1});
    const Transition t = extraction_transition(p);
    int efficient = 0;
    for (long num = 1; num <= 120; ++num) {
      for (long den = 1; den <= 120; ++den) {
        if (verify_efficient(t, Reservoir::make({1}, {1}, {Rat(num, den)}))) ++efficient;
      }
    }
    CHECK(efficient == 0);
  }

  TEST_CASE("minimal reservoir is unique at m = 2") {
    const ThermoState p = make_state({Rat(1, 2), Rat(1, 4), Rat(1, 4)}, {1, 1, 1});
    REQUIRE(num_distinct_slopes(curve_of(p)) == 2);
    const Transition t = extraction_transition(p);
    const Reservoir m = minimal_extraction_reservoir(p).canonical();
    std::vector<Rat> rs{Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4)};
    std::vector<Rat> ws{Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), 1, Rat(4, 3), Rat(3, 2), 2, 3};
    for (const auto& x : m.r()) rs.push_back(x);
    for (const auto& x : m.init_weights()) ws.push_back(x);
    for (const auto& x : m.fin_weights()) ws.push_back(x);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

    int efficient = 0;
    int wrong = 0;
    for (const auto& r0 : rs) {
      for (const auto& i1 : ws) {
        for (const auto& f0 : ws) {
          for (const auto& f1 : ws) {
            const Reservoir cand = Reservoir::make({r0, 1 - r0}, {1, i1}, {f0, f1});
            if (!verify_efficient(t, cand)) continue;
            ++efficient;
            if (!(cand.canonical() == m)) ++wrong;
          }
        }
      }
    }
    CHECK(efficient >= 1);
    CHECK(wrong == 0);
  }

  TEST_CASE("alternative product construction") {
    prop::for_all("alt product", 100, 46, [](Sampler& s) {
      const std::size_t n = s.uniform_index(1, 3);
      const std::vector<Rat> ones(n, Rat(1));
      const Transition t = make_transition(s.state_over(ones), s.state_over(ones));
      const Reservoir r = alt_product_reservoir(t);
      return r.dimension() == 2 * n * n && verify_efficient(t, r) &&
             std::fabs(average_work(r) - entropy_production(t)) < 1e-10;
    });
    CHECK(code_of([] { alt_product_reservoir(example1_transition()); }) == ErrorCode::NontrivialHamiltonian);
    CHECK(code_of([] { alt_product_reservoir(table1_transition()); }) == ErrorCode::ZeroProbability);
  }

  TEST_CASE("formation family") {
    prop::for_all("formation family", 100, 47, [](Sampler& s) {
      const ThermoState p = non_gibbs_state(s, 2, 3);
      const auto [x1, y1] = minimal_formation_pair(p);
      const Curve b = prop::random_curve(s, 3);
      Curve other = prop::random_curve(s, 3);
      const bool accepts = characterize_formation_family(p, product(b, x1), product(b, y1));
      const bool rejects_mixed =
          !characterize_formation_family(p, product(b, x1), product(other, y1)) || coincide(b, other);
      const bool rejects_swapped = !characterize_formation_family(p, product(b, y1), product(b, x1));
      return accepts && rejects_mixed && rejects_swapped;
    });
    CHECK(code_of([] {
            const ThermoState g = make_state({Rat(1, 2), Rat(1, 2)}, {1, 1});
            characterize_formation_family(g, Curve::identity(), Curve::identity());
          }) == ErrorCode::GibbsInput);
  }

  TEST_CASE("formation family members form the system") {
    const ThermoState p = make_state({Rat(1, 3), Rat(2, 3)}, {1, 1});
    const auto [x1, y1] = minimal_formation_pair(p);
    const Curve tau = curve_of(gibbs_of(p));
    const Curve sys = curve_of(p);
    CHECK(coincide(product(tau, x1), product(sys, y1)));
  }
}
