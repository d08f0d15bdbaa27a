#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thermores/reservoir.hpp"
#include "thermores/statespace.hpp"

namespace thermores {

struct ReproCheck {
  std::string quantity;
  double expected;
  double actual;
  /// 0 for exact (boolean or rational) checks.
  double tolerance;
  bool pass;
};

struct ReproReport {
  std::string which;
  std::vector<ReproCheck> checks;
  nlohmann::json details;

  bool ok() const;
  /// Names of failing quantities, comma separated.
  std::string failures() const;
};

/// The worked erasure: (1/3, 2/3) -> (1, 0) over g = (1, 1).
Transition table1_transition();
/// r = (1/3, 2/3), initial weights (a, 2a), final weights (3a, 3a).
Reservoir table1_reservoir(const Rat& a = Rat(1));

/// (1/2, 1/2) -> (1/3, 2/3) over g = (2, 1).
Transition example1_transition();
Reservoir example1_expected_reservoir(const Rat& a = Rat(1));

/// (1/2, 1/2) over g = (1, 2) -> (2/3, 1/3) over g' = (1, 1), clock lifted.
Transition example2_transition();
Reservoir example2_expected_reservoir(const Rat& a = Rat(1));

/// which in {table1, example1, example2, engine}. Throws InvalidArgument
/// for anything else.
ReproReport reproduce(std::string_view which);

std::vector<std::string> reproduction_targets();

}  // namespace thermores
