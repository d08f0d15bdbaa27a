#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thermores/catalysis.hpp"
#include "thermores/divergence.hpp"
#include "thermores/engine.hpp"
#include "thermores/rational.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/statespace.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores::io {

using json = nlohmann::json;

/// Rationals travel as "p/q" strings; bare JSON integers are accepted on
/// input. `where` names the field in error messages.
Rat rat_from_json(const json& j, std::string_view where);
json rat_to_json(const Rat& r);
std::vector<Rat> rats_from_json(const json& j, std::string_view where);
json rats_to_json(const std::vector<Rat>& v);

/// {"probs": [...], "weights": [...]}.
ThermoState state_from_json(const json& j, std::string_view where = "state");
json state_to_json(const ThermoState& s);

/// {"initial": state, "final": state}. With "clock": true the two states
/// may carry different weights and are joined by clock_lift.
Transition transition_from_json(const json& j);
json transition_to_json(const Transition& t);

/// {"r": [...], "init_weights": [...], "fin_weights": [...]}.
Reservoir reservoir_from_json(const json& j, std::string_view where = "reservoir");
json reservoir_to_json(const Reservoir& r);

json curve_to_json(const Curve& c);
Curve curve_from_json(const json& j, std::string_view where = "curve");

json profile_to_json(const AlphaProfile& p);
json verdict_to_json(const CtoVerdict& v);
json engine_to_json(const EngineReport& r);

/// JSON numbers cannot hold infinities; they are written as the strings
/// "inf" / "-inf".
json real_to_json(double x);
double real_from_json(const json& j, std::string_view where);

/// Reads and parses a file. Throws Error(ParseError) with the path and
/// the parser's line and column.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text, std::string_view source);

/// "x,y,x_decimal,y_decimal" header plus one row per breakpoint.
std::string breakpoints_csv(const Curve& c);

/// Fixed 800x500 SVG with one polyline per labelled curve, x axis 0..max Z
/// and y axis 0..1.
std::string curves_svg(const std::vector<std::pair<std::string, Curve>>& curves,
                       std::string_view title);

}  // namespace thermores::io
