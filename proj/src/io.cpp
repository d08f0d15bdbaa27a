#include "thermores/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "thermores/errors.hpp"

namespace thermores::io {
namespace {

[[noreturn]] void bad_field(std::string_view where, const std::string& what) {
  throw Error(ErrorCode::ParseError, std::string(where) + ": " + what);
}

const json& field(const json& j, const char* key, std::string_view where) {
  if (!j.is_object()) bad_field(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_field(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(std::string_view where, std::string_view key) {
  return std::string(where) + "." + std::string(key);
}

std::string decimal(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

}  // namespace

Rat rat_from_json(const json& j, std::string_view where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  if (!j.is_string()) bad_field(where, "expected a rational string \"p/q\" or an integer");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad_field(where, e.detail());
  }
}

json rat_to_json(const Rat& r) { return r.str(); }

std::vector<Rat> rats_from_json(const json& j, std::string_view where) {
  if (!j.is_array()) bad_field(where, "expected an array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rat_from_json(j[i], std::string(where) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json rats_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat_to_json(r));
  return out;
}

ThermoState state_from_json(const json& j, std::string_view where) {
  return ThermoState::make(rats_from_json(field(j, "probs", where), sub(where, "probs")),
                           rats_from_json(field(j, "weights", where), sub(where, "weights")));
}

json state_to_json(const ThermoState& s) {
  return {{"probs", rats_to_json(s.probs())}, {"weights", rats_to_json(s.weights())}};
}

Transition transition_from_json(const json& j) {
  ThermoState a = state_from_json(field(j, "initial", "transition"), "transition.initial");
  ThermoState b = state_from_json(field(j, "final", "transition"), "transition.final");
  if (j.contains("clock") && j["clock"].is_boolean() && j["clock"].get<bool>()) {
    return clock_lift(a, b);
  }
  return Transition::make(std::move(a), std::move(b));
}

json transition_to_json(const Transition& t) {
  return {{"initial", state_to_json(t.initial())}, {"final", state_to_json(t.final())}};
}

Reservoir reservoir_from_json(const json& j, std::string_view where) {
  return Reservoir::make(rats_from_json(field(j, "r", where), sub(where, "r")),
                         rats_from_json(field(j, "init_weights", where), sub(where, "init_weights")),
                         rats_from_json(field(j, "fin_weights", where), sub(where, "fin_weights")));
}

json reservoir_to_json(const Reservoir& r) {
  return {{"r", rats_to_json(r.r())},
          {"init_weights", rats_to_json(r.init_weights())},
          {"fin_weights", rats_to_json(r.fin_weights())}};
}

json curve_to_json(const Curve& c) {
  json segs = json::array();
  for (const auto& s : c.segments()) {
    segs.push_back({{"height", rat_to_json(s.height)}, {"slope", rat_to_json(s.slope)}});
  }
  json pts = json::array();
  for (const auto& p : c.breakpoints()) pts.push_back({rat_to_json(p.x), rat_to_json(p.y)});
  return {{"segments", segs}, {"total_width", rat_to_json(c.total_width())}, {"breakpoints", pts}};
}

Curve curve_from_json(const json& j, std::string_view where) {
  const json& segs = field(j, "segments", where);
  if (!segs.is_array()) bad_field(sub(where, "segments"), "expected an array");
  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string w = sub(where, "segments") + "[" + std::to_string(i) + "]";
    out.push_back({rat_from_json(field(segs[i], "height", w), sub(w, "height")),
                   rat_from_json(field(segs[i], "slope", w), sub(w, "slope"))});
  }
  try {
    return Curve::from_segments(std::move(out),
                                rat_from_json(field(j, "total_width", where), sub(where, "total_width")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad_field(where, e.detail());
  }
}

json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

double real_from_json(const json& j, std::string_view where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  bad_field(where, "expected a number or \"inf\"");
}

json profile_to_json(const AlphaProfile& p) {
  json a = json::array();
  json v = json::array();
  for (double x : p.alphas) a.push_back(real_to_json(x));
  for (double x : p.values) v.push_back(real_to_json(x));
  return {{"alpha", a}, {"value", v}};
}

json verdict_to_json(const CtoVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnessed_alphas) {
    w.push_back({{"alpha", real_to_json(x.alpha)},
                 {"d_initial", real_to_json(x.d_initial)},
                 {"d_final", real_to_json(x.d_final)}});
  }
  return {{"feasible", v.feasible},
          {"witnessed_alphas", w},
          {"sound_for_rejection_only", v.sound_for_rejection_only},
          {"negative_alpha_zero", v.negative_alpha_zero}};
}

json engine_to_json(const EngineReport& r) {
  json levels = json::array();
  for (const auto& row : r.levels) {
    levels.push_back({{"label", row.label},
                      {"probability", row.probability},
                      {"rho_W1", row.energy[0]},
                      {"rho_W2", row.energy[1]},
                      {"rho_W3", row.energy[2]}});
  }
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"name", s.name},
                     {"temperature", s.temperature},
                     {"approx_state", state_to_json(s.approx_state)},
                     {"reservoir", reservoir_to_json(s.reservoir)},
                     {"verified", s.verified},
                     {"approximation_gap", s.approximation_gap},
                     {"work", s.work}});
  }
  return {{"epsilon", r.spec.epsilon},
          {"t_hot", r.spec.t_hot},
          {"t_cold", r.spec.t_cold},
          {"p_cold", r.p_cold},
          {"p_hot", r.p_hot},
          {"s_cold", r.s_cold},
          {"s_hot", r.s_hot},
          {"q_hot", r.q_hot},
          {"q_cold", r.q_cold},
          {"work", r.work},
          {"eta", r.eta},
          {"work_hot_step", r.work_hot_step},
          {"work_cold_step", r.work_cold_step},
          {"levels", levels},
          {"steps", steps}};
}

json parse_json_text(const std::string& text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(source) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string breakpoints_csv(const Curve& c) {
  std::ostringstream os;
  os << "x,y,x_decimal,y_decimal\n";
  for (const auto& p : c.breakpoints()) {
    os << p.x << ',' << p.y << ',' << decimal(p.x.to_double()) << ',' << decimal(p.y.to_double())
       << '\n';
  }
  return os.str();
}

std::string curves_svg(const std::vector<std::pair<std::string, Curve>>& curves,
                       std::string_view title) {
  constexpr double kW = 800, kH = 500, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  double zmax = 1.0;
  for (const auto& [_, c] : curves) zmax = std::max(zmax, c.total_width().to_double());
  auto px = [&](double x) { return kLeft + x / zmax * (kW - kLeft - kRight); };
  auto py = [&](double y) { return kH - kBottom - y * (kH - kTop - kBottom); };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
  os << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
     << title << "</text>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(zmax) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << px(zmax) << "\" y=\"" << py(0) + 20
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">Z = " << decimal(zmax)
     << "</text>\n";
  os << "<text x=\"" << px(0) - 8 << "\" y=\"" << py(1) + 4
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1</text>\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& [label, c] = curves[k];
    const char* color = kColors[k % (sizeof(kColors) / sizeof(kColors[0]))];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : c.breakpoints()) os << px(p.x.to_double()) << ',' << py(p.y.to_double()) << ' ';
    os << "\"/>\n";
    os << "<text x=\"" << kW - kRight - 10 << "\" y=\"" << py(0) - 20 - 18.0 * static_cast<double>(k)
       << "\" text-anchor=\"end\" fill=\"" << color
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace thermores::io
