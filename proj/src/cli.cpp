#include "thermores/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "thermores/catalysis.hpp"
#include "thermores/divergence.hpp"
#include "thermores/engine.hpp"
#include "thermores/errors.hpp"
#include "thermores/gibbsoracle.hpp"
#include "thermores/io.hpp"
#include "thermores/reproduce.hpp"
#include "thermores/reservoir.hpp"
#include "thermores/sampling.hpp"
#include "thermores/thermocurve.hpp"

namespace thermores {
namespace {

using io::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_alpha(std::string_view tok) {
  tok = trim(tok);
  if (tok == "inf" || tok == "+inf" || tok == "infinity") return kInfinity;
  if (tok.find('/') != std::string_view::npos) return Rat::parse(tok).to_double();
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || std::isnan(v) || std::isinf(v)) {
    throw Error(ErrorCode::ParseError, "malformed alpha \"" + s + "\"");
  }
  return v;
}

// Where a command's main document goes: a file when --output is given.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  f << text;
}

struct Options {
  std::string output;
  std::string format = "json";
  std::string state;
  std::string reference;
  std::string a;
  std::string b;
  std::string transition;
  std::string reservoir;
  std::string method = "general";
  std::string anchor = "1";
  std::string alpha_grid;
  bool nonnegative = false;
  std::string joint_init;
  std::string joint_fin;
  std::size_t catalyst_dim = 0;
  std::uint64_t seed = 1;
  std::size_t count = 500;
  std::size_t min_dim = 2;
  std::size_t max_dim = 5;
  std::size_t cap = kDefaultDimensionCap;
  double epsilon = 1.0;
  double t_hot = 2.0;
  double t_cold = 1.0;
  std::string csv_dir;
  std::string which;
};

std::vector<double> grid_for(const Options& o) {
  std::vector<double> g = o.alpha_grid.empty() ? configured_alpha_grid() : parse_alpha_grid(o.alpha_grid);
  if (o.nonnegative) std::erase_if(g, [](double a) { return a < 0; });
  return g;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const ThermoState s = io::state_from_json(io::read_json_file(o.state));
  const Curve c = curve_of(s);
  Sink sink(out, o.output);
  if (o.format == "csv") {
    sink.stream() << io::breakpoints_csv(c);
  } else if (o.format == "svg") {
    sink.stream() << io::curves_svg({{"state", c}, {"Gibbs", curve_of(gibbs_of(s))}},
                                    "thermomajorization curve");
  } else {
    json j = io::curve_to_json(c);
    j["num_distinct_slopes"] = num_distinct_slopes(c);
    emit(sink.stream(), j);
  }
  return kExitOk;
}

int cmd_majorize(const Options& o, std::ostream& out) {
  Curve ca = Curve::identity(), cb = Curve::identity();
  if (!o.transition.empty()) {
    const Transition t = io::transition_from_json(io::read_json_file(o.transition));
    ca = curve_of(t.initial());
    cb = curve_of(t.final());
  } else {
    ca = curve_of(io::state_from_json(io::read_json_file(o.a), "a"));
    cb = curve_of(io::state_from_json(io::read_json_file(o.b), "b"));
  }
  const bool m = majorizes(ca, cb);
  Sink sink(out, o.output);
  emit(sink.stream(), {{"majorizes", m}, {"reverse", majorizes(cb, ca)}, {"coincide", coincide(ca, cb)}});
  return m ? kExitOk : kExitFalse;
}

int cmd_divergence(const Options& o, std::ostream& out) {
  const ThermoState p = io::state_from_json(io::read_json_file(o.state));
  const ThermoState q =
      o.reference.empty() ? gibbs_of(p) : io::state_from_json(io::read_json_file(o.reference), "reference");
  const AlphaProfile prof = alpha_profile(p, q, grid_for(o));
  json j = io::profile_to_json(prof);
  j["d0_argument"] = io::rat_to_json(d0_argument(p, q));
  const auto dinf = dinf_argument(p, q);
  j["dinf_argument"] = dinf ? io::rat_to_json(*dinf) : json("inf");
  Sink sink(out, o.output);
  emit(sink.stream(), j);
  return kExitOk;
}

int cmd_build_reservoir(const Options& o, std::ostream& out) {
  Transition t = o.method == "minimal"
                     ? extraction_transition(io::state_from_json(io::read_json_file(o.state)))
                     : io::transition_from_json(io::read_json_file(o.transition));
  Reservoir res = Reservoir::trivial();
  if (o.method == "minimal") {
    res = minimal_extraction_reservoir(t.initial(), Rat::parse(o.anchor));
  } else if (o.method == "general") {
    res = general_efficient_reservoir(t, Rat::parse(o.anchor));
  } else if (o.method == "product") {
    res = alt_product_reservoir(t);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method " + o.method);
  }
  json j = io::reservoir_to_json(res);
  j["verified"] = verify_efficient(t, res);
  j["average_work"] = average_work(res);
  j["entropy_production"] = entropy_production(t);
  Sink sink(out, o.output);
  emit(sink.stream(), j);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Transition t = io::transition_from_json(io::read_json_file(o.transition));
  const Reservoir res = io::reservoir_from_json(io::read_json_file(o.reservoir));
  const bool ok = verify_efficient(t, res);
  Sink sink(out, o.output);
  emit(sink.stream(), {{"efficient", ok}, {"average_work", average_work(res)}});
  return ok ? kExitOk : kExitFalse;
}

int cmd_catalytic(const Options& o, std::ostream& out) {
  Sink sink(out, o.output);
  if (!o.joint_init.empty()) {
    const ThermoState ji = io::state_from_json(io::read_json_file(o.joint_init), "joint_init");
    const ThermoState jf = io::state_from_json(io::read_json_file(o.joint_fin), "joint_fin");
    const bool ok = strip_catalyst(ji, jf, o.catalyst_dim);
    emit(sink.stream(), {{"system_curves_coincide", ok}});
    return ok ? kExitOk : kExitFalse;
  }
  const Transition t = io::transition_from_json(io::read_json_file(o.transition));
  const CtoVerdict v = cto_feasible(t, grid_for(o));
  emit(sink.stream(), io::verdict_to_json(v));
  return v.feasible ? kExitOk : kExitFalse;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  Sink sink(out, o.output);
  if (!o.transition.empty()) {
    const Transition t = io::transition_from_json(io::read_json_file(o.transition));
    const LpResult lp = lp_feasible(t, o.cap);
    const bool curve = majorizes(curve_of(t.initial()), curve_of(t.final()));
    json j = {{"lp_feasible", lp.feasible}, {"curve_majorizes", curve}, {"residual", lp.residual}};
    if (lp.witness) j["witness"] = lp.witness->m;
    emit(sink.stream(), j);
    return lp.feasible == curve ? kExitOk : kExitFalse;
  }
  if (o.min_dim < 1 || o.max_dim < o.min_dim) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= min-dim <= max-dim");
  }
  Sampler rng(o.seed);
  std::size_t agree = 0, feasible = 0;
  json disagreements = json::array();
  for (std::size_t k = 0; k < o.count; ++k) {
    const std::size_t n = rng.uniform_index(o.min_dim, o.max_dim);
    const Transition t = rng.transition(n, k % 2 == 0, rng.coin(0.2));
    const bool lp = lp_feasible(t, o.cap).feasible;
    const bool curve = majorizes(curve_of(t.initial()), curve_of(t.final()));
    feasible += curve ? 1 : 0;
    if (lp == curve) {
      ++agree;
    } else {
      disagreements.push_back({{"index", k}, {"transition", io::transition_to_json(t)},
                               {"lp", lp}, {"curve", curve}});
    }
  }
  emit(sink.stream(), {{"count", o.count},
                       {"seed", o.seed},
                       {"agree", agree},
                       {"curve_feasible", feasible},
                       {"agreement", o.count ? static_cast<double>(agree) / static_cast<double>(o.count) : 1.0},
                       {"disagreements", disagreements}});
  return agree == o.count ? kExitOk : kExitFalse;
}

int cmd_engine(const Options& o, std::ostream& out) {
  const EngineSpec spec{o.epsilon, o.t_hot, o.t_cold};
  const EngineReport rep = run_carnot(spec);
  if (!o.csv_dir.empty()) {
    const std::filesystem::path dir(o.csv_dir);
    std::filesystem::create_directories(dir);
    for (const auto& s : rep.steps) {
      if (s.name == "step2" || s.name == "step4") {
        const Transition t = extraction_transition(s.approx_state);
        write_file(dir / (s.name + "_initial.csv"), io::breakpoints_csv(curve_of(t.initial())));
        write_file(dir / (s.name + "_final.csv"), io::breakpoints_csv(curve_of(t.final())));
      }
    }
  }
  Sink sink(out, o.output);
  if (o.format == "svg") {
    std::vector<std::pair<std::string, Curve>> curves;
    for (const auto& s : rep.steps) {
      curves.emplace_back(s.name + " start", curve_of(s.approx_state));
      curves.emplace_back(s.name + " end", curve_of(gibbs_of(s.approx_state)));
    }
    sink.stream() << io::curves_svg(curves, "qubit engine steps");
  } else {
    emit(sink.stream(), io::engine_to_json(rep));
  }
  return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  const ReproReport rep = reproduce(o.which);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"quantity", c.quantity},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  Sink sink(out, o.output);
  emit(sink.stream(), {{"which", rep.which}, {"ok", rep.ok()}, {"checks", checks}, {"details", rep.details}});
  if (!rep.ok()) {
    err << to_string(ErrorCode::ReproductionMismatch) << ": " << rep.failures() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

std::vector<double> parse_alpha_grid(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!trim(tok).empty()) out.push_back(parse_alpha(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty alpha grid");
  return out;
}

std::vector<double> configured_alpha_grid() {
  const char* env = std::getenv("THERMO_ALPHA_GRID");
  if (env != nullptr && *env != '\0') return parse_alpha_grid(env);
  return default_alpha_grid();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-shot thermodynamics of energy-incoherent states", "thermores"};
  app.require_subcommand(1);
  Options o;

  auto* curve = app.add_subcommand("curve", "Thermomajorization curve of a state");
  curve->add_option("--state", o.state, "State JSON")->required();
  curve->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "svg"}));

  auto* maj = app.add_subcommand("majorize", "Does the first curve lie on or above the second?");
  maj->add_option("--a", o.a, "First state JSON");
  maj->add_option("--b", o.b, "Second state JSON");
  maj->add_option("--transition", o.transition, "Transition JSON (initial vs final)");

  auto* div = app.add_subcommand("divergence", "Renyi divergence profile");
  div->add_option("--state", o.state)->required();
  div->add_option("--reference", o.reference, "Reference state (default: Gibbs)");
  div->add_option("--alpha-grid", o.alpha_grid, "Comma-separated alphas");

  auto* build = app.add_subcommand("build-reservoir", "Synthesize an efficient work reservoir");
  build->add_option("--method", o.method)->check(CLI::IsMember({"minimal", "general", "product"}));
  build->add_option("--state", o.state, "State JSON (minimal: extraction from this state)");
  build->add_option("--transition", o.transition, "Transition JSON (general, product)");
  build->add_option("--anchor", o.anchor, "c for minimal, first init weight for general");

  auto* ver = app.add_subcommand("verify", "Exact zero-dissipation check of a reservoir");
  ver->add_option("--transition", o.transition)->required();
  ver->add_option("--reservoir", o.reservoir)->required();

  auto* cat = app.add_subcommand("catalytic-check", "Alpha-grid catalytic feasibility");
  cat->add_option("--transition", o.transition);
  cat->add_option("--alpha-grid", o.alpha_grid);
  cat->add_flag("--nonnegative", o.nonnegative, "Restrict the grid to alpha >= 0");
  cat->add_option("--joint-init", o.joint_init, "Joint initial state (catalyst elimination)");
  cat->add_option("--joint-fin", o.joint_fin, "Joint final state");
  cat->add_option("--catalyst-dim", o.catalyst_dim);

  auto* orc = app.add_subcommand("oracle-check", "Cross-validate the LP oracle against curves");
  orc->add_option("--transition", o.transition, "Check a single transition");
  orc->add_option("--count", o.count);
  orc->add_option("--seed", o.seed);
  orc->add_option("--min-dim", o.min_dim);
  orc->add_option("--max-dim", o.max_dim);
  orc->add_option("--cap", o.cap);

  auto* eng = app.add_subcommand("engine", "Qubit Carnot engine with efficient reservoirs");
  eng->add_option("--epsilon", o.epsilon);
  eng->add_option("--t-hot", o.t_hot);
  eng->add_option("--t-cold", o.t_cold);
  eng->add_option("--csv-dir", o.csv_dir, "Directory for per-step curve CSVs");
  eng->add_option("--format", o.format)->check(CLI::IsMember({"json", "svg"}));

  auto* rep = app.add_subcommand("reproduce", "Regenerate a worked example and check it");
  rep->add_option("which", o.which)->required()->check(CLI::IsMember(reproduction_targets()));

  for (auto* sub : app.get_subcommands({})) sub->add_option("--output,-o", o.output, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (curve->parsed()) return cmd_curve(o, out);
    if (maj->parsed()) {
      if (o.transition.empty() && (o.a.empty() || o.b.empty())) {
        throw Error(ErrorCode::InvalidArgument, "majorize needs --transition or both --a and --b");
      }
      return cmd_majorize(o, out);
    }
    if (div->parsed()) return cmd_divergence(o, out);
    if (build->parsed()) {
      if (o.method == "minimal" ? o.state.empty() : o.transition.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    o.method == "minimal" ? "minimal needs --state" : "this method needs --transition");
      }
      return cmd_build_reservoir(o, out);
    }
    if (ver->parsed()) return cmd_verify(o, out);
    if (cat->parsed()) {
      if (o.transition.empty() && (o.joint_init.empty() || o.joint_fin.empty() || o.catalyst_dim == 0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "catalytic-check needs --transition, or --joint-init, --joint-fin and --catalyst-dim");
      }
      return cmd_catalytic(o, out);
    }
    if (orc->parsed()) return cmd_oracle(o, out);
    if (eng->parsed()) return cmd_engine(o, out);
    if (rep->parsed()) return cmd_reproduce(o, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::ReproductionMismatch ? kExitMismatch : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace thermores
