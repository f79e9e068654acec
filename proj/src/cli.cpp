#include "mkdv/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mkdv/dynamics.hpp"
#include "mkdv/errors.hpp"
#include "mkdv/experiments.hpp"
#include "mkdv/gauges.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/serialization.hpp"

#ifndef MKDV_LAB_VERSION
#define MKDV_LAB_VERSION "dev"
#endif

namespace mkdv::cli {
namespace fs = std::filesystem;
using io::format_double;

namespace {

const char* const kSubcommandHelp[][2] = {
    {"solve", "integrate one equation from a preset and write the trajectory"},
    {"gauge", "apply or invert G1/G2 on a stored trajectory"},
    {"norms", "evaluate FL^{s,p} (and optionally X^{s,b}) norms of a stored state or trajectory"},
    {"experiment", "run a named experiment and write report.json"},
};

struct CliState {
  CLI::App app{"Pseudo-spectral lab for the complex mKdV family on the torus", "mkdv-lab"};
  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, std::string> config_path;

  CliState() {
    app.require_subcommand(1);
    app.set_version_flag("--version", MKDV_LAB_VERSION);
    for (const auto& entry : kSubcommandHelp) {
      const std::string name = entry[0];
      CLI::App* sub = app.add_subcommand(name, entry[1]);
      subs[name] = sub;
      sub->add_option("--config", config_path[name], "flat key=value file; flags take precedence");
      for (const auto& key : config_schema()) {
        const std::string k(key.name);
        if (key.type == KeyType::boolean) {
          sub->add_flag("--" + k, flags[name][k], std::string(key.help));
        } else {
          sub->add_option("--" + k, raw[name][k], std::string(key.help));
        }
      }
    }
  }

  RunConfig resolve() {
    std::string name;
    for (const auto& [n, sub] : subs)
      if (sub->parsed()) name = n;
    std::map<std::string, std::string> flag_values;
    for (const auto& key : config_schema()) {
      const std::string k(key.name);
      if (subs[name]->count("--" + k) == 0) continue;
      flag_values[k] = key.type == KeyType::boolean ? "true" : raw[name][k];
    }
    std::map<std::string, std::string> file_values;
    if (!config_path[name].empty()) {
      std::ifstream in(config_path[name]);
      if (!in) throw ConfigError("cannot read config file '" + config_path[name] + "'");
      std::ostringstream body;
      body << in.rdbuf();
      file_values = parse_config_file(body.str());
    }
    return resolve_config(name, file_values, flag_values);
  }
};

int code_for_report(const ExperimentReport& r) { return r.all_pass() ? kOk : kVerdictFailure; }

void print_verdicts(const ExperimentReport& r, std::ostream& out) {
  for (const auto& [k, v] : r.verdicts) {
    out << (v.pass ? "PASS " : "FAIL ") << r.name << '.' << k << " value=" << format_double(v.value) << ' '
        << v.relation << ' ' << format_double(v.threshold) << '\n';
  }
}

void finish_report(const RunConfig& cfg, ExperimentReport& r, std::ostream& out) {
  echo_config(cfg, r);
  write_report(cfg.text_or("out", "mkdv-out"), r);
  print_verdicts(r, out);
}

std::vector<int> int_list(const RunConfig& cfg, const std::string& key, std::vector<int> fallback) {
  if (!cfg.has(key)) return fallback;
  std::vector<int> out;
  for (auto v : cfg.ints(key)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<double> real_list(const RunConfig& cfg, const std::string& key, std::vector<double> fallback) {
  return cfg.has(key) ? cfg.reals(key) : fallback;
}

double th(const RunConfig& cfg, const std::string& name, double fallback) {
  return cfg.real_or("threshold." + name, fallback);
}

int modes_of(const RunConfig& cfg, int fallback) { return static_cast<int>(cfg.integer_or("modes", fallback)); }

std::size_t stride_of(const RunConfig& cfg, std::size_t fallback) {
  const auto s = cfg.integer_or("stride", static_cast<std::int64_t>(fallback));
  if (s < 1) throw ConfigError("'stride' must be at least 1");
  return static_cast<std::size_t>(s);
}

ExperimentReport run_experiment(const RunConfig& cfg) {
  const std::string name = cfg.text("experiment");
  if (name == "conservation") {
    ConservationParams p;
    if (cfg.has("eq")) p.equation.variant = cfg.equation().variant;
    p.equation.sign = static_cast<int>(cfg.integer_or("sign", p.equation.sign));
    p.ic = cfg.has("ic") ? cfg.preset("ic") : p.ic;
    p.T = cfg.real_or("T", p.T);
    p.dt = cfg.real_or("dt", p.dt);
    p.modes = modes_of(cfg, p.modes);
    p.sample_stride = stride_of(cfg, p.sample_stride);
    p.mass_tol = th(cfg, "mass_tol", p.mass_tol);
    p.momentum_tol = th(cfg, "momentum_tol", p.momentum_tol);
    return exp_conservation(p);
  }
  if (name == "gauge_equivalence") {
    GaugeEquivalenceParams p;
    p.ic = cfg.has("ic") ? cfg.preset("ic") : p.ic;
    p.sign = static_cast<int>(cfg.integer_or("sign", p.sign));
    p.T = cfg.real_or("T", p.T);
    p.dt = cfg.real_or("dt", p.dt);
    p.modes = modes_of(cfg, p.modes);
    p.sample_stride = stride_of(cfg, p.sample_stride);
    p.tol = th(cfg, "tol", p.tol);
    return exp_gauge_equivalence(p);
  }
  if (name == "nonexistence") {
    NonexistenceParams p;
    p.s = cfg.real_or("s", p.s);
    p.p = cfg.real_or("p", p.p);
    p.alpha = cfg.real_or("alpha", p.alpha);
    p.symmetric_data = cfg.text_or("data", "one_sided") == "symmetric";
    p.schedule = int_list(cfg, "schedule", p.schedule);
    p.T = cfg.real_or("T", p.T);
    p.dt = cfg.real_or("dt", p.dt);
    p.modes = modes_of(cfg, p.modes);
    p.sign = static_cast<int>(cfg.integer_or("sign", p.sign));
    p.sample_stride = stride_of(cfg, p.sample_stride);
    p.cauchy_shrink = th(cfg, "cauchy_shrink", p.cauchy_shrink);
    p.separation = th(cfg, "separation", p.separation);
    p.pairing_ratio = th(cfg, "pairing_ratio", p.pairing_ratio);
    p.control_pairing_ratio = th(cfg, "control_pairing_ratio", p.control_pairing_ratio);
    return exp_nonexistence(p);
  }
  if (name == "illposedness") {
    IllposednessParams p;
    p.s = cfg.real_or("s", p.s);
    p.p = cfg.real_or("p", p.p);
    p.n_list = int_list(cfg, "n_list", p.n_list);
    p.n_rule = cfg.text_or("N_rule", p.n_rule);
    p.sign = static_cast<int>(cfg.integer_or("sign", p.sign));
    p.phase_step = cfg.real_or("phase_step", p.phase_step);
    p.run_solver = cfg.boolean_or("run_solver", p.run_solver);
    p.solution_floor = th(cfg, "solution_floor", p.solution_floor);
    p.solver_tol = th(cfg, "solver_tol", p.solver_tol);
    return exp_illposedness(p);
  }
  if (name == "random_momentum") {
    RandomMomentumParams p;
    p.samples = static_cast<std::size_t>(cfg.integer_or("samples", static_cast<std::int64_t>(p.samples)));
    p.N = static_cast<int>(cfg.integer_or("N", p.N));
    p.seed = static_cast<std::uint64_t>(cfg.integer_or("seed", static_cast<std::int64_t>(p.seed)));
    p.real_only = cfg.boolean_or("real_only", p.real_only);
    p.sigmas = th(cfg, "sigmas", p.sigmas);
    return exp_random_momentum(p);
  }
  if (name == "energy_drift") {
    EnergyDriftParams p;
    p.ic = cfg.has("ic") ? cfg.preset("ic") : p.ic;
    p.schedule = int_list(cfg, "schedule", p.schedule);
    p.T = cfg.real_or("T", p.T);
    p.dt = cfg.real_or("dt", p.dt);
    p.modes = modes_of(cfg, p.modes);
    p.sign = static_cast<int>(cfg.integer_or("sign", p.sign));
    p.sample_stride = stride_of(cfg, p.sample_stride);
    p.slope_max = th(cfg, "slope_max", p.slope_max);
    p.noise_floor = th(cfg, "noise_floor", p.noise_floor);
    return exp_energy_drift(p);
  }
  if (name == "apriori") {
    AprioriParams p;
    p.s = cfg.real_or("s", p.s);
    p.p = cfg.real_or("p", p.p);
    if (cfg.has("eq")) p.variant = cfg.equation().variant;
    p.ic = cfg.has("ic") ? cfg.preset("ic") : p.ic;
    p.amplitudes = real_list(cfg, "amplitudes", p.amplitudes);
    p.T = cfg.real_or("T", p.T);
    p.dt = cfg.real_or("dt", p.dt);
    p.modes = modes_of(cfg, p.modes);
    p.sign = static_cast<int>(cfg.integer_or("sign", p.sign));
    p.sample_stride = stride_of(cfg, p.sample_stride);
    p.doubling_growth = th(cfg, "doubling_growth", p.doubling_growth);
    return exp_apriori_probe(p);
  }
  MultiplierParams p;
  p.s_list = real_list(cfg, "s_list", p.s_list);
  p.p_list = real_list(cfg, "p_list", p.p_list);
  if (cfg.has("n_list")) p.n_list = cfg.ints("n_list");
  if (cfg.has("K_list")) p.K_list = cfg.ints("K_list");
  p.stabilization = th(cfg, "stabilization", p.stabilization);
  return exp_multiplier_probe(p);
}

void add_state_series(ExperimentReport& r, const Trajectory& traj) {
  auto& ms = r.add_series("mass", "t", "mass");
  auto& ps = r.add_series("momentum", "t", "momentum");
  auto& ns = r.add_series("fl_half_two", "t", "FL^{1/2,2}");
  for (const auto& slice : traj.states) {
    ms.points.emplace_back(slice.time(), mass(slice));
    ps.points.emplace_back(slice.time(), momentum(slice));
    ns.points.emplace_back(slice.time(), fl_norm(slice, 0.5, 2.0));
  }
  for (const auto& w : traj.warnings) r.notes.push_back(w);
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path dir = cfg.text_or("out", "mkdv-out");
  const FourierState ic = make_initial_state(cfg.preset("ic"), modes_of(cfg, 32));
  SolveOptions opts;
  opts.sample_stride = stride_of(cfg, 1);
  ExperimentReport r;
  r.name = "solve";
  echo_config(cfg, r);
  try {
    const Trajectory traj = solve(ic, cfg.equation(), cfg.real("T"), cfg.real("dt"), opts);
    io::save_trajectory(dir, traj);
    add_state_series(r, traj);
    write_report(dir, r);
    for (const auto& w : traj.warnings) err << "warning: " << w << '\n';
    out << "wrote " << traj.size() << " states to " << dir.string() << '\n';
    return kOk;
  } catch (const SolverAbort& e) {
    io::save_trajectory(dir, e.partial());
    add_state_series(r, e.partial());
    r.notes.push_back(std::string("aborted: ") + e.what());
    write_report(dir, r);
    err << "numerical abort: " << e.what() << '\n';
    return kNumericalAbort;
  }
}

int run_gauge(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = cfg.text_or("out", "mkdv-out");
  const Trajectory traj = io::load_trajectory(cfg.text("input"));
  if (traj.states.empty()) throw ConfigError("input trajectory has no states");
  const GaugeKind kind = *parse_gauge(cfg.text("gauge"));
  const int sign = static_cast<int>(cfg.integer_or("sign", traj.equation.sign));
  const double scalar = kind == GaugeKind::G1 ? mass(traj.states.front())
                                              : cfg.real_or("P0", momentum(traj.states.front()));
  const GaugeSpec spec{kind, sign, scalar};
  const Trajectory result = cfg.boolean_or("invert", false) ? invert_gauge(traj, spec) : apply_gauge(traj, spec);
  io::save_trajectory(dir, result);
  ExperimentReport r;
  r.name = "gauge";
  r.scalars["scalar"] = scalar;
  add_state_series(r, result);
  echo_config(cfg, r);
  write_report(dir, r);
  out << "wrote gauged trajectory (" << to_string(kind) << ", scalar " << format_double(scalar) << ") to "
      << dir.string() << '\n';
  return kOk;
}

std::vector<std::pair<double, double>> norm_list(const RunConfig& cfg) {
  std::vector<std::pair<double, double>> out;
  std::istringstream ss(cfg.text_or("norms", "0:2,0.5:2"));
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto colon = cell.find(':');
    const std::string ptext = cell.substr(colon + 1);
    out.emplace_back(std::stod(cell.substr(0, colon)),
                     ptext == "inf" ? NormSpec::infinity : std::stod(ptext));
  }
  return out;
}

int run_norms(const RunConfig& cfg, std::ostream& out) {
  const fs::path input = cfg.text("input");
  Trajectory traj;
  if (fs::is_directory(input)) {
    traj = io::load_trajectory(input);
  } else {
    traj.states.push_back(io::load_state(input));
    traj.mode_cap = traj.states.front().mode_cap();
  }
  const auto specs = norm_list(cfg);
  const bool table = cfg.boolean_or("table", false);
  ExperimentReport r;
  r.name = "norms";
  out << "t,s,p,value\n";
  for (const auto& [s, p] : specs) {
    const std::string key = "fl_s" + format_double(s) + "_p" + format_double(p);
    auto& series = r.add_series(key, "t", "FL^{s,p}");
    for (const auto& slice : traj.states) {
      const double v = fl_norm(slice, s, p);
      series.points.emplace_back(slice.time(), v);
      out << format_double(slice.time()) << ',' << format_double(s) << ',' << format_double(p) << ','
          << format_double(v) << '\n';
    }
    r.scalars[key + "_initial"] = series.points.front().second;
  }
  r.scalars["mass_initial"] = mass(traj.states.front());
  r.scalars["momentum_initial"] = momentum(traj.states.front());
  if (cfg.has("xsb")) {
    std::vector<double> v;
    std::istringstream ss(cfg.text("xsb"));
    std::string cell;
    while (std::getline(ss, cell, ':')) v.push_back(cell == "inf" ? NormSpec::infinity : std::stod(cell));
    if (v.size() != 4) throw ConfigError("'xsb' must be s:b:p:q");
    XsbInfo info;
    r.scalars["xsb"] = xsb_norm(traj, NormSpec{v[0], v[2], v[1], v[3]}, &info);
    r.parameters["xsb.window"] = info.window;
    r.parameters["xsb.padded_length"] = std::to_string(info.padded_length);
  }
  if (table) {
    out << '\n' << std::setw(12) << "s" << std::setw(12) << "p" << std::setw(24) << "||u(t0)||" << '\n';
    for (const auto& [s, p] : specs) {
      out << std::setw(12) << s << std::setw(12) << p << std::setw(24) << std::setprecision(12)
          << fl_norm(traj.states.front(), s, p) << '\n';
    }
    out << "mass " << format_double(mass(traj.states.front())) << "  momentum "
        << format_double(momentum(traj.states.front())) << '\n';
    if (r.scalars.count("xsb")) out << "xsb " << format_double(r.scalars["xsb"]) << '\n';
  }
  echo_config(cfg, r);
  if (cfg.has("out")) write_report(cfg.text("out"), r);
  return kOk;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CliState state;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    state.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string("command line: ") + e.what());
  }
  return state.resolve();
}

void echo_config(const RunConfig& cfg, ExperimentReport& report) {
  report.parameters["config.subcommand"] = cfg.subcommand;
  for (const auto& [k, v] : cfg.values) report.parameters["config." + k] = v;
}

RunConfig config_from_echo(const std::map<std::string, std::string>& parameters) {
  const auto it = parameters.find("config.subcommand");
  if (it == parameters.end()) throw ConfigError("report carries no configuration echo");
  std::map<std::string, std::string> values;
  for (const auto& [k, v] : parameters) {
    if (k.rfind("config.", 0) == 0 && k != "config.subcommand") values[k.substr(7)] = v;
  }
  return resolve_config(it->second, {}, values);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "solve") return run_solve(cfg, out, err);
    if (cfg.subcommand == "gauge") return run_gauge(cfg, out);
    if (cfg.subcommand == "norms") return run_norms(cfg, out);
    ExperimentReport r = run_experiment(cfg);
    finish_report(cfg, r, out);
    return code_for_report(r);
  } catch (const ExperimentAbort& e) {
    ExperimentReport r = e.partial();
    finish_report(cfg, r, out);
    err << "numerical abort: " << e.what() << '\n';
    return kNumericalAbort;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const AliasingError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "numerical abort: " << e.what() << '\n';
    return kNumericalAbort;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::runtime_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kConfigError;
  }
}

int main_entry(int argc, char** argv) {
  CliState state;
  try {
    state.app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return state.app.exit(e);
  } catch (const CLI::ParseError& e) {
    state.app.exit(e);
    return kConfigError;
  }
  RunConfig cfg;
  try {
    cfg = state.resolve();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  try {
    return run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalAbort;
  }
}

}  // namespace mkdv::cli
