#include "mkdv/serialization.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "mkdv/errors.hpp"

namespace mkdv::io {
namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& field, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + field + "' in " + context);
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FourierState from_triples(int cap, double time, const std::vector<std::tuple<int, double, double>>& rows) {
  FourierState state(cap, time);
  for (const auto& [n, re, im] : rows) {
    if (n < -cap || n > cap) throw ConfigError("mode " + std::to_string(n) + " outside the mode cap");
    state[n] = cplx{re, im};
  }
  return state;
}

}  // namespace

void write_state_csv(std::ostream& out, const FourierState& state) {
  out << "# time=" << format_double(state.time()) << '\n' << "n,re,im\n";
  for (int n = -state.mode_cap(); n <= state.mode_cap(); ++n) {
    out << n << ',' << format_double(state[n].real()) << ',' << format_double(state[n].imag()) << '\n';
  }
}

FourierState read_state_csv(std::istream& in) {
  std::string line;
  double time = 0.0;
  bool header = false;
  std::vector<std::tuple<int, double, double>> rows;
  int cap = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# time=", 0) == 0) time = parse_double(line.substr(7), "state CSV time");
      continue;
    }
    if (!header) {
      if (line != "n,re,im") throw ConfigError("state CSV must start with header n,re,im");
      header = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 3) throw ConfigError("state CSV row needs 3 columns: " + line);
    const int n = static_cast<int>(parse_double(cells[0], "state CSV"));
    rows.emplace_back(n, parse_double(cells[1], "state CSV"), parse_double(cells[2], "state CSV"));
    cap = std::max(cap, std::abs(n));
  }
  if (!header) throw ConfigError("empty state CSV");
  return from_triples(cap, time, rows);
}

std::string state_to_json(const FourierState& state) {
  // Built by hand so every double keeps 17 significant digits.
  std::ostringstream out;
  out << "{\"mode_cap\": " << state.mode_cap() << ", \"time\": " << format_double(state.time())
      << ", \"coeffs\": [";
  for (int n = -state.mode_cap(); n <= state.mode_cap(); ++n) {
    if (n != -state.mode_cap()) out << ", ";
    out << '[' << n << ", " << format_double(state[n].real()) << ", " << format_double(state[n].imag()) << ']';
  }
  out << "]}\n";
  return out.str();
}

FourierState state_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid state JSON: ") + e.what());
  }
  if (!j.contains("mode_cap") || !j.contains("coeffs")) throw ConfigError("state JSON needs mode_cap and coeffs");
  const int cap = j.at("mode_cap").get<int>();
  if (cap < 0) throw ConfigError("mode_cap must be non-negative");
  const double time = j.value("time", 0.0);
  std::vector<std::tuple<int, double, double>> rows;
  for (const auto& row : j.at("coeffs")) {
    if (!row.is_array() || row.size() != 3) throw ConfigError("coeff entries must be [n, re, im]");
    rows.emplace_back(row[0].get<int>(), row[1].get<double>(), row[2].get<double>());
  }
  return from_triples(cap, time, rows);
}

void save_state(const fs::path& path, const FourierState& state) {
  if (path.extension() == ".json") {
    write_text(path, state_to_json(state));
    return;
  }
  std::ostringstream ss;
  write_state_csv(ss, state);
  write_text(path, ss.str());
}

FourierState load_state(const fs::path& path) {
  const std::string text = read_text(path);
  if (path.extension() == ".json") return state_from_json(text);
  std::istringstream ss(text);
  return read_state_csv(ss);
}

void save_trajectory(const fs::path& dir, const Trajectory& traj) {
  fs::create_directories(dir / "states");
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    std::ostringstream name;
    name << std::setw(6) << std::setfill('0') << k << ".csv";
    save_state(dir / "states" / name.str(), traj.states[k]);
  }
  json gauges = json::array();
  for (const auto& g : traj.gauges) {
    gauges.push_back({{"gauge", std::string(to_string(g.spec.which))},
                      {"sign", g.spec.sign},
                      {"scalar", g.spec.scalar},
                      {"inverse", g.inverse}});
  }
  const double t0 = traj.states.empty() ? 0.0 : traj.states.front().time();
  json manifest = {{"dt", traj.sample_dt},
                   {"step_dt", traj.step_dt},
                   {"T", traj.final_time() - t0},
                   {"t0", t0},
                   {"M", traj.mode_cap},
                   {"equation", std::string(to_string(traj.equation.variant))},
                   {"sign", traj.equation.sign},
                   {"grid_size", traj.grid_size},
                   {"samples", traj.states.size()},
                   {"gauges", gauges},
                   {"warnings", traj.warnings}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

Trajectory load_trajectory(const fs::path& dir) {
  json m;
  try {
    m = json::parse(read_text(dir / "manifest.json"));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid trajectory manifest: ") + e.what());
  }
  Trajectory traj;
  const auto variant = parse_variant(m.at("equation").get<std::string>());
  if (!variant) throw ConfigError("unknown equation in manifest");
  traj.equation = {*variant, m.at("sign").get<int>()};
  traj.sample_dt = m.at("dt").get<double>();
  traj.step_dt = m.value("step_dt", traj.sample_dt);
  traj.mode_cap = m.at("M").get<int>();
  traj.grid_size = m.value("grid_size", std::size_t{0});
  for (const auto& g : m.value("gauges", json::array())) {
    const auto kind = parse_gauge(g.at("gauge").get<std::string>());
    if (!kind) throw ConfigError("unknown gauge in manifest");
    traj.gauges.push_back({GaugeSpec{*kind, g.at("sign").get<int>(), g.at("scalar").get<double>()},
                           g.value("inverse", false)});
  }
  traj.warnings = m.value("warnings", std::vector<std::string>{});
  const std::size_t count = m.at("samples").get<std::size_t>();
  for (std::size_t k = 0; k < count; ++k) {
    std::ostringstream name;
    name << std::setw(6) << std::setfill('0') << k << ".csv";
    traj.states.push_back(with_mode_cap(load_state(dir / "states" / name.str()), traj.mode_cap));
  }
  return traj;
}

void write_momentum_series(const fs::path& csv_path, const MomentumSeries& series) {
  std::ostringstream csv;
  csv << "N,P_N\n";
  for (const auto& [n, p] : series.truncations) csv << n << ',' << format_double(p) << '\n';
  write_text(csv_path, csv.str());
  json side = {{"verdict", to_string(series.verdict)}, {"limit", series.limit}, {"tol", series.tol}};
  fs::path json_path = csv_path;
  json_path.replace_extension(".json");
  write_text(json_path, side.dump(2) + "\n");
}

void write_j1_sweep(std::ostream& out, const std::vector<J1Sample>& samples) {
  out << "n,K,value\n";
  for (const auto& s : samples) out << s.n << ',' << s.radius << ',' << format_double(s.value) << '\n';
}

}  // namespace mkdv::io
