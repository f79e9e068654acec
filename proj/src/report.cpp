#include "mkdv/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mkdv/serialization.hpp"

#ifndef MKDV_LAB_VERSION
#define MKDV_LAB_VERSION "dev"
#endif

namespace mkdv {
using nlohmann::ordered_json;

bool ExperimentReport::all_pass() const {
  for (const auto& [key, v] : verdicts)
    if (!v.pass) return false;
  return true;
}

void ExperimentReport::add_verdict(const std::string& key, bool pass, double value, double threshold,
                                   std::string relation, std::string note) {
  verdicts[key] = Verdict{pass, value, threshold, std::move(relation), std::move(note)};
  parameters["threshold." + key] = io::format_double(threshold);
}

Series& ExperimentReport::add_series(const std::string& key, std::string x_label, std::string y_label) {
  Series& s = series[key];
  s.x_label = std::move(x_label);
  s.y_label = std::move(y_label);
  s.points.clear();
  return s;
}

namespace {

// JSON cannot hold inf/nan; they are written as strings.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string report_to_json(const ExperimentReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["all_pass"] = r.all_pass();
  j["parameters"] = ordered_json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["scalars"] = ordered_json::object();
  for (const auto& [k, v] : r.scalars) j["scalars"][k] = number(v);
  j["verdicts"] = ordered_json::object();
  for (const auto& [k, v] : r.verdicts) {
    ordered_json e;
    e["pass"] = v.pass;
    e["value"] = number(v.value);
    e["relation"] = v.relation;
    e["threshold"] = number(v.threshold);
    if (!v.note.empty()) e["note"] = v.note;
    j["verdicts"][k] = e;
  }
  j["series"] = ordered_json::object();
  for (const auto& [k, s] : r.series) {
    j["series"][k] = {{"file", "series/" + k + ".csv"}, {"x", s.x_label}, {"y", s.y_label}, {"points", s.points.size()}};
  }
  j["notes"] = r.notes;
  j["provenance"] = {{"seed", r.seed}, {"version", MKDV_LAB_VERSION}};
  return j.dump(2) + "\n";
}

void write_report(const std::filesystem::path& dir, const ExperimentReport& report) {
  std::filesystem::create_directories(dir / "series");
  {
    std::ofstream out(dir / "report.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    out << report_to_json(report);
  }
  for (const auto& [k, s] : report.series) {
    std::ofstream out(dir / "series" / (k + ".csv"), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write series " + k);
    out << s.x_label << ',' << s.y_label << '\n';
    for (const auto& [x, y] : s.points) out << io::format_double(x) << ',' << io::format_double(y) << '\n';
  }
}

}  // namespace mkdv
