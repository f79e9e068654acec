#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mkdv {

struct Verdict {
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  ///< e.g. "<=", ">=", "within"
  std::string note;
};

struct Series {
  std::string x_label = "x";
  std::string y_label = "y";
  std::vector<std::pair<double, double>> points;
};

/// Structured output of one experiment. Maps keep keys sorted, so the JSON
/// form is byte-stable. Provenance deliberately has no wall-clock time.
struct ExperimentReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::map<std::string, Series> series;
  std::map<std::string, double> scalars;
  std::map<std::string, Verdict> verdicts;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  bool all_pass() const;
  void add_verdict(const std::string& key, bool pass, double value, double threshold, std::string relation,
                   std::string note = {});
  Series& add_series(const std::string& key, std::string x_label, std::string y_label);
};

std::string report_to_json(const ExperimentReport& report);

/// Writes report.json and series/<name>.csv under `dir`.
void write_report(const std::filesystem::path& dir, const ExperimentReport& report);

}  // namespace mkdv
