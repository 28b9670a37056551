#pragma once

#include <string>
#include <vector>

namespace ffhk {

struct CheckRecord {
  std::string name;
  int grid_size = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_time_s = 0.0;
  std::string note;  ///< optional detail (e.g. expected failure mode)
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::string config_echo;  ///< canonical JSON of the driving config
  std::string version;

  bool all_passed() const;
  /// Record a residual-style check.
  void add(const std::string& name, int grid_size, double max_residual, double tolerance,
           double wall_time_s, const std::string& note = "");
  /// Record a boolean check (residual reported as 0 or 1).
  void add_flag(const std::string& name, bool ok, double wall_time_s,
                const std::string& note = "");
};

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace ffhk
