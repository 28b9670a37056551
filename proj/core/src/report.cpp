#include "ffhk/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ffhk {

bool VerificationReport::all_passed() const {
  for (const CheckRecord& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerificationReport::add(const std::string& name, int grid_size, double max_residual,
                             double tolerance, double wall_time_s, const std::string& note) {
  checks.push_back(
      {name, grid_size, max_residual, tolerance, max_residual < tolerance, wall_time_s, note});
}

void VerificationReport::add_flag(const std::string& name, bool ok, double wall_time_s,
                                  const std::string& note) {
  checks.push_back({name, 1, ok ? 0.0 : 1.0, 1.0, ok, wall_time_s, note});
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"grid_size", c.grid_size},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed},
                      {"wall_time_s", c.wall_time_s},
                      {"note", c.note}});
  }
  const nlohmann::json doc{{"suite", report.suite},
                           {"version", report.version},
                           {"all_passed", report.all_passed()},
                           {"checks", checks},
                           {"config", nlohmann::json::parse(report.config_echo)}};
  return doc.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << "\n";
  for (const CheckRecord& c : report.checks) {
    out << (c.passed ? "  PASS  " : "  FAIL  ") << std::left << std::setw(44) << c.name
        << std::scientific << std::setprecision(3) << " residual " << c.max_residual << " (tol "
        << c.tolerance << ", n=" << c.grid_size << ", " << std::fixed << std::setprecision(2)
        << c.wall_time_s << "s)";
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
  out << (report.all_passed() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace ffhk
