#pragma once

#include "ffhk/config.hpp"
#include "ffhk/report.hpp"

namespace ffhk::suites {

inline constexpr const char* kVersion = "0.1.0";

/// Local-model and holomorphic-structure identity suite.
VerificationReport run_check_model(const RunConfig& config);

/// Semi-flat form/metric suite; exports semiflat_grid.tsv.
VerificationReport run_semiflat(const RunConfig& config);

/// Ooguri-Vafa potential suite; exports ov_grid.tsv.
VerificationReport run_ov(const RunConfig& config);

/// Twistor-family suite; exports gmn_grid.tsv.
VerificationReport run_gmn(const RunConfig& config);

/// Every suite in order, one combined report.
VerificationReport run_all(const RunConfig& config);

}  // namespace ffhk::suites
