#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffhk/invariant.hpp"

namespace ffhk {

/// Invalid or ill-formed run configuration (exit code 2 at the CLI).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct GridSpec {
  std::array<double, 2> c_modulus_range{0.1, 0.4};
  std::array<double, 2> c_arg_range{-3.0, 3.0};
  int n_c = 20;
  int fiber_samples = 4;
};

struct QuadratureSpec {
  double target_tol = 1e-10;
  double angular_margin_delta = 0.2;
};

struct TruncationSpec {
  double series_tol = 1e-16;
  int max_terms = 500;
};

struct RunConfig {
  double R = 1.0;
  double epsilon = 0.5;
  std::vector<Complex> S_coefficients;
  GridSpec grid;
  QuadratureSpec quadrature;
  TruncationSpec truncation;
  std::uint64_t seed = 7052026;
  std::string output_dir = "out";

  HarmonicInvariant invariant() const { return HarmonicInvariant(S_coefficients, epsilon); }
  ModelParams params() const { return {R, epsilon}; }
};

/// Parse a JSON config document. Unknown fields are errors.
RunConfig parse_config(const std::string& json_text);

/// Read and parse a config file; throws ConfigError on I/O failure too.
RunConfig load_config(const std::string& path);

/// Re-serialize (canonical field order) for report echoes.
std::string config_to_json(const RunConfig& config);

}  // namespace ffhk
