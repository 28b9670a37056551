#include "ffhk/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ffhk {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::vector<std::string>& known,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool found = false;
    for (const auto& k : known) {
      if (item.key() == k) {
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown field \"" + item.key() + "\" in " + where);
  }
}

template <typename T>
void read_field(const json& obj, const std::string& key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("field \"" + key + "\": " + e.what());
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(doc,
                 {"R", "epsilon", "S_coefficients", "grid", "quadrature", "truncation", "seed",
                  "output_dir"},
                 "config root");
  RunConfig cfg;
  read_field(doc, "R", cfg.R);
  read_field(doc, "epsilon", cfg.epsilon);
  if (doc.contains("S_coefficients")) {
    const json& coeffs = doc.at("S_coefficients");
    if (!coeffs.is_array()) throw ConfigError("S_coefficients must be an array of [re, im] pairs");
    for (const json& pair : coeffs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ConfigError("S_coefficients entries must be [re, im] number pairs");
      }
      cfg.S_coefficients.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (!g.is_object()) throw ConfigError("grid must be an object");
    reject_unknown(g, {"c_modulus_range", "c_arg_range", "n_c", "fiber_samples"}, "grid");
    read_field(g, "c_modulus_range", cfg.grid.c_modulus_range);
    read_field(g, "c_arg_range", cfg.grid.c_arg_range);
    read_field(g, "n_c", cfg.grid.n_c);
    read_field(g, "fiber_samples", cfg.grid.fiber_samples);
  }
  if (doc.contains("quadrature")) {
    const json& q = doc.at("quadrature");
    if (!q.is_object()) throw ConfigError("quadrature must be an object");
    reject_unknown(q, {"target_tol", "angular_margin_delta"}, "quadrature");
    read_field(q, "target_tol", cfg.quadrature.target_tol);
    read_field(q, "angular_margin_delta", cfg.quadrature.angular_margin_delta);
  }
  if (doc.contains("truncation")) {
    const json& t = doc.at("truncation");
    if (!t.is_object()) throw ConfigError("truncation must be an object");
    reject_unknown(t, {"series_tol", "max_terms"}, "truncation");
    read_field(t, "series_tol", cfg.truncation.series_tol);
    read_field(t, "max_terms", cfg.truncation.max_terms);
  }
  read_field(doc, "seed", cfg.seed);
  read_field(doc, "output_dir", cfg.output_dir);

  if (!(cfg.R > 0.0)) throw ConfigError("R must be positive");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw ConfigError("epsilon must be in (0, 1)");
  if (!(cfg.quadrature.target_tol > 0.0)) throw ConfigError("quadrature.target_tol must be positive");
  if (!(cfg.quadrature.angular_margin_delta > 0.0)) {
    throw ConfigError("quadrature.angular_margin_delta must be positive");
  }
  if (!(cfg.truncation.series_tol > 0.0)) throw ConfigError("truncation.series_tol must be positive");
  if (cfg.truncation.max_terms < 5) throw ConfigError("truncation.max_terms must be at least 5");
  if (cfg.grid.n_c < 1 || cfg.grid.fiber_samples < 1) {
    throw ConfigError("grid sizes must be positive");
  }
  if (!(cfg.grid.c_modulus_range[0] > 0.0)) {
    throw ConfigError("grid.c_modulus_range must exclude |c| = 0");
  }
  if (!(cfg.grid.c_modulus_range[1] >= cfg.grid.c_modulus_range[0])) {
    throw ConfigError("grid.c_modulus_range must be increasing");
  }
  if (!(cfg.grid.c_modulus_range[1] < cfg.epsilon)) {
    throw ConfigError("grid.c_modulus_range must stay inside the epsilon disc");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const RunConfig& config) {
  json coeffs = json::array();
  for (const Complex& a : config.S_coefficients) coeffs.push_back({a.real(), a.imag()});
  const json doc{
      {"R", config.R},
      {"epsilon", config.epsilon},
      {"S_coefficients", coeffs},
      {"grid",
       {{"c_modulus_range", config.grid.c_modulus_range},
        {"c_arg_range", config.grid.c_arg_range},
        {"n_c", config.grid.n_c},
        {"fiber_samples", config.grid.fiber_samples}}},
      {"quadrature",
       {{"target_tol", config.quadrature.target_tol},
        {"angular_margin_delta", config.quadrature.angular_margin_delta}}},
      {"truncation",
       {{"series_tol", config.truncation.series_tol},
        {"max_terms", config.truncation.max_terms}}},
      {"seed", config.seed},
      {"output_dir", config.output_dir},
  };
  return doc.dump(2);
}

}  // namespace ffhk
