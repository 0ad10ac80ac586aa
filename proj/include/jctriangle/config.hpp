#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jctriangle/params.hpp"
#include "jctriangle/tolerances.hpp"

namespace jct {

// One sweep axis. The parameter name must be a ModelParams field.
struct AxisSpec {
  std::string parameter;
  double lo = 0.0;
  double hi = 0.0;
  int count = 2;       // >= 2
  bool log = false;    // log-spaced when true
  std::vector<double> values() const;
};

struct PerturbScenario {
  std::string name;
  int ep_order = 3;    // 3 or 2
  int site = 1;        // 1..3
  double eps_lo = 1e-9;
  double eps_hi = 1e-5;
  int eps_count = 17;
  std::optional<double> theta;   // defaults to the model theta
  std::optional<double> gamma;   // defaults to the critical strength for ep_order
  bool theta_critical = false;   // resolve theta to the triple-point phase
};

struct QuenchSpec {
  double gamma_initial = 0.0;
  double gamma_final = 0.0;
  std::optional<double> theta_initial;  // defaults to the model theta
  std::optional<double> theta_final;
  double t_max = 0.0;   // <= 0 means "20 / J1" at finalize
  int samples = 2048;
};

struct SurfaceSpec {
  double g_ratio_lo = 0.25, g_ratio_hi = 2.0;
  int g_ratio_count = 50;
  double j_ratio_lo = 0.25, j_ratio_hi = 2.0;
  int j_ratio_count = 50;
};

struct ToleranceOverrides {
  double classify = kClassifyTol;
  double defectiveness = kDefectivenessTol;
};

struct RunConfig {
  std::string subcommand;
  std::string preset;          // name the config was seeded from, if any
  ModelParams model;
  bool theta_critical = false; // resolve model.theta at finalize
  AxisSpec axis1;              // slice/fidelity: the gamma axis; spectrum: axis 1
  std::optional<AxisSpec> axis2;  // spectrum only
  SurfaceSpec surface;
  std::vector<PerturbScenario> perturb;
  QuenchSpec quench;
  double fidelity_epsilon = 5e-5;
  ToleranceOverrides tolerances;
  std::string out_dir = ".";
  std::string basename;        // file stem; defaults to the subcommand
  bool write_json = true;
  int threads = 1;

  // Canonical text form: every effective key=value, fixed order. Hashing this
  // is what makes equal configs produce byte-identical outputs.
  std::string canonical() const;
};

// Sectioned key=value text -> ordered (section.key, value) pairs. '#' and ';'
// start comments; section headers are [name] or [name.sub]. Throws
// ConfigError on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_ini(const std::string& text);

// Apply file values over a base config (strict: unknown keys are errors).
void apply_ini(RunConfig& cfg, const std::map<std::string, std::string>& kv);

// Resolve deferred values (theta_critical, scenario defaults, quench window,
// basename) and validate; throws ConfigError / OutOfReachError.
void finalize(RunConfig& cfg);

RunConfig load_config(const std::string& subcommand, const std::string& preset_name,
                      const std::string& config_path);  // either may be empty

}  // namespace jct
