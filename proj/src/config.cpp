#include "jctriangle/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "jctriangle/ep.hpp"
#include "jctriangle/errors.hpp"
#include "jctriangle/presets.hpp"
#include "jctriangle/table.hpp"

namespace jct {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

const std::set<std::string>& model_fields() {
  static const std::set<std::string> fields = {"omega", "delta", "g1", "g2", "g3",
                                               "gamma", "j1",    "j2", "j3", "theta"};
  return fields;
}

void set_model_field(ModelParams& m, const std::string& name, double v) {
  if (name == "omega") m.omega = v;
  else if (name == "delta") m.delta = v;
  else if (name == "g1") m.g1 = v;
  else if (name == "g2") m.g2 = v;
  else if (name == "g3") m.g3 = v;
  else if (name == "gamma") m.gamma = v;
  else if (name == "j1") m.j1 = v;
  else if (name == "j2") m.j2 = v;
  else if (name == "j3") m.j3 = v;
  else if (name == "theta") m.theta = v;
  else throw ConfigError("'" + name + "' is not a model parameter");
}

struct AxisDraft {
  std::optional<std::string> parameter;
  std::optional<double> lo, hi;
  std::optional<int> count;
  std::optional<bool> log;
  bool touched() const { return parameter || lo || hi || count || log; }
  void fold_into(AxisSpec& axis, const std::string& which) const {
    if (parameter) axis.parameter = *parameter;
    if (lo) axis.lo = *lo;
    if (hi) axis.hi = *hi;
    if (count) axis.count = *count;
    if (log) axis.log = *log;
    if (axis.parameter.empty())
      throw ConfigError("sweep " + which + " needs a parameter name");
  }
};

}  // namespace

std::vector<double> AxisSpec::values() const {
  if (count < 2) throw ConfigError("sweep axis '" + parameter + "' needs count >= 2");
  std::vector<double> v(static_cast<std::size_t>(count));
  if (log) {
    if (!(lo > 0.0) || !(hi > 0.0))
      throw ConfigError("log-scaled axis '" + parameter + "' needs positive bounds");
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
      v[static_cast<std::size_t>(i)] =
          std::exp(llo + (lhi - llo) * (static_cast<double>(i) / (count - 1)));
    v.front() = lo;
    v.back() = hi;
  } else {
    for (int i = 0; i < count; ++i)
      v[static_cast<std::size_t>(i)] = lo + (hi - lo) * (static_cast<double>(i) / (count - 1));
  }
  return v;
}

std::map<std::string, std::string> parse_ini(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!section.empty()) key = section + "." + key;
    if (!kv.emplace(key, value).second)
      throw ConfigError("duplicate key '" + key + "'");
  }
  return kv;
}

void apply_ini(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  AxisDraft a1, a2;
  std::map<std::string, PerturbScenario> scenario_drafts;
  std::vector<std::string> scenario_order;
  bool flat_perturb = false;

  auto scenario_for = [&](const std::string& name) -> PerturbScenario& {
    auto it = scenario_drafts.find(name);
    if (it == scenario_drafts.end()) {
      PerturbScenario s;
      s.name = name;
      it = scenario_drafts.emplace(name, s).first;
    }
    return it->second;
  };

  auto apply_scenario_key = [&](PerturbScenario& s, const std::string& field,
                                const std::string& key, const std::string& value) {
    if (field == "kind") {
      if (value == "ep3") s.ep_order = 3;
      else if (value == "ep2") s.ep_order = 2;
      else throw ConfigError("key '" + key + "': expected ep3 or ep2");
    } else if (field == "site") s.site = parse_int(key, value);
    else if (field == "eps_min") s.eps_lo = parse_double(key, value);
    else if (field == "eps_max") s.eps_hi = parse_double(key, value);
    else if (field == "eps_count") s.eps_count = parse_int(key, value);
    else if (field == "theta") s.theta = parse_double(key, value);
    else if (field == "gamma") s.gamma = parse_double(key, value);
    else if (field == "theta_critical") s.theta_critical = parse_bool(key, value);
    else throw ConfigError("unknown key '" + key + "'");
  };

  for (const auto& [key, value] : kv) {
    const std::size_t dot = key.find('.');
    const std::string section = dot == std::string::npos ? "" : key.substr(0, dot);
    const std::string rest = dot == std::string::npos ? key : key.substr(dot + 1);

    if (section == "run") {
      if (rest == "subcommand") cfg.subcommand = value;
      else if (rest == "preset") { /* consumed by load_config before overlay */ }
      else if (rest == "threads") cfg.threads = parse_int(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "model") {
      if (rest == "g") {
        const double v = parse_double(key, value);
        cfg.model.g1 = cfg.model.g2 = cfg.model.g3 = v;
      } else if (rest == "j") {
        const double v = parse_double(key, value);
        cfg.model.j1 = cfg.model.j2 = cfg.model.j3 = v;
      } else if (rest == "theta_critical") {
        cfg.theta_critical = parse_bool(key, value);
      } else if (model_fields().count(rest)) {
        set_model_field(cfg.model, rest, parse_double(key, value));
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } else if (section == "sweep") {
      if (rest == "parameter") a1.parameter = value;
      else if (rest == "min") a1.lo = parse_double(key, value);
      else if (rest == "max") a1.hi = parse_double(key, value);
      else if (rest == "count") a1.count = parse_int(key, value);
      else if (rest == "scale") {
        if (value == "log") a1.log = true;
        else if (value == "linear") a1.log = false;
        else throw ConfigError("key '" + key + "': expected linear or log");
      } else if (rest == "parameter2") a2.parameter = value;
      else if (rest == "min2") a2.lo = parse_double(key, value);
      else if (rest == "max2") a2.hi = parse_double(key, value);
      else if (rest == "count2") a2.count = parse_int(key, value);
      else if (rest == "scale2") {
        if (value == "log") a2.log = true;
        else if (value == "linear") a2.log = false;
        else throw ConfigError("key '" + key + "': expected linear or log");
      } else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "surface") {
      if (rest == "g_ratio_min") cfg.surface.g_ratio_lo = parse_double(key, value);
      else if (rest == "g_ratio_max") cfg.surface.g_ratio_hi = parse_double(key, value);
      else if (rest == "g_ratio_count") cfg.surface.g_ratio_count = parse_int(key, value);
      else if (rest == "j_ratio_min") cfg.surface.j_ratio_lo = parse_double(key, value);
      else if (rest == "j_ratio_max") cfg.surface.j_ratio_hi = parse_double(key, value);
      else if (rest == "j_ratio_count") cfg.surface.j_ratio_count = parse_int(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "fidelity") {
      if (rest == "epsilon") cfg.fidelity_epsilon = parse_double(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "quench") {
      if (rest == "gamma_initial") cfg.quench.gamma_initial = parse_double(key, value);
      else if (rest == "gamma_final") cfg.quench.gamma_final = parse_double(key, value);
      else if (rest == "theta_initial") cfg.quench.theta_initial = parse_double(key, value);
      else if (rest == "theta_final") cfg.quench.theta_final = parse_double(key, value);
      else if (rest == "t_max") cfg.quench.t_max = parse_double(key, value);
      else if (rest == "samples") cfg.quench.samples = parse_int(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "perturb") {
      const std::size_t dot2 = rest.find('.');
      if (dot2 == std::string::npos) {
        if (rest == "scenarios") {
          std::stringstream ss(value);
          std::string item;
          while (std::getline(ss, item, ',')) {
            const std::string name = trim(item);
            if (name.empty()) throw ConfigError("empty scenario name in '" + key + "'");
            scenario_order.push_back(name);
          }
        } else {
          flat_perturb = true;
          apply_scenario_key(scenario_for("main"), rest, key, value);
        }
      } else {
        const std::string name = rest.substr(0, dot2);
        apply_scenario_key(scenario_for(name), rest.substr(dot2 + 1), key, value);
      }
    } else if (section == "output") {
      if (rest == "dir") cfg.out_dir = value;
      else if (rest == "basename") cfg.basename = value;
      else if (rest == "json") cfg.write_json = parse_bool(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else if (section == "tolerances") {
      if (rest == "classify") cfg.tolerances.classify = parse_double(key, value);
      else if (rest == "defectiveness") cfg.tolerances.defectiveness = parse_double(key, value);
      else throw ConfigError("unknown key '" + key + "'");
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  if (a1.touched()) {
    AxisSpec axis = a1.parameter ? AxisSpec{} : cfg.axis1;
    a1.fold_into(axis, "axis");
    cfg.axis1 = axis;
  }
  if (a2.touched()) {
    AxisSpec axis = (a2.parameter && cfg.axis2) ? AxisSpec{} : cfg.axis2.value_or(AxisSpec{});
    a2.fold_into(axis, "axis 2");
    cfg.axis2 = axis;
  }

  if (flat_perturb && !scenario_order.empty())
    throw ConfigError("use either flat [perturb] keys or named [perturb.<name>] sections, not both");
  if (!scenario_drafts.empty() || !scenario_order.empty()) {
    std::vector<PerturbScenario> scenarios;
    if (flat_perturb) {
      scenarios.push_back(scenario_drafts.at("main"));
    } else {
      if (scenario_order.empty())
        throw ConfigError("named perturb scenarios need a 'scenarios = name, ...' list");
      std::set<std::string> seen;
      for (const auto& name : scenario_order) {
        if (!seen.insert(name).second)
          throw ConfigError("scenario '" + name + "' listed twice");
        auto it = scenario_drafts.find(name);
        if (it == scenario_drafts.end())
          throw ConfigError("scenario '" + name + "' listed but has no [perturb." + name +
                            "] section");
        scenarios.push_back(it->second);
      }
      for (const auto& [name, draft] : scenario_drafts)
        if (!seen.count(name))
          throw ConfigError("section [perturb." + name + "] is not in the scenarios list");
    }
    cfg.perturb = std::move(scenarios);  // config replaces any preset scenario set
  }
}

void finalize(RunConfig& cfg) {
  static const std::set<std::string> subcommands = {"spectrum", "slice",    "surface", "classify",
                                                    "perturb",  "fidelity", "quench"};
  if (!subcommands.count(cfg.subcommand))
    throw ConfigError(cfg.subcommand.empty() ? "no subcommand given"
                                             : "unknown subcommand '" + cfg.subcommand + "'");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");

  try {
    validate(cfg.model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }

  if (cfg.theta_critical) cfg.model.theta = critical_3el(cfg.model).theta;

  auto check_axis = [](const AxisSpec& axis, const std::string& which) {
    if (axis.parameter.empty()) throw ConfigError(which + ": sweep axis not configured");
    if (!model_fields().count(axis.parameter))
      throw ConfigError(which + ": '" + axis.parameter + "' is not a model parameter");
    if (axis.count < 2) throw ConfigError(which + ": sweep count must be >= 2");
    if (axis.log && (!(axis.lo > 0.0) || !(axis.hi > 0.0)))
      throw ConfigError(which + ": log axis needs positive bounds");
  };

  if (cfg.subcommand == "slice" || cfg.subcommand == "fidelity")
    check_axis(cfg.axis1, cfg.subcommand);
  if (cfg.subcommand == "fidelity" && cfg.axis1.parameter != "gamma")
    throw ConfigError("fidelity sweeps gamma; set sweep parameter = gamma");
  if (cfg.subcommand == "spectrum") {
    check_axis(cfg.axis1, "spectrum axis 1");
    if (!cfg.axis2) throw ConfigError("spectrum needs a second sweep axis");
    check_axis(*cfg.axis2, "spectrum axis 2");
  }

  if (cfg.subcommand == "surface") {
    const SurfaceSpec& s = cfg.surface;
    if (s.g_ratio_count < 2 || s.j_ratio_count < 2)
      throw ConfigError("surface grids need count >= 2");
    if (!(s.g_ratio_lo > 0.0) || !(s.j_ratio_lo > 0.0))
      throw ConfigError("surface ratios must be positive");
  }

  if (cfg.subcommand == "perturb") {
    if (cfg.perturb.empty()) throw ConfigError("perturb needs at least one scenario");
    for (auto& s : cfg.perturb) {
      if (s.ep_order != 2 && s.ep_order != 3)
        throw ConfigError("scenario '" + s.name + "': kind must be ep3 or ep2");
      if (s.site < 1 || s.site > 3)
        throw ConfigError("scenario '" + s.name + "': site must be 1, 2 or 3");
      if (!(s.eps_lo > 0.0) || !(s.eps_hi >= s.eps_lo))
        throw ConfigError("scenario '" + s.name + "': epsilon window must be positive ascending");
      if (s.eps_count < 8)
        throw ConfigError("scenario '" + s.name + "': need at least 8 epsilon samples for fits");
      if (s.theta_critical)
        s.theta = critical_3el(cfg.model).theta;
      else if (!s.theta)
        s.theta = cfg.model.theta;
      if (!s.gamma) {
        if (s.ep_order == 3)
          s.gamma = critical_3el(cfg.model).gamma;
        else
          s.gamma = gamma_2c(cfg.model.j1, cfg.model.j3, *s.theta);
      }
    }
  }

  if (cfg.subcommand == "quench") {
    if (cfg.quench.samples < 2) throw ConfigError("quench needs at least 2 time samples");
    if (!cfg.quench.theta_initial) cfg.quench.theta_initial = cfg.model.theta;
    if (!cfg.quench.theta_final) cfg.quench.theta_final = cfg.model.theta;
    if (cfg.quench.t_max <= 0.0) {
      if (!(cfg.model.j1 > 0.0))
        throw ConfigError("quench window defaults to 20/j1; set t_max or a positive j1");
      cfg.quench.t_max = 20.0 / cfg.model.j1;
    }
    if (cfg.quench.gamma_initial < 0.0 || cfg.quench.gamma_final < 0.0)
      throw ConfigError("quench gains must be >= 0");
  }

  if (!(cfg.fidelity_epsilon > 0.0) && cfg.subcommand == "fidelity")
    throw ConfigError("fidelity epsilon must be positive");
  if (!(cfg.tolerances.classify > 0.0) || !(cfg.tolerances.defectiveness > 0.0))
    throw ConfigError("tolerances must be positive");

  if (cfg.basename.empty()) cfg.basename = cfg.subcommand;
  if (cfg.out_dir.empty()) cfg.out_dir = ".";
}

std::string RunConfig::canonical() const {
  // threads and out_dir are deliberately absent: neither may influence bytes
  std::ostringstream os;
  auto put = [&os](const std::string& key, const std::string& value) {
    os << key << '=' << value << '\n';
  };
  auto putd = [&put](const std::string& key, double v) { put(key, format_double(v)); };

  put("subcommand", subcommand);
  put("preset", preset);
  putd("model.omega", model.omega);
  putd("model.delta", model.delta);
  putd("model.g1", model.g1);
  putd("model.g2", model.g2);
  putd("model.g3", model.g3);
  putd("model.gamma", model.gamma);
  putd("model.j1", model.j1);
  putd("model.j2", model.j2);
  putd("model.j3", model.j3);
  putd("model.theta", model.theta);
  put("model.theta_critical", theta_critical ? "true" : "false");

  if (subcommand == "slice" || subcommand == "fidelity" || subcommand == "spectrum") {
    put("sweep.parameter", axis1.parameter);
    putd("sweep.min", axis1.lo);
    putd("sweep.max", axis1.hi);
    put("sweep.count", std::to_string(axis1.count));
    put("sweep.scale", axis1.log ? "log" : "linear");
  }
  if (subcommand == "spectrum" && axis2) {
    put("sweep.parameter2", axis2->parameter);
    putd("sweep.min2", axis2->lo);
    putd("sweep.max2", axis2->hi);
    put("sweep.count2", std::to_string(axis2->count));
    put("sweep.scale2", axis2->log ? "log" : "linear");
  }
  if (subcommand == "surface") {
    putd("surface.g_ratio_min", surface.g_ratio_lo);
    putd("surface.g_ratio_max", surface.g_ratio_hi);
    put("surface.g_ratio_count", std::to_string(surface.g_ratio_count));
    putd("surface.j_ratio_min", surface.j_ratio_lo);
    putd("surface.j_ratio_max", surface.j_ratio_hi);
    put("surface.j_ratio_count", std::to_string(surface.j_ratio_count));
  }
  if (subcommand == "perturb") {
    for (std::size_t i = 0; i < perturb.size(); ++i) {
      const auto& s = perturb[i];
      const std::string pre = "perturb." + std::to_string(i) + ".";
      put(pre + "name", s.name);
      put(pre + "kind", s.ep_order == 3 ? "ep3" : "ep2");
      put(pre + "site", std::to_string(s.site));
      putd(pre + "eps_min", s.eps_lo);
      putd(pre + "eps_max", s.eps_hi);
      put(pre + "eps_count", std::to_string(s.eps_count));
      if (s.theta) putd(pre + "theta", *s.theta);
      if (s.gamma) putd(pre + "gamma", *s.gamma);
    }
  }
  if (subcommand == "fidelity") putd("fidelity.epsilon", fidelity_epsilon);
  if (subcommand == "quench") {
    putd("quench.gamma_initial", quench.gamma_initial);
    putd("quench.gamma_final", quench.gamma_final);
    if (quench.theta_initial) putd("quench.theta_initial", *quench.theta_initial);
    if (quench.theta_final) putd("quench.theta_final", *quench.theta_final);
    putd("quench.t_max", quench.t_max);
    put("quench.samples", std::to_string(quench.samples));
  }
  putd("tolerances.classify", tolerances.classify);
  putd("tolerances.defectiveness", tolerances.defectiveness);
  put("output.basename", basename);
  put("output.json", write_json ? "true" : "false");
  return os.str();
}

RunConfig load_config(const std::string& subcommand, const std::string& preset_name,
                      const std::string& config_path) {
  std::map<std::string, std::string> kv;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    kv = parse_ini(ss.str());
  }

  std::string preset = preset_name;
  if (preset.empty()) {
    auto it = kv.find("run.preset");
    if (it != kv.end()) preset = it->second;
  }

  RunConfig cfg;
  if (!preset.empty()) {
    cfg = preset_config(preset);  // throws ConfigError when unknown
    cfg.preset = preset;
  }
  apply_ini(cfg, kv);
  if (!subcommand.empty()) cfg.subcommand = subcommand;
  return cfg;
}

}  // namespace jct
