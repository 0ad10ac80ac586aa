#include "jctriangle/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jct {

std::vector<std::string> validate(const ModelParams& p) {
  if (!(p.omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  if (!(p.delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (p.gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (p.j1 < 0.0 || p.j2 < 0.0 || p.j3 < 0.0)
    throw std::invalid_argument("hopping strengths must be >= 0");
  if (!std::isfinite(p.omega) || !std::isfinite(p.delta) || !std::isfinite(p.g1) ||
      !std::isfinite(p.g2) || !std::isfinite(p.g3) || !std::isfinite(p.gamma) ||
      !std::isfinite(p.j1) || !std::isfinite(p.j2) || !std::isfinite(p.j3) ||
      !std::isfinite(p.theta))
    throw std::invalid_argument("parameters must be finite");

  std::vector<std::string> warnings;
  const double gs[] = {p.g1, p.g2, p.g3};
  for (int n = 0; n < 3; ++n) {
    if (gs[n] * gs[n] / p.delta >= p.omega) {
      std::ostringstream os;
      os << "g" << (n + 1) << "^2/delta = " << gs[n] * gs[n] / p.delta
         << " is not small against omega; the dispersive reduction is unreliable";
      warnings.push_back(os.str());
    }
  }
  if (p.g1 != p.g3)
    warnings.push_back("g1 != g3: closed-form spectrum unavailable (6x6 model still valid)");
  if (p.j1 != p.j2)
    warnings.push_back("j1 != j2: closed-form spectrum unavailable (6x6 model still valid)");
  return warnings;
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = {"omega", "delta", "g1", "g2", "g3",
                                                 "gamma", "j1",    "j2", "j3", "theta"};
  return names;
}

namespace {
double* field_of(ModelParams& p, const std::string& name) {
  if (name == "omega") return &p.omega;
  if (name == "delta") return &p.delta;
  if (name == "g1") return &p.g1;
  if (name == "g2") return &p.g2;
  if (name == "g3") return &p.g3;
  if (name == "gamma") return &p.gamma;
  if (name == "j1") return &p.j1;
  if (name == "j2") return &p.j2;
  if (name == "j3") return &p.j3;
  if (name == "theta") return &p.theta;
  return nullptr;
}
}  // namespace

void set_param(ModelParams& params, const std::string& name, double value) {
  double* f = field_of(params, name);
  if (!f) throw std::invalid_argument("'" + name + "' is not a model parameter");
  *f = value;
}

double get_param(const ModelParams& params, const std::string& name) {
  double* f = field_of(const_cast<ModelParams&>(params), name);
  if (!f) throw std::invalid_argument("'" + name + "' is not a model parameter");
  return *f;
}

}  // namespace jct
