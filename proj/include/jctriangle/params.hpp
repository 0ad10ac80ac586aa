#pragma once

#include <string>
#include <vector>

namespace jct {

// All physical knobs of the three-cavity gain/loss ring, in units of the bare
// cavity frequency omega. Cavity 1 carries gain +i*gamma, cavity 3 the
// matched loss -i*gamma; theta is the hopping phase (flux phi = 3*theta).
struct ModelParams {
  double omega = 1.0;   // bare cavity frequency
  double delta = 20.0;  // atomic gap
  double g1 = 0.0;      // atom-cavity couplings
  double g2 = 0.0;
  double g3 = 0.0;
  double gamma = 0.0;   // gain/loss rate
  double j1 = 0.0;      // hopping amplitudes around the ring
  double j2 = 0.0;
  double j3 = 0.0;
  double theta = 0.0;   // hopping phase
};

// Throws std::invalid_argument on hard violations (negative rates, delta = 0).
// Returns human-readable warnings for soft ones: the dispersive reduction
// needs g_n^2/delta small against omega, and the closed-form spectrum further
// assumes g1 = g3 and j1 = j2; neither is an error for the full 6x6 model.
std::vector<std::string> validate(const ModelParams& params);

// Field access by name ("omega", "delta", "g1".."g3", "gamma", "j1".."j3",
// "theta") for sweep axes and bindings; unknown names throw
// std::invalid_argument.
const std::vector<std::string>& param_names();
void set_param(ModelParams& params, const std::string& name, double value);
double get_param(const ModelParams& params, const std::string& name);

}  // namespace jct
