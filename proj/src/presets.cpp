#include "jctriangle/presets.hpp"

#include <cmath>

#include "jctriangle/errors.hpp"

namespace jct {

namespace {

ModelParams ring_base(double delta, double g, double j) {
  ModelParams m;
  m.omega = 1.0;
  m.delta = delta;
  m.g1 = m.g2 = m.g3 = g;
  m.j1 = m.j2 = m.j3 = j;
  return m;
}

RunConfig triple_point_slice() {
  // gamma scan through the triple coalescence of the symmetric ring
  RunConfig cfg;
  cfg.subcommand = "slice";
  cfg.model = ring_base(50.0, 0.3, 0.01);
  cfg.model.theta = M_PI / 6.0;
  cfg.model.gamma = std::sqrt(3.0) * 0.01;  // the coalescence strength itself
  cfg.axis1 = AxisSpec{"gamma", 0.0, 0.03, 301, false};
  return cfg;
}

RunConfig quench_base(double theta, double gamma_i, double gamma_f) {
  RunConfig cfg;
  cfg.subcommand = "quench";
  cfg.model = ring_base(50.0, 0.3, 0.01);
  cfg.model.theta = theta;
  cfg.model.gamma = gamma_i;
  cfg.quench.gamma_initial = gamma_i;
  cfg.quench.gamma_final = gamma_f;
  cfg.quench.theta_initial = theta;
  cfg.quench.theta_final = theta;
  cfg.quench.t_max = 0.0;  // resolved to 20/j1 at finalize
  cfg.quench.samples = 2048;
  return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig1b", "fig2", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "fig5d"};
}

RunConfig preset_config(const std::string& name) {
  if (name == "fig1b") {
    // critical-phase surface over coupling ratios
    RunConfig cfg;
    cfg.subcommand = "surface";
    cfg.model = ring_base(20.0, 0.3, 0.01);
    cfg.surface = SurfaceSpec{0.25, 2.0, 50, 0.25, 2.0, 50};
    return cfg;
  }
  if (name == "fig2") return triple_point_slice();
  if (name == "fig3") {
    // eigenvector survival under gamma -> gamma + eps, detuned couplings
    RunConfig cfg;
    cfg.subcommand = "fidelity";
    cfg.model = ring_base(20.0, 0.3, 0.01);
    cfg.model.g1 = cfg.model.g3 = 0.1;
    cfg.theta_critical = true;
    cfg.fidelity_epsilon = 5e-5;
    cfg.axis1 = AxisSpec{"gamma", 0.0, 0.03, 601, false};  // step == epsilon
    return cfg;
  }
  if (name == "fig4") {
    // response ladders at the triple and pairwise coalescences
    RunConfig cfg = triple_point_slice();
    cfg.subcommand = "perturb";
    cfg.axis1 = AxisSpec{};

    PerturbScenario gain;
    gain.name = "triple_gain";
    gain.ep_order = 3;
    gain.site = 1;
    gain.eps_lo = 1e-9;
    gain.eps_hi = 1e-5;
    gain.eps_count = 17;
    gain.theta_critical = true;

    PerturbScenario neutral = gain;
    neutral.name = "triple_neutral";
    neutral.site = 2;

    PerturbScenario pairwise;
    pairwise.name = "pair_gain";
    pairwise.ep_order = 2;
    pairwise.site = 1;
    pairwise.eps_lo = 1e-8;
    pairwise.eps_hi = 1e-4;
    pairwise.eps_count = 17;
    pairwise.theta = M_PI / 4.0;

    cfg.perturb = {gain, neutral, pairwise};
    return cfg;
  }
  if (name == "fig5a") return quench_base(M_PI / 6.0, 0.006, 0.018);
  if (name == "fig5b") return quench_base(M_PI / 4.0, 0.001, 0.010);
  if (name == "fig5c") return quench_base(M_PI / 6.0, 0.018, 0.006);
  if (name == "fig5d") return quench_base(M_PI / 4.0, 0.010, 0.001);
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace jct
