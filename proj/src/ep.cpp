#include "jctriangle/ep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jctriangle/errors.hpp"
#include "jctriangle/spectral.hpp"

namespace jct {

std::string to_string(EpKind kind) {
  switch (kind) {
    case EpKind::PTSymmetric: return "pt_symmetric";
    case EpKind::PTBroken: return "pt_broken";
    case EpKind::EP2: return "ep2";
    case EpKind::EP3: return "ep3";
  }
  return "unknown";
}

double gamma_2c(double j1, double j3, double theta) {
  const double mod = j1 * j1 * j3 * std::abs(std::cos(3.0 * theta));
  const double radicand = 2.0 * j1 * j1 + j3 * j3 - 3.0 * std::cbrt(mod * mod);
  if (radicand < 0.0)
    throw OutOfReachError("no real pairwise-coalescence strength at these couplings");
  return std::sqrt(radicand);
}

double gamma_2c(const ModelParams& params) {
  if (params.g1 != params.g2)
    throw std::invalid_argument("pairwise critical strength assumes g1 == g2");
  return gamma_2c(params.j1, params.j3, params.theta);
}

CriticalPoint critical_3el(double g1, double g2, double delta, double j1, double j3) {
  if (!(j1 > 0.0) || !(j3 > 0.0))
    throw std::invalid_argument("triple coalescence needs positive hoppings");
  if (delta == 0.0) throw std::invalid_argument("delta must be nonzero");

  const double dg = g1 * g1 - g2 * g2;
  const double arg =
      dg * (4.0 * dg * dg / (delta * delta) + 27.0 * j1 * j1) / (27.0 * delta * j1 * j1 * j3);
  if (std::abs(arg) > 1.0)
    throw OutOfReachError("triple coalescence out of reach: |cos 3theta| argument exceeds 1");

  CriticalPoint cp;
  cp.cos3theta_arg = arg;
  cp.theta = std::acos(arg) / 3.0;  // principal branch: theta in [0, pi/3]
  cp.gamma = std::sqrt(2.0 * j1 * j1 + j3 * j3 + dg * dg / (3.0 * delta * delta));
  return cp;
}

CriticalPoint critical_3el(const ModelParams& params) {
  return critical_3el(params.g1, params.g2, params.delta, params.j1, params.j3);
}

double critical_flux(double theta_c, int n) {
  return 3.0 * theta_c + n * M_PI;
}

EpClassification classify(const ModelParams& params, double tol) {
  const CardanoInputs c = cardano_pq(params);
  double s = std::max({params.j1 * params.j1, params.j3 * params.j3,
                       params.gamma * params.gamma});
  if (s == 0.0) s = 1.0;  // decoupled Hermitian point: p = q = 0 anyway

  EpClassification out;
  out.location = params;
  out.p_residual = std::abs(c.p) / s;
  out.q_residual = std::abs(c.q) / s;
  out.disc_residual = std::abs(c.discriminant) / (s * s * s);

  if (out.p_residual <= tol && out.q_residual <= tol)
    out.kind = EpKind::EP3;  // wins ties: p = q = 0 implies the discriminant condition
  else if (out.disc_residual <= tol)
    out.kind = EpKind::EP2;
  else
    out.kind = c.discriminant > 0.0 ? EpKind::PTBroken : EpKind::PTSymmetric;
  return out;
}

std::vector<double> GridSpec::values() const {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
  return v;
}

CriticalSet sweep_surface(const GridSpec& g_ratio, const GridSpec& j_ratio,
                          const ModelParams& fixed) {
  CriticalSet set;
  set.g_ratio = g_ratio.values();
  set.j_ratio = j_ratio.values();
  for (double r : set.g_ratio)
    if (!(r > 0.0)) throw std::invalid_argument("coupling ratios must be positive");
  for (double r : set.j_ratio)
    if (!(r > 0.0)) throw std::invalid_argument("coupling ratios must be positive");

  const std::size_t total = set.g_ratio.size() * set.j_ratio.size();
  set.theta_c.assign(total, std::nullopt);
  set.gamma_c.assign(total, std::nullopt);

  for (std::size_t i = 0; i < set.g_ratio.size(); ++i) {
    for (std::size_t j = 0; j < set.j_ratio.size(); ++j) {
      const double g1 = set.g_ratio[i] * fixed.g2;
      const double j1 = set.j_ratio[j] * fixed.j3;
      try {
        const CriticalPoint cp = critical_3el(g1, fixed.g2, fixed.delta, j1, fixed.j3);
        set.theta_c[set.index(i, j)] = cp.theta;
        set.gamma_c[set.index(i, j)] = cp.gamma;
      } catch (const OutOfReachError&) {
        // masked node
      }
    }
  }
  return set;
}

}  // namespace jct
