#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jctriangle/params.hpp"
#include "jctriangle/tolerances.hpp"

namespace jct {

enum class EpKind { PTSymmetric, PTBroken, EP2, EP3 };

std::string to_string(EpKind kind);

struct EpClassification {
  EpKind kind;
  double p_residual;     // |p| / s with s = max(J1^2, J3^2, gamma^2)
  double q_residual;     // |q| / s
  double disc_residual;  // |q^2 + p^3| / s^3
  ModelParams location;
};

// Gain/loss strength at which a pair of branches coalesces:
//   gamma_2c^2 = 2 J1^2 + J3^2 - 3 (J1^2 J3 |cos 3theta|)^(2/3).
// Requires g1 == g2 (equal detuning pull on cavities 1 and 2); throws
// OutOfReachError when the radicand goes negative. Positive root returned.
double gamma_2c(const ModelParams& params);
double gamma_2c(double j1, double j3, double theta);

struct CriticalPoint {
  double theta;          // phase where all three branches can merge, in [0, pi/3]
  double gamma;          // matching gain/loss strength (positive root)
  double cos3theta_arg;  // argument handed to arccos, kept for diagnostics
};

// Location of the triple coalescence:
//   cos(3 theta_c) = (g1^2-g2^2) [4 (g1^2-g2^2)^2 / D^2 + 27 J1^2] / (27 D J1^2 J3)
//   gamma_c^2      = 2 J1^2 + J3^2 + (g1^2-g2^2)^2 / (3 D^2)
// Throws OutOfReachError when |cos(3 theta_c)| > 1.
CriticalPoint critical_3el(const ModelParams& params);
CriticalPoint critical_3el(double g1, double g2, double delta, double j1, double j3);

// The full flux family for a critical phase: 3*theta + n*pi.
double critical_flux(double theta_c, int n = 0);

// Decision tree on the scaled residuals: both |p| and |q| small -> EP3;
// else discriminant small -> EP2; else the discriminant sign separates the
// broken (positive) from the symmetric (negative) phase.
EpClassification classify(const ModelParams& params, double tol = kClassifyTol);

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;
  std::vector<double> values() const;  // inclusive endpoints, n >= 2
};

// Critical phase/strength over a grid of coupling ratios x = g1/g2 (with
// g3 = g1) and y = J1/J3 (with J2 = J1). Row-major node (i, j) = (x_i, y_j);
// unreachable nodes carry no value instead of aborting the sweep.
struct CriticalSet {
  std::vector<double> g_ratio;
  std::vector<double> j_ratio;
  std::vector<std::optional<double>> theta_c;  // in [0, pi/3] where present
  std::vector<std::optional<double>> gamma_c;
  std::size_t index(std::size_t i, std::size_t j) const { return i * j_ratio.size() + j; }
};

CriticalSet sweep_surface(const GridSpec& g_ratio, const GridSpec& j_ratio,
                          const ModelParams& fixed);

}  // namespace jct
