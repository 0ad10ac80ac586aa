#pragma once

#include <array>
#include <complex>
#include <vector>

#include "jctriangle/model.hpp"
#include "jctriangle/spectral.hpp"

namespace jct {

// Diagonal defect +epsilon added at one cavity (1-based site index).
struct Perturbation {
  int site = 1;  // 1, 2, 3
  double epsilon = 0.0;
};

// Characteristic polynomial of M + eps * |site><site| written as
//   E^3 - (a + eps) E^2 + (b + c eps) E + (u + d eps) = 0
// with a = tr M, b = sum of principal 2x2 minors, u = -det M,
// c = trace of the 2x2 block complementary to the site,
// d = -det of that complementary block.
struct CubicCoeffs {
  Complex a, b, u;  // unperturbed polynomial: E^3 - a E^2 + b E + u
  Complex c, d;     // linear-in-eps corrections
  int site = 1;
};

CubicCoeffs perturbed_cubic_coeffs(const EffectiveMatrix& m, int site);
CubicCoeffs perturbed_cubic_coeffs(const ModelParams& params, int site);

// All three roots of z^3 + A z^2 + B z + C = 0 (general complex
// coefficients; Cardano plus one Newton polish per root).
std::array<Complex, 3> solve_cubic(Complex A, Complex B, Complex C);

// Roots of the perturbed cubic above at a given epsilon.
std::array<Complex, 3> perturbed_cubic_roots(const CubicCoeffs& coeffs, double epsilon);

// Numeric eigenvalues of M + eps * D_site, matched by minimal total
// displacement to the closed-form unperturbed triplet (the matching is
// vacuous at a coalescence, where callers should ladder instead).
std::array<Complex, 3> exact_perturbed_spectrum(const ModelParams& params,
                                                const Perturbation& pert);

// Leading fractional-power response around a triple coalescence at E0 = a/3:
//   dE_n = zeta_n eta^{1/3} eps^{1/3} - (v/3) eta^{-1/3} conj(zeta_n) eps^{2/3}
// with eta = -E0^2 + c E0 + d, v = c - 2 E0, zeta_n = exp(i (2n+1) pi / 3).
struct Puiseux3 {
  Complex e0;
  Complex eta;  // cube of the first-order coefficient; must not vanish
  Complex v;
  std::array<Complex, 3> first_order;   // zeta_n eta^{1/3}
  std::array<Complex, 3> second_order;  // -(v/3) eta^{-1/3} conj(zeta_n)
  std::array<Complex, 3> predict(double epsilon) const;  // the dE_n
  // Real splittings between branch 1 and branches 2, 3:
  //   { |Re(dE_1 - dE_2)|, |Re(dE_1 - dE_3)| },
  // which open as (3/2)|eta|^{1/3} eps^{1/3} -/+ an eps^{2/3} correction.
  std::array<double, 2> re_splittings(double epsilon) const;
};

// Throws DegenerateExpansionError when |eta| is below tol.
Puiseux3 puiseux_3ep(const CubicCoeffs& coeffs, double tol = 1e-14);
Puiseux3 puiseux_3ep(const ModelParams& params, int site);

// Square-root response around a two-fold coalescence at the double root e0:
//   dE = +- c1 sqrt(eps), c1 = sqrt(eta(e0) / (a - 3 e0)).
// `alpha` is the closed-form prefactor candidate
//   alpha = -sqrt(9 (e0-w1)^2 - 5 (w2+w3-2 e0)^2)/5 - 3 (e0-w1)/5
// built from the diagonal (w1, w2, w3) of the unperturbed matrix; it is
// reported for comparison (prediction Re(-2 sqrt(alpha)) sqrt(eps)) but c1 is
// the prediction the splitting actually follows. alpha_principal_branch marks
// a negative/complex radicand resolved by the principal square root.
struct Puiseux2 {
  Complex e0;       // double root
  Complex e_other;  // spectator root
  Complex c1;
  Complex alpha;
  bool alpha_principal_branch = false;
  std::array<Complex, 2> predict(double epsilon) const;  // {+c1, -c1} * sqrt(eps)
  Complex split(double epsilon) const;                   // 2 c1 sqrt(eps)
  double alpha_re_split(double epsilon) const;           // Re(-2 sqrt(alpha)) sqrt(eps)
};

Puiseux2 puiseux_2ep(const EffectiveMatrix& m, int site, Complex double_root,
                     Complex other_root);
// Locates the double root as the closest eigenvalue pair.
Puiseux2 puiseux_2ep(const ModelParams& params, int site);

// One perturbation ladder: exact spectra at each epsilon (ascending), matched
// to branches by nearest seed prediction at the smallest epsilon and by
// continuity upward. shifts[k][n] = roots[k][n] - e0.
struct PerturbationLadder {
  std::vector<double> epsilons;
  std::vector<std::array<Complex, 3>> roots;
  std::vector<std::array<Complex, 3>> shifts;
};

PerturbationLadder trace_ladder(const ModelParams& params, int site,
                                const std::vector<double>& epsilons, Complex e0,
                                const std::array<Complex, 3>& seed_predictions);

// Log-spaced grid, inclusive of both (positive) ends.
std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace jct
