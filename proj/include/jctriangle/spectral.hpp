#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "jctriangle/model.hpp"
#include "jctriangle/params.hpp"
#include "jctriangle/tolerances.hpp"

namespace jct {

// Sign-preserving real cube root for real input, principal branch otherwise.
// All closed-form branch labels in this library key off this choice.
Complex cube_root(Complex z);

// Depressed-cubic data for the effective matrix: eigenvalues are
// E_n = eps_n + shift where eps^3 + 3 p eps + 2 q = 0 and
// shift = (2 w1 + w2)/3. Both p and q are real for every valid parameter set;
// discriminant = q^2 + p^3 changes sign exactly at the symmetry-breaking
// thresholds.
struct CardanoInputs {
  double p = 0.0;
  double q = 0.0;
  double discriminant = 0.0;
  double shift = 0.0;
};
CardanoInputs cardano_pq(const ModelParams& params);

// Roots of eps^3 + 3 p eps + 2 q = 0 in the closed-form label order:
//   eps_1 = b+ + b-,  eps_2 = chi b+ + chi* b-,  eps_3 = chi* b+ + chi b-,
// chi = exp(2 pi i/3), b+ = principal cube root of -q + sqrt(q^2+p^3),
// b- = -p/b+ (principal root of -q - sqrt(...) when b+ vanishes).
// This label order is load-bearing: downstream branch indexing (perturbation
// ladders, echo curves) keys off it.
std::array<Complex, 3> depressed_cubic_roots(Complex p, Complex q);

// Closed-form eigenvalue triplet of the effective matrix, label order above.
std::array<Complex, 3> cardano_eigenvalues(const ModelParams& params);

// Right/left eigensystem of a dense complex matrix (columns are vectors).
// left_vectors satisfy M^dag w_n = conj(E_n) w_n; norm_products hold
// <w_n|v_n>. defectiveness is min |<w_n|v_n>| over unit-normalized pairs and
// drops to zero at an exceptional point.
struct Spectrum {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;
  Eigen::MatrixXcd left_vectors;
  Eigen::VectorXcd norm_products;
  double defectiveness = 0.0;
  double max_residual = 0.0;
  bool normalized = false;
};
Spectrum numeric_eigensystem(const Eigen::MatrixXcd& m);

// Rescale to the biorthonormal convention <w_m|v_n> = delta_mn with unit-norm
// right vectors and the largest-magnitude component of each right vector made
// real positive. Throws DefectiveAtEpError when defectiveness <= tol.
Spectrum biorthogonalize(const Spectrum& spectrum, double tol = kDefectivenessTol);

// Numeric eigensystem of the effective matrix with branches reordered to the
// closed-form label order. The canonical frame for dynamics and sweeps.
Spectrum eigensystem_cardano_ordered(const ModelParams& params);

}  // namespace jct
