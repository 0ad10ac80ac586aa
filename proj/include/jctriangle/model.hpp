#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "jctriangle/params.hpp"

namespace jct {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Matrix6c = Eigen::Matrix<Complex, 6, 6>;

// Dressed cavity frequencies after eliminating the detuned atoms:
// w_n = omega - g_n^2 / delta.
std::array<double, 3> renormalized_frequencies(const ModelParams& params);

// Effective single-excitation matrix of the dressed photon ring:
//
//   [ w1 + i*gamma   -j1 e^{-i th}  -j3 e^{+i th} ]
//   [ -j1 e^{+i th}   w2            -j1 e^{-i th} ]
//   [ -j3 e^{-i th}  -j1 e^{+i th}   w1 - i*gamma ]
//
// The closed-form spectrum needs the balanced-gain diagonal (g1 = g3) and a
// uniform 1-2 / 2-3 hopping (j1 = j2); both are enforced here.
struct EffectiveMatrix {
  Matrix3c entries;
  ModelParams params;
};
EffectiveMatrix build_effective_matrix(const ModelParams& params);

// Full single-excitation block of the three-cavity Jaynes-Cummings ring in
// the basis [photon_1, photon_2, photon_3, atom_1, atom_2, atom_3], with the
// constant -3*delta/2 vacuum offset dropped. Photon block carries the same
// hopping phases as the effective matrix; atoms sit at delta and couple to
// their own cavity with g_n. No parameter symmetry is required.
struct FullMatrix {
  Matrix6c entries;
  ModelParams params;
};
FullMatrix build_full_single_excitation(const ModelParams& params);

// Residuals of the two antiunitary symmetries of the ring. P is the 1<->3
// cavity exchange; both maps reduce to comparing P conj(M) P against M.
struct SymmetryReport {
  double pt_residual = 0.0;      // max |P M* P - M|
  double chiral_residual = 0.0;  // max |(C M C^-1)* - M|, C = 1<->3 exchange
  bool pt_symmetric = false;
  bool chiral_symmetric = false;
};
SymmetryReport check_symmetries(const EffectiveMatrix& m, double tol = 1e-12);

}  // namespace jct
