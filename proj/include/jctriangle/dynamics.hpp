#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "jctriangle/model.hpp"
#include "jctriangle/spectral.hpp"
#include "jctriangle/tolerances.hpp"

namespace jct {

// Expansion of a state in a biorthonormal frame: psi = sum_n a_n v_n with
// a_n = <w_n | psi>. The frame travels with the coordinates so the paired
// left-vector reconstruction is always available.
struct BiorthCoordinates {
  Spectrum basis;         // biorthogonalized frame
  Eigen::VectorXcd raw;   // the expanded state
  Eigen::VectorXcd coords;
  double norm_sq = 0.0;   // sum |a_n|^2
  Eigen::VectorXcd reconstruct() const;  // sum a_n v_n (matches raw to tol)
};

// Throws DefectiveAtEpError via biorthogonalize when the frame is defective.
BiorthCoordinates expand_in_basis(const Spectrum& basis, const Eigen::VectorXcd& psi);

// Companion state sum_n a_n w_n: same coefficients over the left vectors.
Eigen::VectorXcd associated_state(const BiorthCoordinates& coords);

// Mode weights |a_n|^2 / sum_m |a_m|^2 of psi against the frame.
std::vector<double> mode_fidelities(const Spectrum& basis, const Eigen::VectorXcd& psi);

// Overlap survival of each eigenbranch under gamma -> gamma + eps, evaluated
// as the ratio-of-inner-products form
//   F = <assoc(x)|y><assoc(y)|x> / (<assoc(y)|y><assoc(x)|x>)
// with both states expanded in the gamma-frame; equals |a_n|^2 / sum |a_m|^2
// for the coordinates of the displaced eigenvector. Branches paired by
// minimal total eigenvalue displacement with a deterministic tie-break; a
// positive pairing_tol opts into BranchPairingError on pairings that are not
// unique at that tolerance (exact cost ties are unavoidable where a real pair
// meets a conjugate pair, so the default keeps the matcher's tie-break).
// Throws DefectiveAtEpError at exact coalescences.
std::array<double, 3> fidelity(const ModelParams& params, double gamma, double eps,
                               double pairing_tol = 0.0);

// Matrix exponential exp(A) by scaling and squaring a Taylor series; ample
// accuracy for the modest norms these sweeps produce.
Eigen::MatrixXcd expm_series(const Eigen::MatrixXcd& a);

// psi(t) = exp(-i H t) psi0, one column per time. Spectral decomposition with
// biorthogonal projectors when the basis is comfortably non-defective,
// scaled-series exponential otherwise.
Eigen::MatrixXcd evolve(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0,
                        const std::vector<double>& times,
                        double defect_tol = kDefectivenessTol);
Eigen::MatrixXcd evolve(const EffectiveMatrix& m, const Eigen::VectorXcd& psi0,
                        const std::vector<double>& times,
                        double defect_tol = kDefectivenessTol);

// Echo of one pre-quench eigenbranch (1-based) under the quenched matrix:
//   L(t) = |d_b(t)|^2 / sum_m |d_m(t)|^2,  d_m(t) = <w_m^i | psi(t)>,
// i.e. the evolved state read in the *initial* biorthogonal frame.
struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;  // in [0, 1], values[0] == 1
  double gamma_initial = 0.0;
  double gamma_final = 0.0;
  double theta = 0.0;
  int branch = 1;
};

TimeSeries loschmidt_echo(const ModelParams& initial, const ModelParams& quenched,
                          int branch, const std::vector<double>& times);

// Ratio-of-inner-products echo value at one instant, evaluated literally from
// associated states; the series above uses the coordinate form, and the two
// agree to rounding.
double echo_value_direct(const Spectrum& initial_basis, const Eigen::VectorXcd& psi0,
                         const Eigen::VectorXcd& psi_t);

// Evenly spaced time grid [0, t_max] with n samples (n >= 2).
std::vector<double> linear_times(double t_max, int n);

}  // namespace jct
