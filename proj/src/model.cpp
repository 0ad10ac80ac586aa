#include "jctriangle/model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace jct {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

std::array<double, 3> renormalized_frequencies(const ModelParams& p) {
  if (p.delta == 0.0) throw std::invalid_argument("delta must be nonzero");
  return {p.omega - p.g1 * p.g1 / p.delta, p.omega - p.g2 * p.g2 / p.delta,
          p.omega - p.g3 * p.g3 / p.delta};
}

EffectiveMatrix build_effective_matrix(const ModelParams& p) {
  validate(p);
  if (p.g1 != p.g3)
    throw std::invalid_argument(
        "effective three-site reduction assumes balanced qubit couplings g1 == g3");
  if (p.j1 != p.j2)
    throw std::invalid_argument(
        "effective three-site reduction assumes uniform 1-2/2-3 hopping j1 == j2");

  const auto w = renormalized_frequencies(p);
  const Complex hop_f = std::polar(1.0, p.theta);    // e^{+i theta}
  const Complex hop_b = std::polar(1.0, -p.theta);   // e^{-i theta}

  EffectiveMatrix m;
  m.params = p;
  m.entries << Complex(w[0], p.gamma), -p.j1 * hop_b, -p.j3 * hop_f,
      -p.j1 * hop_f, Complex(w[1], 0.0), -p.j1 * hop_b,
      -p.j3 * hop_b, -p.j1 * hop_f, Complex(w[0], -p.gamma);
  return m;
}

FullMatrix build_full_single_excitation(const ModelParams& p) {
  validate(p);
  FullMatrix f;
  f.params = p;
  f.entries.setZero();

  // photon block: bare frequencies with the gain/loss pair on cavities 1/3
  f.entries(0, 0) = Complex(p.omega, p.gamma);
  f.entries(1, 1) = Complex(p.omega, 0.0);
  f.entries(2, 2) = Complex(p.omega, -p.gamma);

  // ring hopping: bond b couples cavity b to cavity b+1 with phase theta
  const double js[] = {p.j1, p.j2, p.j3};
  for (int b = 0; b < 3; ++b) {
    const int nxt = (b + 1) % 3;
    f.entries(nxt, b) = -js[b] * std::polar(1.0, p.theta);
    f.entries(b, nxt) = -js[b] * std::polar(1.0, -p.theta);
  }

  // atoms: gap delta (vacuum offset dropped), each coupled to its own cavity
  const double gs[] = {p.g1, p.g2, p.g3};
  for (int n = 0; n < 3; ++n) {
    f.entries(3 + n, 3 + n) = Complex(p.delta, 0.0);
    f.entries(n, 3 + n) = Complex(gs[n], 0.0);
    f.entries(3 + n, n) = Complex(gs[n], 0.0);
  }
  return f;
}

SymmetryReport check_symmetries(const EffectiveMatrix& m, double tol) {
  Eigen::Matrix3d exchange;
  exchange << 0, 0, 1, 0, 1, 0, 1, 0, 0;  // 1 <-> 3, self-inverse

  const Matrix3c& a = m.entries;
  const Matrix3c pt = exchange * a.conjugate() * exchange - a;
  const Matrix3c chiral = (exchange * a * exchange.inverse()).conjugate() - a;

  SymmetryReport r;
  r.pt_residual = pt.cwiseAbs().maxCoeff();
  r.chiral_residual = chiral.cwiseAbs().maxCoeff();
  r.pt_symmetric = r.pt_residual <= tol;
  r.chiral_symmetric = r.chiral_residual <= tol;
  return r;
}

}  // namespace jct
