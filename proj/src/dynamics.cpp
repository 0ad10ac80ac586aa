#include "jctriangle/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "jctriangle/errors.hpp"
#include "jctriangle/pairing.hpp"

namespace jct {

namespace {
constexpr Complex kI{0.0, 1.0};

Spectrum as_frame(const Spectrum& basis) {
  return basis.normalized ? basis : biorthogonalize(basis);
}
}  // namespace

Eigen::VectorXcd BiorthCoordinates::reconstruct() const {
  return basis.right_vectors * coords;
}

BiorthCoordinates expand_in_basis(const Spectrum& basis, const Eigen::VectorXcd& psi) {
  BiorthCoordinates out;
  out.basis = as_frame(basis);
  out.raw = psi;
  out.coords = out.basis.left_vectors.adjoint() * psi;  // a_n = <w_n|psi>
  out.norm_sq = out.coords.squaredNorm();
  return out;
}

Eigen::VectorXcd associated_state(const BiorthCoordinates& coords) {
  return coords.basis.left_vectors * coords.coords;
}

std::vector<double> mode_fidelities(const Spectrum& basis, const Eigen::VectorXcd& psi) {
  const BiorthCoordinates c = expand_in_basis(basis, psi);
  if (!(c.norm_sq > 0.0)) throw std::invalid_argument("state has no weight in the frame");
  std::vector<double> f(static_cast<std::size_t>(c.coords.size()));
  for (Eigen::Index n = 0; n < c.coords.size(); ++n)
    f[static_cast<std::size_t>(n)] = std::norm(c.coords(n)) / c.norm_sq;
  return f;
}

std::array<double, 3> fidelity(const ModelParams& params, double gamma, double eps,
                               double pairing_tol) {
  ModelParams pa = params;
  pa.gamma = gamma;
  ModelParams pb = params;
  pb.gamma = gamma + eps;

  const Spectrum sa = biorthogonalize(eigensystem_cardano_ordered(pa));
  const Spectrum sb = biorthogonalize(eigensystem_cardano_ordered(pb));

  std::array<Complex, 3> ea, eb;
  for (int n = 0; n < 3; ++n) {
    ea[n] = sa.eigenvalues(n);
    eb[n] = sb.eigenvalues(n);
  }
  const auto perm = pair_by_continuity(ea, eb, pairing_tol);

  std::array<double, 3> f{};
  for (int n = 0; n < 3; ++n) {
    const Eigen::VectorXcd x = sa.right_vectors.col(n);
    const Eigen::VectorXcd y = sb.right_vectors.col(perm[n]);

    // both states read in the gamma-frame; associated states share coefficients
    const BiorthCoordinates cx = expand_in_basis(sa, x);
    const BiorthCoordinates cy = expand_in_basis(sa, y);
    const Eigen::VectorXcd xt = associated_state(cx);
    const Eigen::VectorXcd yt = associated_state(cy);

    const Complex num = xt.dot(y) * yt.dot(x);
    const Complex den = yt.dot(y) * xt.dot(x);
    if (!(std::abs(den) > 0.0)) throw DefectiveAtEpError("fidelity normalizer vanished");
    f[n] = std::real(num / den);
  }
  return f;
}

Eigen::MatrixXcd expm_series(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("matrix must be square");

  const double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (nrm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  const Eigen::MatrixXcd b = a * scale;
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Eigen::MatrixXcd evolve(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0,
                        const std::vector<double>& times, double defect_tol) {
  if (times.empty()) throw std::invalid_argument("no times given");
  const Eigen::Index dim = h.rows();
  Eigen::MatrixXcd states(dim, static_cast<Eigen::Index>(times.size()));

  const Spectrum s = numeric_eigensystem(h);
  if (s.defectiveness > defect_tol) {
    // spectral fast path: psi(t) = sum_n a_n e^{-i E_n t} v_n
    const Spectrum b = biorthogonalize(s, defect_tol);
    const Eigen::VectorXcd a = b.left_vectors.adjoint() * psi0;
    for (std::size_t k = 0; k < times.size(); ++k) {
      Eigen::VectorXcd phased(dim);
      for (Eigen::Index n = 0; n < dim; ++n)
        phased(n) = a(n) * std::exp(-kI * b.eigenvalues(n) * times[k]);
      states.col(static_cast<Eigen::Index>(k)) = b.right_vectors * phased;
    }
  } else {
    // robust path straight through the propagator; immune to defectiveness
    for (std::size_t k = 0; k < times.size(); ++k)
      states.col(static_cast<Eigen::Index>(k)) = expm_series(-kI * times[k] * h) * psi0;
  }
  return states;
}

Eigen::MatrixXcd evolve(const EffectiveMatrix& m, const Eigen::VectorXcd& psi0,
                        const std::vector<double>& times, double defect_tol) {
  return evolve(Eigen::MatrixXcd(m.entries), psi0, times, defect_tol);
}

TimeSeries loschmidt_echo(const ModelParams& initial, const ModelParams& quenched,
                          int branch, const std::vector<double>& times) {
  if (branch < 1 || branch > 3) throw std::invalid_argument("branch must be 1, 2 or 3");
  if (times.empty()) throw std::invalid_argument("no times given");

  const Spectrum frame = biorthogonalize(eigensystem_cardano_ordered(initial));
  const Eigen::VectorXcd psi0 = frame.right_vectors.col(branch - 1);
  const EffectiveMatrix hf = build_effective_matrix(quenched);
  const Eigen::MatrixXcd states = evolve(hf, psi0, times);

  TimeSeries ts;
  ts.times = times;
  ts.values.resize(times.size());
  ts.gamma_initial = initial.gamma;
  ts.gamma_final = quenched.gamma;
  ts.theta = initial.theta;
  ts.branch = branch;

  for (std::size_t k = 0; k < times.size(); ++k) {
    const Eigen::VectorXcd d = frame.left_vectors.adjoint() * states.col(static_cast<Eigen::Index>(k));
    const double total = d.squaredNorm();
    if (!(total > 0.0)) throw DefectiveAtEpError("echo normalizer vanished");
    ts.values[k] = std::norm(d(branch - 1)) / total;
  }
  return ts;
}

double echo_value_direct(const Spectrum& initial_basis, const Eigen::VectorXcd& psi0,
                         const Eigen::VectorXcd& psi_t) {
  const Spectrum frame = as_frame(initial_basis);
  const BiorthCoordinates c0 = expand_in_basis(frame, psi0);
  const BiorthCoordinates ct = expand_in_basis(frame, psi_t);
  const Eigen::VectorXcd t0 = associated_state(c0);
  const Eigen::VectorXcd tt = associated_state(ct);

  const Complex num = t0.dot(psi_t) * tt.dot(psi0);
  const Complex den = tt.dot(psi_t) * t0.dot(psi0);
  if (!(std::abs(den) > 0.0)) throw DefectiveAtEpError("echo normalizer vanished");
  return std::real(num / den);
}

std::vector<double> linear_times(double t_max, int n) {
  if (n < 2) throw std::invalid_argument("time grid needs at least 2 samples");
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = t_max * (static_cast<double>(i) / (n - 1));
  return t;
}

}  // namespace jct
