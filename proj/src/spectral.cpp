#include "jctriangle/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "jctriangle/errors.hpp"
#include "jctriangle/pairing.hpp"

namespace jct {

// Real (sign-preserving) root for real input so the conjugate-pair structure
// of real-data cubics is bit-exact; principal branch otherwise.
Complex cube_root(Complex z) {
  if (z.imag() == 0.0) return Complex(std::cbrt(z.real()), 0.0);
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

CardanoInputs cardano_pq(const ModelParams& params) {
  if (params.g1 != params.g3 || params.j1 != params.j2)
    throw std::invalid_argument(
        "closed-form spectrum assumes g1 == g3 and j1 == j2");
  validate(params);

  const double w1 = params.omega - params.g1 * params.g1 / params.delta;
  const double w2 = params.omega - params.g2 * params.g2 / params.delta;
  const double j1 = params.j1, j3 = params.j3, gamma = params.gamma;
  const double dw = w2 - w1;

  CardanoInputs c;
  c.p = (-2.0 * j1 * j1 - j3 * j3 + gamma * gamma) / 3.0 - dw * dw / 9.0;
  c.q = j1 * j1 * j3 * std::cos(3.0 * params.theta) -
        dw * (dw * dw + 9.0 * j1 * j1 - 9.0 * j3 * j3 + 9.0 * gamma * gamma) / 27.0;
  c.discriminant = c.q * c.q + c.p * c.p * c.p;
  c.shift = (2.0 * w1 + w2) / 3.0;
  return c;
}

std::array<Complex, 3> depressed_cubic_roots(Complex p, Complex q) {
  const Complex disc = q * q + p * p * p;
  const Complex sq = std::sqrt(disc);

  // -q + sqrt(disc) cancels when q > 0 dominates p^3; the rebalanced form
  // p^3 / (q + sqrt(disc)) is algebraically identical and stable there.
  const bool real_data = p.imag() == 0.0 && q.imag() == 0.0;
  Complex bplus_cubed;
  if (real_data && disc.real() >= 0.0 && disc.imag() == 0.0 && q.real() > 0.0)
    bplus_cubed = p * p * p / (q + sq);
  else
    bplus_cubed = -q + sq;

  Complex bp = cube_root(bplus_cubed);
  Complex bm;
  if (bp == Complex(0.0, 0.0))
    bm = cube_root(-q - sq);  // p == 0: roots are the cube roots of -2q
  else
    bm = -p / bp;  // enforces bp * bm = -p across branch choices

  // eps2/eps3 assembled from (u, w) so their conjugate symmetry survives
  // rounding: w is exactly imaginary whenever bp, bm are real.
  const Complex u = bp + bm;
  const Complex w = Complex(0.0, std::sqrt(3.0)) * (bp - bm);
  return {u, 0.5 * (-u + w), 0.5 * (-u - w)};
}

std::array<Complex, 3> cardano_eigenvalues(const ModelParams& params) {
  const CardanoInputs c = cardano_pq(params);
  auto eps = depressed_cubic_roots(Complex(c.p, 0.0), Complex(c.q, 0.0));
  for (auto& e : eps) e += c.shift;
  return eps;
}

Spectrum numeric_eigensystem(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("matrix must be square");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> right(m, true);
  if (right.info() != Eigen::Success)
    throw ConvergenceError("eigensolver failed on the matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> left(m.adjoint(), true);
  if (left.info() != Eigen::Success)
    throw ConvergenceError("eigensolver failed on the adjoint");

  // match adjoint eigenpairs to the right ones: eigenvalues of M^dag are the
  // conjugates of those of M
  std::vector<Complex> lam(n), mu(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lam[i] = right.eigenvalues()(i);
    mu[i] = std::conj(left.eigenvalues()(i));
  }
  const std::vector<int> to_left = min_cost_assignment(lam, mu);

  Spectrum s;
  s.eigenvalues = right.eigenvalues();
  s.right_vectors = right.eigenvectors();
  s.left_vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    s.left_vectors.col(i) = left.eigenvectors().col(to_left[i]);

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  s.norm_products.resize(n);
  s.defectiveness = 1.0;
  s.max_residual = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXcd v = s.right_vectors.col(i).normalized();
    const Eigen::VectorXcd w = s.left_vectors.col(i).normalized();
    s.right_vectors.col(i) = v;
    s.left_vectors.col(i) = w;
    s.norm_products(i) = w.dot(v);  // <w|v>, Eigen's dot conjugates the left arg
    s.defectiveness = std::min(s.defectiveness, std::abs(s.norm_products(i)));
    const double res_r = (m * v - s.eigenvalues(i) * v).cwiseAbs().maxCoeff() / scale;
    const double res_l =
        (m.adjoint() * w - std::conj(s.eigenvalues(i)) * w).cwiseAbs().maxCoeff() / scale;
    s.max_residual = std::max({s.max_residual, res_r, res_l});
  }
  return s;
}

Spectrum biorthogonalize(const Spectrum& spectrum, double tol) {
  if (spectrum.defectiveness <= tol)
    throw DefectiveAtEpError("self-orthogonal eigenvector: biorthonormal frame not available");

  Spectrum s = spectrum;
  const Eigen::Index n = s.eigenvalues.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXcd v = s.right_vectors.col(i).normalized();
    // phase convention: largest-magnitude component real positive
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const Complex pivot = v(imax);
    if (std::abs(pivot) > 0.0) v *= std::conj(pivot) / std::abs(pivot);

    Eigen::VectorXcd w = s.left_vectors.col(i);
    const Complex overlap = w.dot(v);
    if (std::abs(overlap) == 0.0)
      throw DefectiveAtEpError("self-orthogonal eigenvector: biorthonormal frame not available");
    w /= std::conj(overlap);  // makes <w|v> exactly 1

    s.right_vectors.col(i) = v;
    s.left_vectors.col(i) = w;
    s.norm_products(i) = Complex(1.0, 0.0);
  }
  s.normalized = true;
  return s;
}

Spectrum eigensystem_cardano_ordered(const ModelParams& params) {
  const auto labels = cardano_eigenvalues(params);
  const EffectiveMatrix m = build_effective_matrix(params);
  Spectrum s = numeric_eigensystem(m.entries);

  std::vector<Complex> want(labels.begin(), labels.end());
  std::vector<Complex> have(s.eigenvalues.data(), s.eigenvalues.data() + 3);
  const std::vector<int> perm = min_cost_assignment(want, have);

  Spectrum out = s;
  for (int i = 0; i < 3; ++i) {
    out.eigenvalues(i) = s.eigenvalues(perm[i]);
    out.right_vectors.col(i) = s.right_vectors.col(perm[i]);
    out.left_vectors.col(i) = s.left_vectors.col(perm[i]);
    out.norm_products(i) = s.norm_products(perm[i]);
  }
  return out;
}

}  // namespace jct
