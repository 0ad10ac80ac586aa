#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "jctriangle/errors.hpp"
#include "jctriangle/model.hpp"
#include "jctriangle/pairing.hpp"
#include "jctriangle/params.hpp"
#include "jctriangle/spectral.hpp"

using jct::Complex;
using jct::ModelParams;

namespace {

ModelParams draw_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u;
  ModelParams p;
  p.delta = 10.0 + 90.0 * u(rng);
  p.g1 = p.g3 = 0.5 * u(rng);
  p.g2 = 0.5 * u(rng);
  p.gamma = 0.05 * u(rng);
  p.j1 = p.j2 = 0.05 * u(rng);
  p.j3 = 0.05 * u(rng);
  p.theta = 2.0 * M_PI / 3.0 * u(rng);
  return p;
}

double multiset_gap(const std::array<Complex, 3>& a, const Eigen::VectorXcd& b) {
  std::vector<Complex> from(a.begin(), a.end());
  std::vector<Complex> to(b.data(), b.data() + b.size());
  const auto perm = jct::min_cost_assignment(from, to);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, std::abs(to[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] -
                                     from[static_cast<std::size_t>(i)]));
  return worst;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("cube root: sign-preserving on the real axis, principal otherwise") {
    // real inputs stay exactly real (imag == 0, sign preserved); the real
    // part itself is only as exact as the libm cbrt
    const Complex neg = jct::cube_root(Complex(-8.0, 0.0));
    CHECK(neg.imag() == 0.0);
    CHECK(neg.real() == doctest::Approx(-2.0).epsilon(1e-15));
    const Complex pos = jct::cube_root(Complex(27.0, 0.0));
    CHECK(pos.imag() == 0.0);
    CHECK(pos.real() == doctest::Approx(3.0).epsilon(1e-15));
    const Complex r = jct::cube_root(Complex(0.0, 1.0));
    CHECK(std::arg(r) == doctest::Approx(M_PI / 6).epsilon(1e-15));
  }

  TEST_CASE("depressed data: decoupled ring gives p = gamma^2/3, q = 0") {
    ModelParams p;
    p.delta = 50.0;
    p.gamma = 0.02;
    const auto c = jct::cardano_pq(p);
    CHECK(c.p == doctest::Approx(p.gamma * p.gamma / 3).epsilon(1e-15));
    CHECK(c.q == doctest::Approx(0.0));
    CHECK(c.discriminant > 0.0);  // decoupled gain/loss pair is already broken
    CHECK(c.shift == doctest::Approx(1.0));
  }

  TEST_CASE("depressed data: fluxless Hermitian ring gives p = -J^2, q = J^3") {
    ModelParams p;
    p.delta = 50.0;
    p.j1 = p.j2 = p.j3 = 0.01;
    const auto c = jct::cardano_pq(p);
    CHECK(c.p == doctest::Approx(-1e-4).epsilon(1e-14));
    CHECK(c.q == doctest::Approx(1e-6).epsilon(1e-14));
    CHECK(std::abs(c.discriminant) < 1e-24);  // circulant double root

    const auto e = jct::cardano_eigenvalues(p);
    CHECK(e[0].real() == doctest::Approx(1.0 - 0.02).epsilon(1e-13));
    CHECK(e[1].real() == doctest::Approx(1.0 + 0.01).epsilon(1e-13));
    CHECK(e[2].real() == doctest::Approx(1.0 + 0.01).epsilon(1e-13));
    // the circulant double root is maximally ill-conditioned for the closed
    // form; stray imaginary parts land around sqrt of the cancellation noise
    for (const auto& v : e) CHECK(std::abs(v.imag()) < 1e-9);
  }

  TEST_CASE("closed form needs the balanced reduction") {
    ModelParams p;
    p.g1 = 0.1;
    p.g3 = 0.3;
    CHECK_THROWS_AS(jct::cardano_pq(p), std::invalid_argument);
  }

  TEST_CASE("broken-regime triplet is exactly one real plus a conjugate pair") {
    ModelParams p;
    p.delta = 50.0;
    p.g1 = p.g2 = p.g3 = 0.3;
    p.j1 = p.j2 = p.j3 = 0.01;
    p.theta = M_PI / 6;
    p.gamma = 0.03;  // beyond the triple point at this phase
    CHECK(jct::cardano_pq(p).discriminant > 0.0);
    const auto e = jct::cardano_eigenvalues(p);
    CHECK(e[0].imag() == 0.0);            // bit-exact real branch
    CHECK(e[1] == std::conj(e[2]));       // bit-exact conjugate pair
    CHECK(e[1].imag() > 0.0);
  }

  TEST_CASE("spectrum is closed under conjugation in both regimes") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
      const ModelParams p = draw_params(rng);
      const auto e = jct::cardano_eigenvalues(p);
      const std::array<Complex, 3> conj = {std::conj(e[0]), std::conj(e[1]), std::conj(e[2])};
      std::vector<Complex> a(e.begin(), e.end()), b(conj.begin(), conj.end());
      const auto perm = jct::min_cost_assignment(a, b);
      double worst = 0.0;
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, std::abs(b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] - a[static_cast<std::size_t>(i)]));
      CHECK(worst < 1e-10);
    }
  }

  TEST_CASE("closed form matches the dense eigensolver over random draws") {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int k = 0; k < 300; ++k) {
      const ModelParams p = draw_params(rng);
      const auto e = jct::cardano_eigenvalues(p);
      const auto s = jct::numeric_eigensystem(jct::build_effective_matrix(p).entries);
      worst = std::max(worst, multiset_gap(e, s.eigenvalues));
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("root sum and product reproduce trace and determinant") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
      const ModelParams p = draw_params(rng);
      const auto m = jct::build_effective_matrix(p).entries;
      const auto e = jct::cardano_eigenvalues(p);
      CHECK(std::abs((e[0] + e[1] + e[2]) - m.trace()) < 1e-12);
      CHECK(std::abs(e[0] * e[1] * e[2] - m.determinant()) < 1e-12);
    }
  }

  TEST_CASE("numeric eigensystem: residuals, completeness, biorthogonality") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXcd m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Complex(u(rng), u(rng));

    const auto s = jct::numeric_eigensystem(m);
    CHECK(s.max_residual < 1e-10);
    CHECK(s.defectiveness > 1e-3);  // generic matrix is far from defective

    const auto b = jct::biorthogonalize(s);
    const Eigen::MatrixXcd gram = b.left_vectors.adjoint() * b.right_vectors;
    CHECK((gram - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

    Eigen::MatrixXcd completeness = Eigen::MatrixXcd::Zero(3, 3);
    for (int n = 0; n < 3; ++n)
      completeness += b.right_vectors.col(n) * b.left_vectors.col(n).adjoint();
    CHECK((completeness - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);

    // phase convention: the dominant component of each right vector is real+
    for (int n = 0; n < 3; ++n) {
      int imax = 0;
      b.right_vectors.col(n).cwiseAbs().maxCoeff(&imax);
      const Complex pivot = b.right_vectors(imax, n);
      CHECK(pivot.real() > 0.0);
      CHECK(std::abs(pivot.imag()) < 1e-12 * std::abs(pivot));
    }
  }

  TEST_CASE("defectiveness drops to zero on a Jordan block") {
    Eigen::MatrixXcd jordan = Eigen::MatrixXcd::Zero(2, 2);
    jordan(0, 1) = 1.0;
    const auto s = jct::numeric_eigensystem(jordan);
    CHECK(s.defectiveness < 1e-7);
    CHECK_THROWS_AS(jct::biorthogonalize(s), jct::DefectiveAtEpError);
  }

  TEST_CASE("identity matrix biorthogonalizes trivially") {
    const auto s = jct::numeric_eigensystem(Eigen::MatrixXcd::Identity(3, 3));
    const auto b = jct::biorthogonalize(s);
    for (int n = 0; n < 3; ++n) {
      CHECK(std::abs(b.norm_products(n) - Complex(1.0, 0.0)) < 1e-12);
      CHECK(std::abs(b.eigenvalues(n) - Complex(1.0, 0.0)) < 1e-12);
    }
  }

  TEST_CASE("ordered eigensystem follows the closed-form labels") {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 50; ++k) {
      const ModelParams p = draw_params(rng);
      const auto e = jct::cardano_eigenvalues(p);
      const auto s = jct::eigensystem_cardano_ordered(p);
      for (int n = 0; n < 3; ++n)
        CHECK(std::abs(s.eigenvalues(n) - e[static_cast<std::size_t>(n)]) < 1e-9);
      // columns really are eigenpairs of the effective matrix
      const auto m = jct::build_effective_matrix(p).entries;
      for (int n = 0; n < 3; ++n) {
        const double res =
            (m * s.right_vectors.col(n) - s.eigenvalues(n) * s.right_vectors.col(n)).norm();
        CHECK(res < 1e-9);
      }
    }
  }
}
