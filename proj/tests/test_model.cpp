#include <doctest.h>

#include <cmath>
#include <complex>

#include "jctriangle/model.hpp"
#include "jctriangle/params.hpp"

using jct::Complex;
using jct::ModelParams;

namespace {

ModelParams ring(double delta, double g, double j) {
  ModelParams p;
  p.delta = delta;
  p.g1 = p.g2 = p.g3 = g;
  p.j1 = p.j2 = p.j3 = j;
  return p;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("dressed frequencies follow omega - g^2/delta") {
    ModelParams p = ring(50.0, 0.3, 0.01);
    const auto w = jct::renormalized_frequencies(p);
    CHECK(w[0] == doctest::Approx(0.9982).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(0.9982).epsilon(1e-12));
    CHECK(w[2] == doctest::Approx(0.9982).epsilon(1e-12));

    p = ring(20.0, 0.0, 0.0);
    p.g2 = 0.3;
    const auto w2 = jct::renormalized_frequencies(p);
    CHECK(w2[0] == doctest::Approx(1.0));
    CHECK(w2[1] == doctest::Approx(0.9955).epsilon(1e-12));

    p.delta = 0.0;
    CHECK_THROWS_AS(jct::renormalized_frequencies(p), std::invalid_argument);
  }

  TEST_CASE("validate flags hard and soft problems") {
    ModelParams p = ring(20.0, 0.1, 0.01);
    CHECK(jct::validate(p).empty());

    p.gamma = -0.1;
    CHECK_THROWS_AS(jct::validate(p), std::invalid_argument);
    p.gamma = 0.0;

    p.g1 = 0.3;  // g1 != g3: fine for the 6x6, warned for the reduction
    CHECK_FALSE(jct::validate(p).empty());

    p = ring(1.0, 1.5, 0.01);  // g^2/delta >= omega: reduction invalid
    CHECK_FALSE(jct::validate(p).empty());
  }

  TEST_CASE("parameter access by name round-trips every field") {
    ModelParams p;
    for (const auto& name : jct::param_names()) {
      jct::set_param(p, name, 0.125);
      CHECK(jct::get_param(p, name) == 0.125);
    }
    CHECK(jct::param_names().size() == 10);
    CHECK_THROWS_AS(jct::set_param(p, "j9", 1.0), std::invalid_argument);
  }

  TEST_CASE("effective matrix wiring: diagonal, phases, trace") {
    ModelParams p = ring(50.0, 0.3, 0.0);
    p.j1 = p.j2 = 0.01;
    p.j3 = 0.02;
    p.gamma = 0.005;
    p.theta = 0.4;
    const auto m = jct::build_effective_matrix(p).entries;
    const auto w = jct::renormalized_frequencies(p);
    const Complex fwd = std::polar(1.0, p.theta);

    CHECK(m(0, 0) == Complex(w[0], p.gamma));
    CHECK(m(1, 1) == Complex(w[1], 0.0));
    CHECK(m(2, 2) == Complex(w[0], -p.gamma));
    CHECK(std::abs(m(1, 0) - (-p.j1 * fwd)) == 0.0);
    CHECK(std::abs(m(0, 1) - (-p.j1 * std::conj(fwd))) == 0.0);
    CHECK(std::abs(m(0, 2) - (-p.j3 * fwd)) == 0.0);
    CHECK(std::abs(m(2, 0) - (-p.j3 * std::conj(fwd))) == 0.0);
    CHECK(std::abs(m(2, 1) - (-p.j1 * fwd)) == 0.0);
    CHECK(std::abs(m(1, 2) - (-p.j1 * std::conj(fwd))) == 0.0);

    const Complex tr = m.trace();
    CHECK(tr.real() == doctest::Approx(2 * w[0] + w[1]).epsilon(1e-15));
    CHECK(tr.imag() == 0.0);  // gain and loss cancel exactly
  }

  TEST_CASE("effective matrix rejects an unbalanced reduction") {
    ModelParams p = ring(50.0, 0.3, 0.01);
    p.g3 = 0.2;
    CHECK_THROWS_AS(jct::build_effective_matrix(p), std::invalid_argument);
    p = ring(50.0, 0.3, 0.01);
    p.j2 = 0.02;
    CHECK_THROWS_AS(jct::build_effective_matrix(p), std::invalid_argument);
  }

  TEST_CASE("full single-excitation matrix wiring") {
    ModelParams p = ring(50.0, 0.25, 0.0);
    p.j1 = 0.01;
    p.j2 = 0.015;
    p.j3 = 0.02;
    p.gamma = 0.004;
    p.theta = 0.7;
    const auto f = jct::build_full_single_excitation(p).entries;
    const Complex fwd = std::polar(1.0, p.theta);

    CHECK(f(0, 0) == Complex(p.omega, p.gamma));
    CHECK(f(1, 1) == Complex(p.omega, 0.0));
    CHECK(f(2, 2) == Complex(p.omega, -p.gamma));
    for (int n = 0; n < 3; ++n) {
      CHECK(f(3 + n, 3 + n) == Complex(p.delta, 0.0));
      CHECK(f(n, 3 + n) == Complex(0.25, 0.0));  // atom-cavity coupling
      CHECK(f(3 + n, n) == Complex(0.25, 0.0));
    }
    // ring bonds 1->2, 2->3, 3->1 with conjugate-phased reverses
    CHECK(std::abs(f(1, 0) - (-p.j1 * fwd)) == 0.0);
    CHECK(std::abs(f(2, 1) - (-p.j2 * fwd)) == 0.0);
    CHECK(std::abs(f(0, 2) - (-p.j3 * fwd)) == 0.0);
    CHECK(std::abs(f(0, 1) - (-p.j1 * std::conj(fwd))) == 0.0);
    CHECK(std::abs(f(1, 2) - (-p.j2 * std::conj(fwd))) == 0.0);
    CHECK(std::abs(f(2, 0) - (-p.j3 * std::conj(fwd))) == 0.0);
    // atoms never hop
    CHECK(std::abs(f(4, 3)) == 0.0);
    CHECK(std::abs(f(3, 5)) == 0.0);
  }

  TEST_CASE("symmetry residuals vanish for the balanced ring") {
    ModelParams p = ring(50.0, 0.3, 0.01);
    p.gamma = 0.02;
    p.theta = 0.37;
    const auto m = jct::build_effective_matrix(p);
    const auto rep = jct::check_symmetries(m);
    CHECK(rep.pt_residual < 1e-14);
    CHECK(rep.chiral_residual < 1e-14);
    CHECK(rep.pt_symmetric);
    CHECK(rep.chiral_symmetric);
  }

  TEST_CASE("symmetry residuals detect an imbalanced diagonal") {
    ModelParams p = ring(50.0, 0.3, 0.01);
    p.gamma = 0.02;
    jct::EffectiveMatrix m = jct::build_effective_matrix(p);
    m.entries(0, 0) += Complex(0.0, 0.01);  // extra gain on cavity 1 only
    const auto rep = jct::check_symmetries(m);
    CHECK(rep.pt_residual > 1e-3);
    CHECK_FALSE(rep.pt_symmetric);
  }
}
