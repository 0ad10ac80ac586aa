#include <doctest.h>

#include <cmath>

#include "jctriangle/ep.hpp"
#include "jctriangle/errors.hpp"
#include "jctriangle/params.hpp"
#include "jctriangle/spectral.hpp"

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

TEST_SUITE("ep") {
  TEST_CASE("pairwise critical strength: quarter-flux ring") {
    // cos(3 theta) vanishes at theta = pi/6 only up to rounding, so the
    // sqrt(3) J limit holds to ~1e-13 absolute, not to machine epsilon
    CHECK(std::abs(jct::gamma_2c(0.01, 0.01, M_PI / 6) - std::sqrt(3.0) * 0.01) < 1e-12);
    // reference value for the theta = pi/4 ladder scenarios
    CHECK(jct::gamma_2c(0.01, 0.01, M_PI / 4) ==
          doctest::Approx(0.007867009737172692).epsilon(1e-13));
  }

  TEST_CASE("pairwise critical strength needs matched g1, g2") {
    ModelParams p = ring(20.0, 0.1, 0.01);
    p.g2 = 0.3;
    CHECK_THROWS_AS(jct::gamma_2c(p), std::invalid_argument);
    p.g2 = p.g1;
    p.theta = M_PI / 6;
    CHECK(std::abs(jct::gamma_2c(p) - std::sqrt(3.0) * 0.01) < 1e-12);
  }

  TEST_CASE("triple point location: balanced couplings sit at pi/6") {
    const auto cp = jct::critical_3el(0.3, 0.3, 50.0, 0.01, 0.01);
    CHECK(cp.cos3theta_arg == doctest::Approx(0.0));
    CHECK(std::abs(cp.theta - M_PI / 6) < 1e-12);
    CHECK(cp.gamma == doctest::Approx(std::sqrt(3.0) * 0.01).epsilon(1e-13));
  }

  TEST_CASE("triple point location: the lopsided reference configuration") {
    const auto cp = jct::critical_3el(0.1, 0.3, 20.0, 0.01, 0.01);
    CHECK(cp.cos3theta_arg == doctest::Approx(-0.40948148148148145).epsilon(1e-14));
    CHECK(cp.theta == doctest::Approx(0.6642273212919623).epsilon(1e-14));
    CHECK(cp.gamma == doctest::Approx(0.01747378989610821).epsilon(1e-14));
    CHECK(cp.theta >= 0.0);
    CHECK(cp.theta <= M_PI / 3);
  }

  TEST_CASE("stronger gain-side coupling pulls the critical phase down") {
    const auto lo = jct::critical_3el(0.24, 0.3, 20.0, 0.01, 0.01);
    const auto eq = jct::critical_3el(0.30, 0.3, 20.0, 0.01, 0.01);
    const auto hi = jct::critical_3el(0.36, 0.3, 20.0, 0.01, 0.01);
    CHECK(lo.theta > eq.theta);
    CHECK(eq.theta > hi.theta);
  }

  TEST_CASE("triple point out of reach when the arccos argument overflows") {
    CHECK_THROWS_AS(jct::critical_3el(0.5, 0.1, 10.0, 0.01, 0.001), jct::OutOfReachError);
    CHECK_THROWS_AS(jct::critical_3el(0.1, 0.3, 20.0, 0.0, 0.01), std::invalid_argument);
  }

  TEST_CASE("the triple point terminates the pairwise line") {
    // at theta_c the pairwise strength equals the triple strength
    const auto cp = jct::critical_3el(0.3, 0.3, 50.0, 0.01, 0.01);
    CHECK(std::abs(jct::gamma_2c(0.01, 0.01, cp.theta) - cp.gamma) < 1e-12);
  }

  TEST_CASE("flux family") {
    CHECK(jct::critical_flux(0.5) == doctest::Approx(1.5));
    CHECK(jct::critical_flux(0.5, 1) == doctest::Approx(1.5 + M_PI));
    CHECK(jct::critical_flux(0.5, -1) == doctest::Approx(1.5 - M_PI));
  }

  TEST_CASE("classification walks the whole decision tree") {
    ModelParams p = ring(50.0, 0.3, 0.01);

    p.theta = M_PI / 5;
    p.gamma = 0.0;
    CHECK(jct::classify(p).kind == jct::EpKind::PTSymmetric);

    p.gamma = 0.03;  // far beyond every threshold at this phase
    CHECK(jct::classify(p).kind == jct::EpKind::PTBroken);

    p.theta = M_PI / 4;
    p.gamma = jct::gamma_2c(0.01, 0.01, M_PI / 4);
    CHECK(jct::classify(p).kind == jct::EpKind::EP2);

    p.theta = M_PI / 6;
    p.gamma = std::sqrt(3.0) * 0.01;
    const auto cls = jct::classify(p);
    CHECK(cls.kind == jct::EpKind::EP3);
    CHECK(cls.p_residual < 1e-9);
    CHECK(cls.q_residual < 1e-9);
    CHECK(cls.disc_residual < 1e-9);
  }

  TEST_CASE("kind names are stable output tokens") {
    CHECK(jct::to_string(jct::EpKind::PTSymmetric) == "pt_symmetric");
    CHECK(jct::to_string(jct::EpKind::PTBroken) == "pt_broken");
    CHECK(jct::to_string(jct::EpKind::EP2) == "ep2");
    CHECK(jct::to_string(jct::EpKind::EP3) == "ep3");
  }

  TEST_CASE("grid values hit exact endpoints and the exact midpoint") {
    const jct::GridSpec grid{0.25, 2.0, 50};
    const auto v = grid.values();
    CHECK(v.size() == 50);
    CHECK(v.front() == 0.25);
    CHECK(v.back() == 2.0);
    CHECK(v[21] == 1.0);  // 0.25 + 1.75 * 21/49 lands exactly on 1
  }

  TEST_CASE("critical surface masks unreachable corners instead of aborting") {
    ModelParams fixed = ring(20.0, 0.3, 0.01);
    fixed.g2 = 0.3;
    fixed.j3 = 0.01;
    const jct::GridSpec gr{0.25, 2.0, 8};
    const jct::GridSpec jr{0.25, 2.0, 8};
    const auto set = jct::sweep_surface(gr, jr, fixed);
    CHECK(set.g_ratio.size() == 8);
    CHECK(set.j_ratio.size() == 8);

    std::size_t valid = 0, masked = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const auto k = set.index(i, j);
        REQUIRE(set.theta_c[k].has_value() == set.gamma_c[k].has_value());
        if (set.theta_c[k]) {
          ++valid;
          CHECK(*set.theta_c[k] >= 0.0);
          CHECK(*set.theta_c[k] <= M_PI / 3);
          CHECK(*set.gamma_c[k] > 0.0);
        } else {
          ++masked;
        }
      }
    }
    CHECK(valid > 0);
    CHECK(masked > 0);  // the strongly lopsided corner is out of reach
  }
}
