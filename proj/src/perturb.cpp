#include "jctriangle/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jctriangle/errors.hpp"
#include "jctriangle/pairing.hpp"

namespace jct {

namespace {

void check_site(int site) {
  if (site < 1 || site > 3) throw std::invalid_argument("site must be 1, 2 or 3");
}

Complex minor2(const Matrix3c& m, int i, int j) {
  return m(i, i) * m(j, j) - m(i, j) * m(j, i);
}

}  // namespace

CubicCoeffs perturbed_cubic_coeffs(const EffectiveMatrix& m, int site) {
  check_site(site);
  const Matrix3c& a = m.entries;

  CubicCoeffs c;
  c.site = site;
  c.a = a.trace();
  c.b = minor2(a, 0, 1) + minor2(a, 0, 2) + minor2(a, 1, 2);
  c.u = -a.determinant();

  const int s = site - 1;
  const int i = s == 0 ? 1 : 0;
  const int j = s == 2 ? 1 : 2;
  c.c = a(i, i) + a(j, j);
  c.d = -minor2(a, i, j);
  return c;
}

CubicCoeffs perturbed_cubic_coeffs(const ModelParams& params, int site) {
  return perturbed_cubic_coeffs(build_effective_matrix(params), site);
}

std::array<Complex, 3> solve_cubic(Complex A, Complex B, Complex C) {
  // depress with z = t - A/3, then reuse the labeled depressed solver
  const Complex P = B - A * A / 3.0;
  const Complex Q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
  auto roots = depressed_cubic_roots(P / 3.0, Q / 2.0);
  for (auto& z : roots) {
    z -= A / 3.0;
    // one Newton step squeezes the last digits out of cancellation-prone data
    const Complex f = ((z + A) * z + B) * z + C;
    const Complex df = (3.0 * z + 2.0 * A) * z + B;
    if (std::abs(df) > 0.0) {
      const Complex step = f / df;
      if (std::abs(step) < 1.0) z -= step;  // guard runaway steps near multiple roots
    }
  }
  return roots;
}

std::array<Complex, 3> perturbed_cubic_roots(const CubicCoeffs& coeffs, double epsilon) {
  return solve_cubic(-(coeffs.a + epsilon), coeffs.b + coeffs.c * epsilon,
                     coeffs.u + coeffs.d * epsilon);
}

std::array<Complex, 3> exact_perturbed_spectrum(const ModelParams& params,
                                                const Perturbation& pert) {
  check_site(pert.site);
  const EffectiveMatrix m = build_effective_matrix(params);
  Matrix3c shifted = m.entries;
  shifted(pert.site - 1, pert.site - 1) += pert.epsilon;

  const Spectrum s = numeric_eigensystem(shifted);
  const auto base = cardano_eigenvalues(params);

  std::vector<Complex> want(base.begin(), base.end());
  std::vector<Complex> have(s.eigenvalues.data(), s.eigenvalues.data() + 3);
  const std::vector<int> perm = min_cost_assignment(want, have);
  return {have[perm[0]], have[perm[1]], have[perm[2]]};
}

std::array<Complex, 3> Puiseux3::predict(double epsilon) const {
  const double e13 = std::cbrt(epsilon);
  const double e23 = e13 * e13;
  std::array<Complex, 3> out;
  for (int n = 0; n < 3; ++n) out[n] = first_order[n] * e13 + second_order[n] * e23;
  return out;
}

std::array<double, 2> Puiseux3::re_splittings(double epsilon) const {
  const auto d = predict(epsilon);
  return {std::abs(std::real(d[0] - d[1])), std::abs(std::real(d[0] - d[2]))};
}

Puiseux3 puiseux_3ep(const CubicCoeffs& coeffs, double tol) {
  Puiseux3 p;
  p.e0 = coeffs.a / 3.0;
  p.eta = -p.e0 * p.e0 + coeffs.c * p.e0 + coeffs.d;
  p.v = coeffs.c - 2.0 * p.e0;
  if (std::abs(p.eta) <= tol)
    throw DegenerateExpansionError("cube-root response degenerates: eta vanishes");

  const Complex eta13 = cube_root(p.eta);
  for (int n = 1; n <= 3; ++n) {
    const Complex zeta = std::polar(1.0, (2.0 * n + 1.0) * M_PI / 3.0);
    p.first_order[n - 1] = zeta * eta13;
    p.second_order[n - 1] = -(p.v / 3.0) * std::conj(zeta) / eta13;
  }
  return p;
}

Puiseux3 puiseux_3ep(const ModelParams& params, int site) {
  return puiseux_3ep(perturbed_cubic_coeffs(params, site));
}

std::array<Complex, 2> Puiseux2::predict(double epsilon) const {
  const double root = std::sqrt(epsilon);
  return {c1 * root, -c1 * root};
}

Complex Puiseux2::split(double epsilon) const { return 2.0 * c1 * std::sqrt(epsilon); }

double Puiseux2::alpha_re_split(double epsilon) const {
  return std::real(-2.0 * std::sqrt(alpha)) * std::sqrt(epsilon);
}

Puiseux2 puiseux_2ep(const EffectiveMatrix& m, int site, Complex double_root,
                     Complex other_root) {
  const CubicCoeffs coeffs = perturbed_cubic_coeffs(m, site);

  Puiseux2 p;
  p.e0 = double_root;
  p.e_other = other_root;

  const Complex eta = -p.e0 * p.e0 + coeffs.c * p.e0 + coeffs.d;
  const Complex denom = coeffs.a - 3.0 * p.e0;
  if (std::abs(denom) < 1e-14)
    throw DegenerateExpansionError(
        "square-root response degenerates: double root sits at the triple point");
  p.c1 = std::sqrt(eta / denom);

  // closed-form prefactor candidate built from the diagonal, kept for
  // comparison against c1 (it tracks, but does not match, the exact split)
  const Complex w_pert = m.entries(site - 1, site - 1);
  Complex w_rest = 0.0;
  for (int k = 0; k < 3; ++k)
    if (k != site - 1) w_rest += m.entries(k, k);
  const Complex radicand =
      9.0 * (p.e0 - w_pert) * (p.e0 - w_pert) - 5.0 * (w_rest - 2.0 * p.e0) * (w_rest - 2.0 * p.e0);
  p.alpha_principal_branch = !(radicand.imag() == 0.0 && radicand.real() >= 0.0);
  p.alpha = -std::sqrt(radicand) / 5.0 - 3.0 * (p.e0 - w_pert) / 5.0;
  return p;
}

Puiseux2 puiseux_2ep(const ModelParams& params, int site) {
  const EffectiveMatrix m = build_effective_matrix(params);
  const auto e = cardano_eigenvalues(params);

  int bi = 0, bj = 1;
  double best = std::abs(e[0] - e[1]);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const double gap = std::abs(e[pr[0]] - e[pr[1]]);
    if (gap < best) {
      best = gap;
      bi = pr[0];
      bj = pr[1];
    }
  }
  const Complex double_root = 0.5 * (e[bi] + e[bj]);
  const Complex other = e[3 - bi - bj];
  return puiseux_2ep(m, site, double_root, other);
}

PerturbationLadder trace_ladder(const ModelParams& params, int site,
                                const std::vector<double>& epsilons, Complex e0,
                                const std::array<Complex, 3>& seed_predictions) {
  check_site(site);
  if (epsilons.empty()) throw std::invalid_argument("ladder needs at least one epsilon");
  if (!std::is_sorted(epsilons.begin(), epsilons.end()))
    throw std::invalid_argument("ladder epsilons must ascend");

  PerturbationLadder ladder;
  ladder.epsilons = epsilons;
  ladder.roots.reserve(epsilons.size());
  ladder.shifts.reserve(epsilons.size());

  std::array<Complex, 3> prev;
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    auto raw = exact_perturbed_spectrum(params, Perturbation{site, epsilons[k]});
    std::array<Complex, 3> target;
    if (k == 0)
      for (int n = 0; n < 3; ++n) target[n] = e0 + seed_predictions[n];
    else
      target = prev;

    const auto perm = pair_by_continuity(target, raw);
    std::array<Complex, 3> ordered;
    for (int n = 0; n < 3; ++n) ordered[n] = raw[perm[n]];

    std::array<Complex, 3> shift;
    for (int n = 0; n < 3; ++n) shift[n] = ordered[n] - e0;
    ladder.roots.push_back(ordered);
    ladder.shifts.push_back(shift);
    prev = ordered;
  }
  return ladder;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("log grid needs at least 2 nodes");
  if (!(lo > 0.0) || !(hi > 0.0)) throw std::invalid_argument("log grid needs positive bounds");
  std::vector<double> v(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    v[i] = std::exp(llo + (lhi - llo) * (static_cast<double>(i) / (n - 1)));
  v.front() = lo;
  v.back() = hi;
  return v;
}

}  // namespace jct
