#include "jctriangle/pairing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "jctriangle/errors.hpp"

namespace jct {

namespace {

double assignment_cost(const std::vector<std::complex<double>>& from,
                       const std::vector<std::complex<double>>& to,
                       const std::vector<int>& perm) {
  double cost = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) cost += std::abs(to[perm[i]] - from[i]);
  return cost;
}

}  // namespace

std::vector<int> min_cost_assignment(const std::vector<std::complex<double>>& from,
                                     const std::vector<std::complex<double>>& to) {
  if (from.size() != to.size()) throw std::invalid_argument("size mismatch");
  if (from.size() > 8) throw std::invalid_argument("exhaustive assignment capped at n=8");

  std::vector<int> perm(from.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_cost = assignment_cost(from, to, perm);
  // lexicographic enumeration + strict improvement: ties keep the earliest
  // (identity-first) permutation, making sweep stitching deterministic
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double c = assignment_cost(from, to, perm);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  }
  return best;
}

std::array<int, 3> pair_by_continuity(const std::array<std::complex<double>, 3>& prev,
                                      const std::array<std::complex<double>, 3>& next,
                                      double ambiguity_tol) {
  const std::vector<std::complex<double>> from(prev.begin(), prev.end());
  const std::vector<std::complex<double>> to(next.begin(), next.end());

  std::vector<int> perm = {0, 1, 2};
  std::vector<int> best = perm;
  double best_cost = assignment_cost(from, to, perm);
  std::vector<int> second;
  double second_cost = std::numeric_limits<double>::infinity();
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double c = assignment_cost(from, to, perm);
    if (c < best_cost) {
      second = best;
      second_cost = best_cost;
      best_cost = c;
      best = perm;
    } else if (c < second_cost) {
      second = perm;
      second_cost = c;
    }
  }
  if (ambiguity_tol > 0.0 && !second.empty() && second_cost - best_cost <= ambiguity_tol) {
    // a second pairing is as good as the best one at the stated tolerance;
    // only object when it assigns a meaningfully different value to a branch
    double value_gap = 0.0;
    for (int i = 0; i < 3; ++i)
      value_gap = std::max(value_gap, std::abs(to[best[i]] - to[second[i]]));
    if (value_gap > ambiguity_tol)
      throw BranchPairingError("continuity pairing is ambiguous at the given tolerance");
  }
  return {best[0], best[1], best[2]};
}

}  // namespace jct
