#pragma once

#include <array>
#include <complex>
#include <vector>

namespace jct {

// Permutation sigma minimizing sum_i |next[sigma[i]] - prev[i]|; result[i] is
// the index into `next` continuing branch i. Exact ties are broken toward the
// lexicographically smallest permutation (identity first) so sweeps crossing
// degeneracies stay deterministic. With ambiguity_tol > 0, throws
// BranchPairingError when a second, genuinely different pairing comes within
// that tolerance of the best one.
std::array<int, 3> pair_by_continuity(const std::array<std::complex<double>, 3>& prev,
                                      const std::array<std::complex<double>, 3>& next,
                                      double ambiguity_tol = 0.0);

// Same cost rule for arbitrary equal-length sets (n <= 8, exhaustive).
std::vector<int> min_cost_assignment(const std::vector<std::complex<double>>& from,
                                     const std::vector<std::complex<double>>& to);

}  // namespace jct
