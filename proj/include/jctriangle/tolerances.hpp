#pragma once

namespace jct {

// Shared numeric thresholds. Values are part of the library contract and are
// echoed into CLI output headers, so change them only with tests in hand.

// min |<w|v>| over unit-normalized left/right pairs below which an
// eigensystem is treated as defective (at or on top of an exceptional point)
inline constexpr double kDefectivenessTol = 1e-8;

// |Im E| below reality_tol * max(1, |Re E|) counts as a real eigenvalue
inline constexpr double kRealityTol = 1e-10;

// scaled |p|, |q|, |q^2+p^3| thresholds for exceptional-point classification
inline constexpr double kClassifyTol = 1e-9;

// eigenpair residual allowance, relative to the matrix scale
inline constexpr double kResidualTol = 1e-10;

// spectral vs series propagator agreement away from exceptional points
inline constexpr double kPropagatorTol = 1e-9;

}  // namespace jct
