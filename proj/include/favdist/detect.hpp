#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "favdist/geometry.hpp"
#include "favdist/point_set.hpp"

namespace favdist {

struct DetectionResult {
  CircleAxis frame;
  std::vector<std::size_t> C_indices;
  std::vector<std::size_t> L_indices;
  std::vector<std::size_t> T_indices;
  std::vector<double> residuals;  // distance to circle-union-axis, per point
  std::size_t t = 0;
  std::size_t score = 0;  // |C| + |L| of the winning hypothesis
};

/// RANSAC recovery of the suspension (circle C, axis L) carrying most points.
///
/// Each iteration samples three points, fits their circumscribed circle and
/// counts the points within tol of the circle plus the axis points whose
/// radius equals their distance to the circle. The best hypothesis (ties to
/// the earliest iteration) classifies every point into C, L or T.
/// Throws InputError if n < 8, radii are missing, or every sample is collinear.
DetectionResult detect_suspension(const PointSet3& ps, double tol = 1e-6, std::size_t ransac_iters = 500,
                                  std::uint64_t seed = 1);

struct StabilityReport {
  std::size_t n = 0;
  double damage_fraction = 0.0;
  std::size_t damaged = 0;
  std::size_t e_value = 0;  // mode-oracle count after damage
  double e_ratio = 0.0;     // e_value / n^2
  double c_fraction = 0.0;  // |C| / n
  double l_fraction = 0.0;  // |L| / n
  double t_fraction = 0.0;  // t / n
  std::size_t t = 0;
};

/// Displaces floor(fraction * n) points of build_extremal(n) by a Gaussian
/// offset, reassigns mode-optimal radii, and re-runs detection.
/// Throws InputError unless n >= 50 and 0 <= fraction <= 0.2.
StabilityReport stability_experiment(std::size_t n, double damage_fraction, std::uint64_t seed);

}  // namespace favdist
