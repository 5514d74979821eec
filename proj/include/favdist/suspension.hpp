#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "favdist/digraph.hpp"
#include "favdist/geometry.hpp"
#include "favdist/line_dynamics.hpp"
#include "favdist/point_set.hpp"

namespace favdist {

/// Placement of a normalised suspension (unit circle, axis = real line) in space.
struct Frame {
  Vec3 center = Vec3::Zero();
  Vec3 axis = Vec3::UnitX();
  double circle_radius = 1.0;
  /// Unit vector orthogonal to `axis`; circle angle 0 points this way.
  Vec3 reference = Vec3::UnitY();
};

/// Symbolic suspension before embedding. Line points are angles in units of
/// pi (x = -cot(pi * alpha)); circle points are angles in radians, with
/// radii in units of the circle radius.
struct SuspensionSpec {
  std::vector<AngleFraction> line_angles;
  std::vector<double> circle_angles;
  std::vector<double> circle_radii;
  Frame frame;

  std::size_t ell() const { return line_angles.size(); }
  std::size_t c() const { return circle_angles.size(); }
};

/// Line points first (indices 0..l-1), then circle points. Line radii are
/// sqrt(1 + x^2) scaled by the circle radius. Throws InputError on a
/// non-orthonormal frame, mismatched lengths, or repeated circle angles.
PointSet3 embed(const SuspensionSpec& spec);

/// Partition {"L": 0..l-1, "C": l..l+c-1} matching embed()'s ordering.
Partition suspension_partition(std::size_t ell, std::size_t c);

struct SuspensionSplit {
  std::size_t ell = 0;
  std::size_t c = 0;
};

/// l = floor((n - 3)/2), c = ceil((n + 3)/2).
SuspensionSplit extremal_split(std::size_t n);
/// l = floor((n - 2)/2), c = n - l.
SuspensionSplit hexagon_split(std::size_t n);

/// (l + 4)(c + 1) - 5 for the extremal split of n.
std::int64_t extremal_expected(std::size_t n);
/// (l + 3)(c + 1) - 4 for the hexagon split of n.
std::int64_t hexagon_expected(std::size_t n);

/// Square construction with every circle vertex of out-degree 4.
SuspensionSpec extremal_spec(std::size_t n, unsigned jitter = 0);
/// Hexagon construction with every circle vertex of out-degree 3.
SuspensionSpec hexagon_spec(std::size_t n, unsigned jitter = 0);

/// Embeds extremal_spec(n), checks the out-degree profile and the arc count
/// by brute force, and retries with a different rotation if an accidental
/// incidence appears. meta carries variant, n, ell, c and expected.
/// Throws InputError for n < 13.
PointSet3 build_extremal(std::size_t n);
PointSet3 build_hexagon_variant(std::size_t n);

/// Circle through the points of `circle_idx` (chosen as a well-conditioned
/// triple). Throws InputError with fewer than 3 usable points.
CircleAxis fit_circle(const PointSet3& ps, const std::vector<std::size_t>& circle_idx);

struct CountReport {
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t c = 0;
  std::size_t e_LC = 0;
  std::size_t e_L = 0;
  std::size_t e_CL = 0;
  std::size_t e_C = 0;
  std::size_t e_total = 0;
  std::int64_t formula_value = 0;  // ceil(n^2/4 + 5n/2) + 2
  bool lc_complete = false;        // e_LC == l c
  bool line_bound = false;         // e_L <= l
  bool circle_to_line_bound = false;
  bool circle_bound = false;
  bool total_bound = false;
  bool matches = false;  // all of the above
};

/// Four-block decomposition of a suspension given its (L, C) split. Throws
/// InputError if C is not concyclic, L is off the axis, or an L radius is
/// not the distance to the circle, all at `tol` relative to the circle radius.
CountReport verify_suspension_counts(const PointSet3& ps, const std::vector<std::size_t>& line_idx,
                                     const std::vector<std::size_t>& circle_idx, double tol = kDefaultTol);

}  // namespace favdist
