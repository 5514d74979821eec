#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <json.hpp>

namespace favdist {

using Vec3 = Eigen::Vector3d;

/// Default equality tolerance for the arc predicate |d - r| <= tol * max(1, r).
inline constexpr double kDefaultTol = 1e-9;

/// Raised for malformed point sets, frames and out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Relative distance test shared by every incidence check in the library.
inline bool distance_matches(double d, double r, double tol) {
  const double scale = r > 1.0 ? r : 1.0;
  const double diff = d - r;
  return (diff < 0 ? -diff : diff) <= tol * scale;
}

/// A finite point set S in 3-space together with its radius assignment r.
struct PointSet3 {
  std::vector<Vec3> points;
  std::vector<double> radii;
  nlohmann::json meta = nlohmann::json::object();

  std::size_t size() const { return points.size(); }
};

/// Checks lengths and radius positivity. Throws InputError.
void validate_shape(const PointSet3& ps);

/// Full validation: shape plus pairwise distinctness at `tol`.
void validate(const PointSet3& ps, double tol);

/// Throws InputError naming the first pair (i, j) with d(p_i, p_j) <= tol.
void check_distinct(const std::vector<Vec3>& points, double tol);

/// Largest pairwise distance.
double diameter(const std::vector<Vec3>& points);

}  // namespace favdist
