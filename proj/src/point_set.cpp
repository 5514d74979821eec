#include "favdist/point_set.hpp"

#include <cmath>
#include <sstream>

namespace favdist {

void validate_shape(const PointSet3& ps) {
  if (ps.points.size() != ps.radii.size()) {
    std::ostringstream msg;
    msg << "point set has " << ps.points.size() << " points but " << ps.radii.size() << " radii";
    throw InputError(msg.str());
  }
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    if (!ps.points[i].allFinite()) {
      throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    const double r = ps.radii[i];
    if (!(r > 0.0) || !std::isfinite(r)) {
      std::ostringstream msg;
      msg << "radius of point " << i << " must be positive and finite, got " << r;
      throw InputError(msg.str());
    }
  }
}

void check_distinct(const std::vector<Vec3>& points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if ((points[i] - points[j]).norm() <= tol) {
        std::ostringstream msg;
        msg << "duplicate points: indices " << i << " and " << j << " are within " << tol;
        throw InputError(msg.str());
      }
    }
  }
}

void validate(const PointSet3& ps, double tol) {
  validate_shape(ps);
  check_distinct(ps.points, tol);
}

double diameter(const std::vector<Vec3>& points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, (points[i] - points[j]).norm());
    }
  }
  return best;
}

}  // namespace favdist
