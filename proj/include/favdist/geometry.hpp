#pragma once

#include <optional>

#include "favdist/point_set.hpp"

namespace favdist {

/// A circle in 3-space and, implicitly, its axis of symmetry.
struct CircleAxis {
  Vec3 center = Vec3::Zero();
  Vec3 axis = Vec3::UnitX();  // unit normal of the circle plane
  double radius = 1.0;

  /// Signed position along the axis, measured from the centre.
  double height(const Vec3& p) const { return (p - center).dot(axis); }
  double distance_to_axis(const Vec3& p) const;
  double distance_to_circle(const Vec3& p) const;
  /// Distance from an axis point at signed height h to every circle point.
  double axis_radius(double h) const;
};

/// Circumscribed circle of three points; nullopt when they are (nearly) collinear.
std::optional<CircleAxis> circumcircle(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace favdist
