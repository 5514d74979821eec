#include "favdist/geometry.hpp"

#include <cmath>

namespace favdist {

double CircleAxis::distance_to_axis(const Vec3& p) const {
  const Vec3 rel = p - center;
  return (rel - rel.dot(axis) * axis).norm();
}

double CircleAxis::distance_to_circle(const Vec3& p) const {
  const Vec3 rel = p - center;
  const double h = rel.dot(axis);
  const double rho = (rel - h * axis).norm();
  return std::hypot(h, rho - radius);
}

double CircleAxis::axis_radius(double h) const { return std::hypot(radius, h); }

std::optional<CircleAxis> circumcircle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = b - a;
  const Vec3 v = c - a;
  const Vec3 w = u.cross(v);
  const double w2 = w.squaredNorm();
  if (!(w2 > 1e-20 * u.squaredNorm() * v.squaredNorm())) return std::nullopt;
  const Vec3 offset = (u.squaredNorm() * v.cross(w) + v.squaredNorm() * w.cross(u)) / (2.0 * w2);
  CircleAxis out;
  out.center = a + offset;
  out.axis = w / std::sqrt(w2);
  out.radius = offset.norm();
  return out;
}

}  // namespace favdist
