#include "favdist/suspension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "favdist/bounds.hpp"

namespace favdist {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFrameTol = 1e-12;
constexpr unsigned kMaxJitterAttempts = 64;

// Rotation step between consecutive generic polygons.
const double kGoldenAngle = kPi * (3.0 - std::sqrt(5.0));

// Chord of the fix-up point: hits the axis points +-(sqrt 2 - 1).
const double kFixupRadius = std::sqrt(4.0 - 2.0 * std::sqrt(2.0));
// Central angle subtending that chord on the unit circle.
const double kFixupAngle = 2.0 * std::asin(kFixupRadius / 2.0);

double wrap_angle(double phi) {
  phi = std::fmod(phi, 2.0 * kPi);
  return phi < 0 ? phi + 2.0 * kPi : phi;
}

void check_frame(const Frame& f) {
  if (!f.center.allFinite()) throw InputError("frame centre is not finite");
  if (std::abs(f.axis.norm() - 1.0) > kFrameTol) throw InputError("frame axis is not a unit vector");
  if (std::abs(f.reference.norm() - 1.0) > kFrameTol) throw InputError("frame reference is not a unit vector");
  if (std::abs(f.axis.dot(f.reference)) > kFrameTol) throw InputError("frame reference is not orthogonal to the axis");
  if (!(f.circle_radius > 0.0) || !std::isfinite(f.circle_radius)) {
    throw InputError("frame circle radius must be positive");
  }
}

void check_circle_angles(const std::vector<double>& angles) {
  std::vector<double> wrapped;
  wrapped.reserve(angles.size());
  for (const double phi : angles) {
    if (!std::isfinite(phi)) throw InputError("circle angle is not finite");
    wrapped.push_back(wrap_angle(phi));
  }
  std::sort(wrapped.begin(), wrapped.end());
  for (std::size_t k = 0; k < wrapped.size(); ++k) {
    const double next = k + 1 < wrapped.size() ? wrapped[k + 1] : wrapped.front() + 2.0 * kPi;
    if (wrapped.size() > 1 && next - wrapped[k] <= 1e-9) throw InputError("circle angles repeat modulo 2 pi");
  }
}

struct BuildCheck {
  std::size_t circle_out_degree;
  std::int64_t expected;
};

PointSet3 checked_build(std::size_t n, const char* variant, SuspensionSpec (*make)(std::size_t, unsigned),
                        const BuildCheck& check) {
  for (unsigned attempt = 0; attempt < kMaxJitterAttempts; ++attempt) {
    const SuspensionSpec spec = make(n, attempt);
    PointSet3 ps = embed(spec);
    const FavDigraph g = build_digraph(ps, kDefaultTol);
    bool ok = static_cast<std::int64_t>(g.arc_count()) == check.expected;
    for (std::size_t v = spec.ell(); ok && v < ps.size(); ++v) ok = g.out_deg()[v] == check.circle_out_degree;
    if (!ok) continue;
    ps.meta["variant"] = variant;
    ps.meta["n"] = n;
    ps.meta["ell"] = spec.ell();
    ps.meta["c"] = spec.c();
    ps.meta["expected"] = check.expected;
    return ps;
  }
  throw std::logic_error(std::string(variant) + " construction for n = " + std::to_string(n) +
                         " hit accidental incidences on every rotation");
}

}  // namespace

PointSet3 embed(const SuspensionSpec& spec) {
  check_frame(spec.frame);
  if (spec.circle_angles.size() != spec.circle_radii.size()) {
    throw InputError("circle angles and circle radii differ in length");
  }
  check_circle_angles(spec.circle_angles);
  const Frame& f = spec.frame;
  const Vec3 u = f.reference;
  const Vec3 v = f.axis.cross(f.reference);
  const double R = f.circle_radius;

  PointSet3 ps;
  ps.points.reserve(spec.ell() + spec.c());
  ps.radii.reserve(spec.ell() + spec.c());
  for (const auto& alpha : spec.line_angles) {
    const double x = alpha.point();
    ps.points.push_back(f.center + (R * x) * f.axis);
    ps.radii.push_back(R * std::hypot(1.0, x));
  }
  for (std::size_t k = 0; k < spec.c(); ++k) {
    const double phi = spec.circle_angles[k];
    if (!(spec.circle_radii[k] > 0.0)) throw InputError("circle radius assignment must be positive");
    ps.points.push_back(f.center + R * (std::cos(phi) * u + std::sin(phi) * v));
    ps.radii.push_back(R * spec.circle_radii[k]);
  }
  ps.meta["ell"] = spec.ell();
  ps.meta["c"] = spec.c();
  return ps;
}

Partition suspension_partition(std::size_t ell, std::size_t c) {
  Partition p{{"L", {}}, {"C", {}}};
  for (std::size_t i = 0; i < ell; ++i) p[0].members.push_back(i);
  for (std::size_t i = 0; i < c; ++i) p[1].members.push_back(ell + i);
  return p;
}

SuspensionSplit extremal_split(std::size_t n) {
  if (n < 13) throw InputError("extremal construction needs n >= 13, got " + std::to_string(n));
  return {(n - 3) / 2, (n + 4) / 2};
}

SuspensionSplit hexagon_split(std::size_t n) {
  if (n < 13) throw InputError("hexagon construction needs n >= 13, got " + std::to_string(n));
  const std::size_t ell = (n - 2) / 2;
  return {ell, n - ell};
}

std::int64_t extremal_expected(std::size_t n) {
  const auto [ell, c] = extremal_split(n);
  return static_cast<std::int64_t>((ell + 4) * (c + 1)) - 5;
}

std::int64_t hexagon_expected(std::size_t n) {
  const auto [ell, c] = hexagon_split(n);
  return static_cast<std::int64_t>((ell + 3) * (c + 1)) - 4;
}

SuspensionSpec extremal_spec(std::size_t n, unsigned jitter) {
  const auto [ell, c] = extremal_split(n);
  SuspensionSpec spec;
  for (const auto& a : build_tree_line_set(ell)) spec.line_angles.push_back(a.fraction());

  const std::size_t squares = c / 4;
  const std::size_t extra = c % 4;
  const double shift = 0.0173 * jitter;
  const double square_r = std::sqrt(2.0);
  for (std::size_t j = 0; j < squares; ++j) {
    double offset = j * kGoldenAngle + shift;
    // With leftovers, squares 0 and 1 carry the vertices a, b at angle
    // +-gamma from the fix-up point p at angle 0.
    if (extra != 0 && j == 0) offset = kFixupAngle;
    if (extra != 0 && j == 1) offset = -kFixupAngle;
    for (int k = 0; k < 4; ++k) {
      spec.circle_angles.push_back(wrap_angle(offset + k * kPi / 2.0));
      spec.circle_radii.push_back(square_r);
    }
  }
  for (std::size_t k = 0; k < extra; ++k) {
    spec.circle_angles.push_back(k * kPi / 2.0);
    spec.circle_radii.push_back(kFixupRadius);
  }
  return spec;
}

SuspensionSpec hexagon_spec(std::size_t n, unsigned jitter) {
  const auto [ell, c] = hexagon_split(n);
  SuspensionSpec spec;
  for (const auto& a : build_tree_line_set(ell)) spec.line_angles.push_back(a.fraction());

  const std::size_t hexagons = c / 6;
  const std::size_t extra = c % 6;
  const double shift = 0.0173 * jitter;
  for (std::size_t j = 0; j < hexagons; ++j) {
    const double offset = j == 0 ? 0.0 : j * kGoldenAngle + shift;
    for (int k = 0; k < 6; ++k) {
      spec.circle_angles.push_back(wrap_angle(offset + k * kPi / 3.0));
      spec.circle_radii.push_back(1.0);
    }
  }
  // Leftover points sit at angle gamma past distinct vertices of hexagon 0
  // and favour the chord sqrt(4 - 2 sqrt 2): that vertex plus +-(sqrt 2 - 1).
  for (std::size_t k = 0; k < extra; ++k) {
    spec.circle_angles.push_back(wrap_angle(k * kPi / 3.0 + kFixupAngle));
    spec.circle_radii.push_back(kFixupRadius);
  }
  return spec;
}

PointSet3 build_extremal(std::size_t n) {
  return checked_build(n, "square", &extremal_spec, {4, extremal_expected(n)});
}

PointSet3 build_hexagon_variant(std::size_t n) {
  return checked_build(n, "hexagon", &hexagon_spec, {3, hexagon_expected(n)});
}

CircleAxis fit_circle(const PointSet3& ps, const std::vector<std::size_t>& circle_idx) {
  if (circle_idx.size() < 3) throw InputError("a circle needs at least 3 points");
  for (const std::size_t i : circle_idx) {
    if (i >= ps.size()) throw InputError("circle index out of range");
  }
  const Vec3& a = ps.points[circle_idx[0]];
  std::size_t far = circle_idx[1];
  for (const std::size_t i : circle_idx) {
    if ((ps.points[i] - a).norm() > (ps.points[far] - a).norm()) far = i;
  }
  const Vec3& b = ps.points[far];
  std::size_t third = circle_idx[0];
  double best = -1.0;
  for (const std::size_t i : circle_idx) {
    const double area = (b - a).cross(ps.points[i] - a).norm();
    if (area > best) {
      best = area;
      third = i;
    }
  }
  const auto circle = circumcircle(a, b, ps.points[third]);
  if (!circle) throw InputError("circle points are collinear");
  return *circle;
}

CountReport verify_suspension_counts(const PointSet3& ps, const std::vector<std::size_t>& line_idx,
                                     const std::vector<std::size_t>& circle_idx, double tol) {
  validate_shape(ps);
  const CircleAxis circle = fit_circle(ps, circle_idx);
  const double scale = std::max(1.0, circle.radius);
  for (const std::size_t i : circle_idx) {
    if (circle.distance_to_circle(ps.points[i]) > tol * scale) {
      throw InputError("not a suspension: point " + std::to_string(i) + " is off the circle");
    }
  }
  for (const std::size_t i : line_idx) {
    if (i >= ps.size()) throw InputError("line index out of range");
    const Vec3& p = ps.points[i];
    if (circle.distance_to_axis(p) > tol * scale) {
      throw InputError("not a suspension: point " + std::to_string(i) + " is off the axis");
    }
    if (!distance_matches(ps.radii[i], circle.axis_radius(circle.height(p)), tol)) {
      throw InputError("not a suspension: radius of axis point " + std::to_string(i) +
                       " differs from its distance to the circle");
    }
  }

  const FavDigraph g = build_digraph(ps, tol);
  const ArcDecomposition blocks = count_between(g, {{"L", line_idx}, {"C", circle_idx}});

  CountReport rep;
  rep.n = ps.size();
  rep.ell = line_idx.size();
  rep.c = circle_idx.size();
  rep.e_LC = blocks.between("L", "C");
  rep.e_L = blocks.between("L", "L");
  rep.e_CL = blocks.between("C", "L");
  rep.e_C = blocks.between("C", "C");
  rep.e_total = g.arc_count();
  rep.formula_value = f3_bounds(static_cast<std::int64_t>(rep.n)).suspension_cap;
  rep.lc_complete = rep.e_LC == rep.ell * rep.c;
  rep.line_bound = rep.e_L <= rep.ell;
  rep.circle_to_line_bound = rep.e_CL <= 2 * rep.c;
  rep.circle_bound = rep.e_C <= 2 * rep.c;
  rep.total_bound = static_cast<std::int64_t>(rep.e_total) <= rep.formula_value;
  rep.matches = rep.lc_complete && rep.line_bound && rep.circle_to_line_bound && rep.circle_bound && rep.total_bound;
  return rep;
}

}  // namespace favdist
