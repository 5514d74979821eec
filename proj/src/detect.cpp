#include "favdist/detect.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "favdist/digraph.hpp"
#include "favdist/suspension.hpp"

namespace favdist {
namespace {

enum class Role { Circle, Axis, Other };

struct Classifier {
  const PointSet3& ps;
  double tol;

  Role classify(const CircleAxis& frame, std::size_t i) const {
    const Vec3& p = ps.points[i];
    const double scale = std::max(1.0, frame.radius);
    if (frame.distance_to_circle(p) <= tol * scale) return Role::Circle;
    if (frame.distance_to_axis(p) <= tol * scale) {
      const double r = ps.radii[i];
      const double d = frame.axis_radius(frame.height(p));
      if (std::abs(r - d) <= tol * std::max(1.0, r)) return Role::Axis;
    }
    return Role::Other;
  }

  std::size_t score(const CircleAxis& frame) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) count += classify(frame, i) != Role::Other;
    return count;
  }
};

}  // namespace

DetectionResult detect_suspension(const PointSet3& ps, double tol, std::size_t ransac_iters, std::uint64_t seed) {
  const std::size_t n = ps.size();
  if (n < 8) throw InputError("suspension detection needs at least 8 points, got " + std::to_string(n));
  if (!(tol > 0.0)) throw InputError("detection tolerance must be positive");
  if (ransac_iters == 0) throw InputError("ransac_iters must be positive");
  validate_shape(ps);

  const Classifier classifier{ps, tol};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::optional<CircleAxis> best;
  std::size_t best_score = 0;
  for (std::size_t it = 0; it < ransac_iters && best_score < n; ++it) {
    const std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    while (b == a) b = pick(rng);
    std::size_t c = pick(rng);
    while (c == a || c == b) c = pick(rng);
    const auto circle = circumcircle(ps.points[a], ps.points[b], ps.points[c]);
    if (!circle) continue;
    const std::size_t s = classifier.score(*circle);
    if (!best || s > best_score) {
      best = circle;
      best_score = s;
    }
  }
  if (!best) throw InputError("every RANSAC sample was collinear");

  DetectionResult out;
  out.frame = *best;
  out.score = best_score;
  out.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& p = ps.points[i];
    out.residuals[i] = std::min(best->distance_to_circle(p), best->distance_to_axis(p));
    switch (classifier.classify(*best, i)) {
      case Role::Circle:
        out.C_indices.push_back(i);
        break;
      case Role::Axis:
        out.L_indices.push_back(i);
        break;
      case Role::Other:
        out.T_indices.push_back(i);
        break;
    }
  }
  out.t = out.T_indices.size();
  return out;
}

StabilityReport stability_experiment(std::size_t n, double damage_fraction, std::uint64_t seed) {
  if (n < 50) throw InputError("stability experiment needs n >= 50");
  if (!(damage_fraction >= 0.0 && damage_fraction <= 0.2)) {
    throw InputError("damage fraction must lie in [0, 0.2]");
  }
  PointSet3 ps = build_extremal(n);
  const auto damaged = static_cast<std::size_t>(std::floor(damage_fraction * static_cast<double>(n)));

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t k = 0; k < damaged; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, n - 1);
    std::swap(order[k], order[pick(rng)]);
  }
  std::normal_distribution<double> noise(0.0, 0.5);
  for (std::size_t k = 0; k < damaged; ++k) {
    Vec3& p = ps.points[order[k]];
    p += Vec3(noise(rng), noise(rng), noise(rng));
  }

  const OptimalRadii best = optimal_radii(ps.points, kDefaultTol);
  ps.radii = best.radii;
  const DetectionResult det = detect_suspension(ps, 1e-6, 500, seed ^ 0x9e3779b97f4a7c15ULL);

  StabilityReport rep;
  rep.n = n;
  rep.damage_fraction = damage_fraction;
  rep.damaged = damaged;
  rep.e_value = best.e_value;
  const double nd = static_cast<double>(n);
  rep.e_ratio = static_cast<double>(best.e_value) / (nd * nd);
  rep.c_fraction = static_cast<double>(det.C_indices.size()) / nd;
  rep.l_fraction = static_cast<double>(det.L_indices.size()) / nd;
  rep.t = det.t;
  rep.t_fraction = static_cast<double>(det.t) / nd;
  return rep;
}

}  // namespace favdist
