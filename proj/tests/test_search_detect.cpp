#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "favdist/bounds.hpp"
#include "favdist/detect.hpp"
#include "favdist/search.hpp"
#include "favdist/suspension.hpp"
#include "oracles.hpp"

using namespace favdist;

namespace {

PointSet3 with_outliers(std::size_t n, std::uint64_t seed) {
  PointSet3 ps = build_extremal(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < 2; ++k) {
    const Vec3 dir = Vec3(g(rng), g(rng), g(rng)).normalized();
    ps.points.push_back(dir * (5.0 + 5.0 * std::fabs(g(rng))));
  }
  ps.radii = optimal_radii(ps.points).radii;
  return ps;
}

}  // namespace

TEST_CASE("search: n = 3 reaches the complete digraph") {
  for (const std::uint64_t seed : {1u, 2u, 77u}) {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.iterations = 1000;
    cfg.seed = seed;
    const SearchResult res = local_search(cfg);
    CHECK(res.e_value == 6);
    CHECK(oracle::count_arcs(res.best) == 6);
  }
}

TEST_CASE("search: suspension start never ends worse") {
  SearchConfig cfg;
  cfg.n = 13;
  cfg.iterations = 300;
  cfg.init = SearchInit::Suspension;
  const SearchResult res = local_search(cfg);
  CHECK(res.e_value >= 76);
  CHECK(oracle::count_arcs(res.best) == res.e_value);

  cfg.init = SearchInit::PerturbedSuspension;
  CHECK(local_search(cfg).e_value <= 13 * 12);
}

TEST_CASE("search: random start stays under the ceilings") {
  SearchConfig cfg;
  cfg.n = 13;
  cfg.iterations = 400;
  cfg.restarts = 3;
  cfg.seed = 9;
  const SearchResult res = local_search(cfg);
  CHECK(res.e_value <= 13 * 12);
  CHECK(static_cast<std::int64_t>(res.e_value) <= f3_bounds(13).upper);
  CHECK(oracle::count_arcs(res.best) == res.e_value);
  CHECK(res.best_restart < 3);
}

TEST_CASE("search: deterministic for a fixed seed") {
  SearchConfig cfg;
  cfg.n = 8;
  cfg.iterations = 300;
  cfg.restarts = 5;
  cfg.seed = 42;
  const SearchResult a = local_search(cfg);
  const SearchResult b = local_search(cfg);
  CHECK(a.e_value == b.e_value);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.accepted_moves == b.accepted_moves);
  REQUIRE(a.best.size() == b.best.size());
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    CHECK(a.best.points[i] == b.best.points[i]);
    CHECK(a.best.radii[i] == b.best.radii[i]);
  }

  // Restart r does not depend on how many restarts run alongside it.
  SearchConfig one = cfg;
  one.restarts = 1;
  SearchConfig more = cfg;
  more.restarts = 12;
  const SearchResult r1 = local_search(one);
  const SearchResult r12 = local_search(more);
  CHECK(r12.e_value >= r1.e_value);
  if (r12.best_restart == 0) CHECK(r12.best.points == r1.best.points);
}

TEST_CASE("search config validation") {
  SearchConfig cfg;
  cfg.n = 2;
  CHECK_THROWS_AS(local_search(cfg), InputError);
  cfg = SearchConfig{};
  cfg.decay = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = SearchConfig{};
  cfg.step_scale = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = SearchConfig{};
  cfg.n = 10;
  cfg.init = SearchInit::Suspension;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  CHECK(parse_search_init("perturbed-suspension") == SearchInit::PerturbedSuspension);
  CHECK_THROWS_AS(parse_search_init("grid"), InputError);
}

TEST_CASE("detect: clean construction") {
  const DetectionResult det = detect_suspension(build_extremal(20), 1e-6, 500, 1);
  CHECK(det.t == 0);
  CHECK(det.C_indices.size() == 12);
  CHECK(det.L_indices.size() == 8);
  CHECK(det.frame.radius == doctest::Approx(1.0));

  for (std::size_t n = 13; n <= 60; ++n) CHECK(detect_suspension(build_extremal(n)).t == 0);
  for (const std::size_t n : {13u, 26u, 45u}) CHECK(detect_suspension(build_hexagon_variant(n)).t == 0);
}

TEST_CASE("detect: two far outliers land in T") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointSet3 ps = with_outliers(20, seed);
    const DetectionResult det = detect_suspension(ps, 1e-6, 500, seed);
    CHECK(det.t == 2);
    CHECK(det.T_indices == std::vector<std::size_t>{20, 21});
  }
}

TEST_CASE("detect: a random ball has no large suspension") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PointSet3 ps;
  while (ps.points.size() < 20) {
    const Vec3 p(u(rng), u(rng), u(rng));
    if (p.norm() <= 1.0) ps.points.push_back(p);
  }
  ps.radii = optimal_radii(ps.points).radii;
  const DetectionResult det = detect_suspension(ps);
  // Any three points are concyclic; a fourth lies on their circle or axis
  // with probability zero.
  CHECK(det.t >= 17);
}

TEST_CASE("detect: soundness of the classification") {
  const double tol = 1e-6;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PointSet3 ps = with_outliers(31, seed);
    const DetectionResult det = detect_suspension(ps, tol, 300, seed);
    std::vector<std::size_t> all = det.C_indices;
    all.insert(all.end(), det.L_indices.begin(), det.L_indices.end());
    all.insert(all.end(), det.T_indices.begin(), det.T_indices.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> want(ps.size());
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = i;
    CHECK(all == want);

    const double scale = std::max(1.0, det.frame.radius);
    for (const auto i : det.C_indices) {
      CHECK(det.frame.distance_to_circle(ps.points[i]) <= tol * scale);
      CHECK(det.residuals[i] <= tol * scale);
    }
    for (const auto i : det.L_indices) {
      const Vec3& p = ps.points[i];
      CHECK(det.residuals[i] <= tol * scale);
      // Distance from an axis point to the circle, recomputed from scratch.
      const Vec3 rel = p - det.frame.center;
      const double h = rel.dot(det.frame.axis);
      const double d = std::sqrt(h * h + det.frame.radius * det.frame.radius);
      CHECK(std::fabs(ps.radii[i] - d) <= tol * std::max(1.0, ps.radii[i]));
    }
  }
}

TEST_CASE("detect: input errors") {
  PointSet3 small = build_extremal(13);
  small.points.resize(7);
  small.radii.resize(7);
  CHECK_THROWS_AS(detect_suspension(small), InputError);
  CHECK_THROWS_AS(detect_suspension(build_extremal(13), 0.0), InputError);
  CHECK_THROWS_AS(detect_suspension(build_extremal(13), 1e-6, 0), InputError);

  PointSet3 line;
  for (int i = 0; i < 10; ++i) line.points.emplace_back(i, 0, 0);
  line.radii.assign(10, 1.0);
  CHECK_THROWS_AS(detect_suspension(line), InputError);
}

TEST_CASE("stability experiment") {
  const StabilityReport clean = stability_experiment(100, 0.0, 3);
  CHECK(clean.e_value == 2751);
  CHECK(clean.e_ratio == 0.2751);
  CHECK(clean.c_fraction == 0.52);
  CHECK(clean.l_fraction == 0.48);
  CHECK(clean.t == 0);
  CHECK(clean.damaged == 0);

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const StabilityReport hurt = stability_experiment(100, 0.05, seed);
    CHECK(hurt.damaged == 5);
    CHECK(hurt.t <= 5);
    CHECK(hurt.t_fraction == doctest::Approx(hurt.t / 100.0));
  }
  CHECK_THROWS_AS(stability_experiment(49, 0.0, 1), InputError);
  CHECK_THROWS_AS(stability_experiment(100, 0.21, 1), InputError);
  CHECK_THROWS_AS(stability_experiment(100, -0.01, 1), InputError);
}
