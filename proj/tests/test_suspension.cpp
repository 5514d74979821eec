#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "favdist/bounds.hpp"
#include "favdist/suspension.hpp"
#include "oracles.hpp"

using namespace favdist;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

Frame random_frame(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const Eigen::Quaterniond q = Eigen::Quaterniond(g(rng), g(rng), g(rng), g(rng)).normalized();
  const Eigen::Matrix3d rot = q.toRotationMatrix();
  Frame f;
  f.center = Vec3(g(rng), g(rng), g(rng)) * 3.0;
  f.axis = rot * Vec3::UnitX();
  f.reference = rot * Vec3::UnitY();
  f.circle_radius = std::exp(g(rng) * 0.5);
  return f;
}

}  // namespace

TEST_CASE("embed examples") {
  SuspensionSpec spec;
  spec.line_angles = {AngleFraction(1, 2), AngleFraction(3, 4)};
  spec.circle_angles = {0.0};
  spec.circle_radii = {std::sqrt(2.0)};
  const PointSet3 ps = embed(spec);
  REQUIRE(ps.size() == 3);
  CHECK((ps.points[0] - Vec3(0, 0, 0)).norm() < 1e-15);
  CHECK(ps.radii[0] == doctest::Approx(1.0));
  CHECK((ps.points[1] - Vec3(1, 0, 0)).norm() < 1e-15);
  CHECK(ps.radii[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK((ps.points[2] - Vec3(0, 1, 0)).norm() < 1e-15);
  CHECK((ps.points[2] - ps.points[1]).norm() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("embed rejects a bad frame or repeated circle angles") {
  SuspensionSpec spec;
  spec.line_angles = {AngleFraction(1, 2)};
  spec.circle_angles = {0.0, 1.0};
  spec.circle_radii = {1.0, 1.0};
  spec.frame.axis = Vec3(1, 0.1, 0);
  CHECK_THROWS_AS(embed(spec), InputError);
  spec.frame = Frame{};
  spec.frame.reference = Vec3(1, 0, 0);
  CHECK_THROWS_AS(embed(spec), InputError);
  spec.frame = Frame{};
  spec.circle_angles = {0.0, 2.0 * std::numbers::pi};
  CHECK_THROWS_AS(embed(spec), InputError);
  spec.circle_angles = {0.0};
  CHECK_THROWS_AS(embed(spec), InputError);
}

TEST_CASE("extremal construction: stated examples") {
  struct Case {
    std::size_t n, ell, c;
    std::size_t e;
  };
  for (const Case k : {Case{13, 5, 8, 76}, Case{14, 5, 9, 85}, Case{100, 48, 52, 2751}}) {
    const PointSet3 ps = build_extremal(k.n);
    CHECK(ps.size() == k.n);
    CHECK(ps.meta["ell"] == k.ell);
    CHECK(ps.meta["c"] == k.c);
    CHECK(oracle::count_arcs(ps) == k.e);
    CHECK(static_cast<std::int64_t>(k.e) == f3_bounds(static_cast<std::int64_t>(k.n)).lower);
  }
  CHECK_THROWS_AS(build_extremal(12), InputError);
}

TEST_CASE("extremal construction: block counts") {
  for (std::size_t n = 13; n <= 60; ++n) {
    const PointSet3 ps = build_extremal(n);
    const auto [ell, c] = extremal_split(n);
    const auto L = range(0, ell), C = range(ell, n), S = range(0, n);
    CHECK(oracle::count_block(ps, L, C) == ell * c);
    CHECK(oracle::count_block(ps, L, L) == ell - 1);
    CHECK(oracle::count_block(ps, C, S) == 4 * c);
    CHECK(oracle::count_block(ps, C, L) <= 2 * c);
    CHECK(oracle::count_block(ps, C, C) <= 2 * c);
  }
}

TEST_CASE("fix-up chords") {
  const double gamma = 2.0 * std::asin(std::sqrt(4.0 - 2.0 * std::sqrt(2.0)) / 2.0);
  CHECK(2.0 * std::sin(gamma) == doctest::Approx(std::sqrt(8.0 * (std::sqrt(2.0) - 1.0))).epsilon(1e-15));

  for (const std::size_t n : {14u, 16u, 18u, 103u}) {
    const SuspensionSpec spec = extremal_spec(n);
    REQUIRE(spec.c() % 4 != 0);
    const PointSet3 ps = embed(spec);
    const std::size_t ell = spec.ell();
    const std::size_t squares = spec.c() / 4;
    const Vec3& a = ps.points[ell];      // square 0, vertex 0
    const Vec3& b = ps.points[ell + 4];  // square 1, vertex 0
    const Vec3& p = ps.points[ell + 4 * squares];
    CHECK(std::fabs((a - p).norm() - std::sqrt(4.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
    CHECK(std::fabs((b - p).norm() - std::sqrt(4.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
    CHECK(std::fabs((a - b).norm() - std::sqrt(8.0 * (std::sqrt(2.0) - 1.0))) <= 1e-12);
  }
}

TEST_CASE("hexagon variant") {
  const PointSet3 h20 = build_hexagon_variant(20);
  const std::size_t eh = oracle::count_arcs(h20);
  CHECK(eh < 151);
  CHECK(static_cast<std::int64_t>(eh) == hexagon_expected(20));

  for (std::size_t n = 13; n <= 40; ++n) {
    const PointSet3 ps = build_hexagon_variant(n);
    const auto [ell, c] = hexagon_split(n);
    const FavDigraph g = build_digraph(ps);
    for (std::size_t v = ell; v < n; ++v) CHECK(g.out_deg()[v] == 3);
    CHECK(static_cast<std::int64_t>(g.arc_count()) == static_cast<std::int64_t>((ell + 3) * (c + 1)) - 4);
    if (c % 6 == 0) {
      // Only the axis point 0 is reached from the circle.
      CHECK(oracle::count_block(ps, range(ell, n), range(0, ell)) == c);
    }
  }
  CHECK_THROWS_AS(build_hexagon_variant(12), InputError);
}

TEST_CASE("verify_suspension_counts on the n = 13 construction") {
  const PointSet3 ps = build_extremal(13);
  const CountReport rep = verify_suspension_counts(ps, range(0, 5), range(5, 13));
  CHECK(rep.e_LC == 40);
  CHECK(rep.e_L == 4);
  CHECK(rep.e_CL + rep.e_C == 32);
  CHECK(rep.e_total == 76);
  CHECK(rep.formula_value == 77);
  CHECK(rep.matches);
}

TEST_CASE("verify_suspension_counts rejects a corrupted line radius or stray point") {
  PointSet3 ps = build_extremal(13);
  ps.radii[2] *= 1.01;
  CHECK_THROWS_AS(verify_suspension_counts(ps, range(0, 5), range(5, 13)), InputError);

  ps = build_extremal(13);
  ps.points[7] += Vec3(0.0, 0.0, 0.05);
  CHECK_THROWS_AS(verify_suspension_counts(ps, range(0, 5), range(5, 13)), InputError);

  ps = build_extremal(13);
  ps.points[1] += Vec3(0.0, 0.05, 0.0);
  CHECK_THROWS_AS(verify_suspension_counts(ps, range(0, 5), range(5, 13)), InputError);
}

TEST_CASE("random suspension with n = 50 stays under the cap") {
  std::mt19937_64 rng(50);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SuspensionSpec spec;
  // A random subtree of the successor tree.
  std::vector<DyadicAngle> tree = {DyadicAngle(1, 1)};
  while (tree.size() < 20) {
    const DyadicAngle parent = tree[static_cast<std::size_t>(unit(rng) * tree.size())];
    const DyadicAngle child = dy_shift(parent, unit(rng) < 0.5 ? ShiftOp::SuccMinus : ShiftOp::SuccPlus);
    if (std::find(tree.begin(), tree.end(), child) == tree.end() && child.depth() <= 10) tree.push_back(child);
  }
  for (const auto& a : tree) spec.line_angles.push_back(a.fraction());
  // 30 circle points drawn from the vertices of 10 randomly rotated squares.
  std::vector<double> grid;
  for (int sq = 0; sq < 10; ++sq) {
    const double off = unit(rng) * std::numbers::pi / 2.0;
    for (int k = 0; k < 4; ++k) grid.push_back(off + k * std::numbers::pi / 2.0);
  }
  std::shuffle(grid.begin(), grid.end(), rng);
  spec.circle_angles.assign(grid.begin(), grid.begin() + 30);
  spec.circle_radii.assign(30, 1.0);
  PointSet3 ps = embed(spec);
  ps.radii = optimal_radii(ps.points).radii;
  const CountReport rep = verify_suspension_counts(ps, range(0, 20), range(20, 50));
  CHECK(rep.formula_value == 752);
  CHECK(static_cast<std::int64_t>(rep.e_total) <= 752);
  CHECK(rep.matches);
}

TEST_CASE("arc counts are invariant under rigid motions of the frame") {
  std::mt19937_64 rng(17);
  for (const std::size_t n : {13u, 22u, 41u}) {
    SuspensionSpec spec = extremal_spec(n);
    const std::size_t base = oracle::count_arcs(embed(spec));
    for (int trial = 0; trial < 5; ++trial) {
      spec.frame = random_frame(rng);
      const PointSet3 moved = embed(spec);
      CHECK(oracle::count_arcs(moved) == base);
      const CountReport rep = verify_suspension_counts(moved, range(0, spec.ell()), range(spec.ell(), n));
      CHECK(rep.e_total == base);
      CHECK(rep.matches);
    }
  }
}
