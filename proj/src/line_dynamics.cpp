#include "favdist/line_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace favdist {

double succ(double x, Branch branch) {
  const double h = std::hypot(1.0, x);
  if (branch == Branch::Plus) {
    return x >= 0.0 ? x + h : 1.0 / (h - x);
  }
  return x <= 0.0 ? x - h : -1.0 / (x + h);
}

double pred(double y) {
  if (y == 0.0) throw InputError("pred(0) is undefined: 0 has no in-neighbour on the axis");
  return 0.5 * (y - 1.0 / y);
}

double alpha_of_point(double x) { return 0.5 + std::atan(x) / std::numbers::pi; }

double point_of_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("angle fraction must lie in (0, 1)");
  return std::tan(std::numbers::pi * (alpha - 0.5));
}

AngleFraction::AngleFraction(std::int64_t n, std::int64_t d) {
  if (d <= 0 || n <= 0 || n >= d) {
    throw InputError("angle fraction " + std::to_string(n) + "/" + std::to_string(d) + " is not in (0, 1)");
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

double AngleFraction::point() const {
  const long double offset = static_cast<long double>(num) / static_cast<long double>(den) - 0.5L;
  return static_cast<double>(std::tan(std::numbers::pi_v<long double> * offset));
}

AngleFraction AngleFraction::doubled() const {
  std::int64_t twice = 2 * num;
  if (twice >= den) twice -= den;
  if (twice == 0) throw InputError("doubling 1/2 leaves (0, 1)");
  return {twice, den};
}

DyadicAngle::DyadicAngle(std::uint64_t num, unsigned exp) {
  if (exp == 0 || exp > kMaxExp || num == 0 || num >= (std::uint64_t{1} << exp)) {
    throw InputError("dyadic angle " + std::to_string(num) + "/2^" + std::to_string(exp) + " is not in (0, 1)");
  }
  while ((num & 1u) == 0) {
    num >>= 1;
    --exp;
  }
  num_ = num;
  exp_ = exp;
}

double DyadicAngle::value() const { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }

AngleFraction DyadicAngle::fraction() const {
  return {static_cast<std::int64_t>(num_), static_cast<std::int64_t>(std::uint64_t{1} << exp_)};
}

DyadicAngle dy_shift(const DyadicAngle& a, ShiftOp op) {
  const std::uint64_t k = a.num();
  const unsigned m = a.exp();
  switch (op) {
    case ShiftOp::SuccMinus:
      if (m + 1 > DyadicAngle::kMaxExp) throw InputError("dyadic angle too deep for successor");
      return {k, m + 1};
    case ShiftOp::SuccPlus:
      if (m + 1 > DyadicAngle::kMaxExp) throw InputError("dyadic angle too deep for successor");
      return {(std::uint64_t{1} << m) + k, m + 1};
    case ShiftOp::Pred: {
      const std::uint64_t full = std::uint64_t{1} << m;
      std::uint64_t twice = 2 * k;
      if (twice >= full) twice -= full;
      if (twice == 0) throw InputError("pred of angle 1/2 (the point 0) is undefined");
      return {twice, m};
    }
  }
  throw InputError("unknown shift op");
}

std::vector<DyadicAngle> build_tree_line_set(std::size_t ell) {
  if (ell < 5) throw InputError("line set needs at least 5 points, got " + std::to_string(ell));
  std::vector<DyadicAngle> out = {DyadicAngle(1, 1), DyadicAngle(1, 2), DyadicAngle(3, 2), DyadicAngle(3, 3),
                                  DyadicAngle(5, 3)};
  const std::set<DyadicAngle> mandatory(out.begin(), out.end());
  // Level m of the successor tree holds the odd numerators over 2^m.
  for (unsigned m = 3; out.size() < ell; ++m) {
    if (m > DyadicAngle::kMaxExp) throw InputError("line set too large");
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << m) && out.size() < ell; k += 2) {
      const DyadicAngle a(k, m);
      if (!mandatory.contains(a)) out.push_back(a);
    }
  }
  out.resize(ell);
  return out;
}

LineComponentStructure analyze_line_digraph(std::span<const double> xs, std::span<const double> radii, double tol) {
  const std::size_t n = xs.size();
  if (radii.size() != n) throw InputError("line digraph: points and radii differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(xs[i])) throw InputError("line digraph: non-finite point");
    const double expected = std::hypot(1.0, xs[i]);
    if (!distance_matches(radii[i], expected, tol)) {
      throw InputError("line digraph: radius of point " + std::to_string(i) +
                       " is not its distance to the unit circle");
    }
  }

  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = std::abs(xs[i] - xs[j]);
      if (d <= tol) throw InputError("line digraph: duplicate points " + std::to_string(i) + ", " + std::to_string(j));
      if (distance_matches(d, radii[i], tol)) arcs.emplace_back(i, j);
    }
  }
  const FavDigraph g(n, std::move(arcs), tol);

  LineComponentStructure out;
  out.arc_count = g.arc_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> in_nbr(n, kNone);
  for (std::size_t v = 0; v < n; ++v) {
    out.max_out_degree = std::max(out.max_out_degree, g.out_deg()[v]);
    out.max_in_degree = std::max(out.max_in_degree, g.in_deg()[v]);
  }
  if (out.max_out_degree > 2 || out.max_in_degree > 1) {
    throw InputError("line digraph violates the degree bounds (out <= 2, in <= 1)");
  }
  for (const auto& [i, j] : g.arcs()) in_nbr[j] = i;

  // Weak components by union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : g.arcs()) parent[find(i)] = find(j);

  std::vector<std::size_t> comp_of(n, kNone);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (comp_of[root] == kNone) {
      comp_of[root] = out.components.size();
      out.components.emplace_back();
    }
    out.components[comp_of[root]].vertices.push_back(v);
  }

  for (auto& comp : out.components) {
    // Walk backwards along in-neighbours: either a root or a repeated vertex.
    std::vector<std::size_t> walk;
    std::vector<bool> seen(n, false);
    std::size_t v = comp.vertices.front();
    while (v != kNone && !seen[v]) {
      seen[v] = true;
      walk.push_back(v);
      v = in_nbr[v];
    }
    if (v != kNone) {
      const auto start = std::find(walk.begin(), walk.end(), v);
      comp.cycle_vertices.assign(start, walk.end());
      std::reverse(comp.cycle_vertices.begin(), comp.cycle_vertices.end());
      const auto smallest = std::min_element(comp.cycle_vertices.begin(), comp.cycle_vertices.end());
      std::rotate(comp.cycle_vertices.begin(), smallest, comp.cycle_vertices.end());
    }
    for (const std::size_t u : comp.vertices) {
      if (in_nbr[u] == kNone) comp.roots.push_back(u);
    }
    std::set<Arc> cycle_arcs;
    for (std::size_t k = 0; k < comp.cycle_vertices.size(); ++k) {
      cycle_arcs.insert({comp.cycle_vertices[k], comp.cycle_vertices[(k + 1) % comp.cycle_vertices.size()]});
    }
    for (const std::size_t u : comp.vertices) {
      for (const std::size_t w : g.out_neighbours(u)) {
        if (!cycle_arcs.contains({u, w})) comp.tree_arcs.emplace_back(u, w);
      }
    }
  }
  return out;
}

LineComponentStructure analyze_line_digraph(std::span<const AngleFraction> angles, double tol) {
  std::vector<double> xs;
  std::vector<double> radii;
  xs.reserve(angles.size());
  radii.reserve(angles.size());
  for (const auto& a : angles) {
    xs.push_back(a.point());
    radii.push_back(std::hypot(1.0, xs.back()));
  }
  return analyze_line_digraph(xs, radii, tol);
}

std::vector<AngleFraction> doubling_cycle(std::int64_t p, std::int64_t q) {
  const AngleFraction start(p, q);
  std::vector<AngleFraction> orbit = {start};
  for (std::int64_t step = 0; step < q; ++step) {
    const AngleFraction next = orbit.back().doubled();
    if (next == start) return orbit;
    if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) break;
    orbit.push_back(next);
  }
  throw InputError("orbit of " + std::to_string(p) + "/" + std::to_string(q) + " is not purely periodic");
}

}  // namespace favdist
