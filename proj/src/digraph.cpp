#include "favdist/digraph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace favdist {

FavDigraph::FavDigraph(std::size_t n, std::vector<Arc> arcs, double tol)
    : n_(n), tol_(tol), arcs_(std::move(arcs)), out_adj_(n), out_deg_(n, 0), in_deg_(n, 0) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const auto& [i, j] : arcs_) {
    if (i >= n || j >= n || i == j) {
      throw InputError("arc (" + std::to_string(i) + ", " + std::to_string(j) + ") is invalid for n = " +
                       std::to_string(n));
    }
    out_adj_[i].push_back(j);
    ++out_deg_[i];
    ++in_deg_[j];
  }
}

bool FavDigraph::has_arc(std::size_t i, std::size_t j) const {
  if (i >= n_) return false;
  const auto& row = out_adj_[i];
  return std::binary_search(row.begin(), row.end(), j);
}

FavDigraph build_digraph(const PointSet3& ps, double tol) {
  if (!(tol >= 0.0)) throw InputError("tolerance must be nonnegative");
  validate_shape(ps);
  const std::size_t n = ps.size();
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = (ps.points[i] - ps.points[j]).norm();
      if (d <= tol) {
        std::ostringstream msg;
        msg << "duplicate points: indices " << i << " and " << j << " are within " << tol;
        throw InputError(msg.str());
      }
      if (distance_matches(d, ps.radii[i], tol)) arcs.emplace_back(i, j);
      if (distance_matches(d, ps.radii[j], tol)) arcs.emplace_back(j, i);
    }
  }
  return FavDigraph(n, std::move(arcs), tol);
}

std::size_t ArcDecomposition::between(const std::string& from, const std::string& to) const {
  const auto it = blocks.find({from, to});
  return it == blocks.end() ? 0 : it->second;
}

std::size_t ArcDecomposition::total() const {
  std::size_t sum = 0;
  for (const auto& [key, count] : blocks) sum += count;
  return sum;
}

ArcDecomposition count_between(const FavDigraph& g, const Partition& partition) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(g.n(), kUnassigned);
  std::set<std::string> labels;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (!labels.insert(partition[b].label).second) {
      throw InputError("partition label '" + partition[b].label + "' is repeated");
    }
    for (const std::size_t v : partition[b].members) {
      if (v >= g.n()) throw InputError("partition vertex " + std::to_string(v) + " out of range");
      if (block_of[v] != kUnassigned) {
        throw InputError("partition blocks overlap at vertex " + std::to_string(v));
      }
      block_of[v] = b;
    }
  }
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (block_of[v] == kUnassigned) {
      throw InputError("partition does not cover vertex " + std::to_string(v));
    }
  }

  ArcDecomposition out;
  for (const auto& a : partition) {
    for (const auto& b : partition) out.blocks[{a.label, b.label}] = 0;
  }
  for (const auto& [i, j] : g.arcs()) {
    ++out.blocks[{partition[block_of[i]].label, partition[block_of[j]].label}];
  }
  return out;
}

OptimalRadii optimal_radii(const std::vector<Vec3>& points, double tol) {
  const std::size_t n = points.size();
  if (n < 2) throw InputError("optimal_radii needs at least 2 points");
  if (!(tol >= 0.0)) throw InputError("tolerance must be nonnegative");
  check_distinct(points, tol);

  OptimalRadii out;
  out.radii.resize(n);
  std::vector<double> dist;
  dist.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    dist.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) dist.push_back((points[i] - points[j]).norm());
    }
    std::sort(dist.begin(), dist.end());
    std::size_t best_count = 0;
    double best_r = dist.front();
    for (std::size_t k = 0; k < dist.size(); ++k) {
      if (k > 0 && dist[k] == dist[k - 1]) continue;
      const double r = dist[k];
      const double slack = tol * std::max(1.0, r);
      // The sorted window [r - slack, r + slack] holds exactly the matches.
      const auto lo = std::lower_bound(dist.begin(), dist.end(), r - slack);
      auto hi = std::upper_bound(dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end(), r + slack);
      // Re-test the window edges with the exact predicate used by build_digraph.
      auto first = lo;
      while (first != hi && !distance_matches(*first, r, tol)) ++first;
      while (hi != first && !distance_matches(*(hi - 1), r, tol)) --hi;
      const auto count = static_cast<std::size_t>(hi - first);
      if (count > best_count) {
        best_count = count;
        best_r = r;
      }
    }
    out.radii[i] = best_r;
    out.e_value += best_count;
  }
  return out;
}

namespace {

struct KrsSearch {
  const std::vector<std::uint64_t>& out_mask;
  std::size_t n;
  std::size_t r;
  std::size_t s;

  bool run(std::size_t start, std::size_t depth, std::uint64_t common) const {
    if (static_cast<std::size_t>(std::popcount(common)) < s) return false;
    if (depth == r) return true;
    for (std::size_t v = start; v + (r - depth) <= n; ++v) {
      if (run(v + 1, depth + 1, common & out_mask[v])) return true;
    }
    return false;
  }
};

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

}  // namespace

bool contains_krs(const FavDigraph& g, std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw InputError("contains_krs needs r, s >= 1");
  const std::size_t n = g.n();
  if (n > 64) throw InputError("contains_krs supports at most 64 vertices");
  if (binomial(n, r) > static_cast<double>(1u << 22)) {
    throw InputError("contains_krs instance too large: C(" + std::to_string(n) + ", " + std::to_string(r) + ")");
  }
  if (r + s > n) return false;
  std::vector<std::uint64_t> out_mask(n, 0);
  for (const auto& [i, j] : g.arcs()) out_mask[i] |= std::uint64_t{1} << j;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return KrsSearch{out_mask, n, r, s}.run(0, 0, all);
}

}  // namespace favdist
