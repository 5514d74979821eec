#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "favdist/point_set.hpp"

namespace favdist {

using Arc = std::pair<std::size_t, std::size_t>;

/// The favourite-distance digraph E_r(S): arc (i, j) iff d(p_i, p_j) = r_i
/// at the construction tolerance.
class FavDigraph {
 public:
  FavDigraph() = default;
  FavDigraph(std::size_t n, std::vector<Arc> arcs, double tol);

  std::size_t n() const { return n_; }
  double tol() const { return tol_; }
  /// Sorted lexicographically.
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::size_t>& out_deg() const { return out_deg_; }
  const std::vector<std::size_t>& in_deg() const { return in_deg_; }
  const std::vector<std::size_t>& out_neighbours(std::size_t i) const { return out_adj_[i]; }
  bool has_arc(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_ = 0;
  double tol_ = kDefaultTol;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_adj_;
  std::vector<std::size_t> out_deg_;
  std::vector<std::size_t> in_deg_;
};

/// O(n^2) pair scan. Throws InputError on bad radii or points closer than tol.
FavDigraph build_digraph(const PointSet3& ps, double tol = kDefaultTol);

/// A labelled vertex partition: each block is a name and its vertex indices.
struct PartitionBlock {
  std::string label;
  std::vector<std::size_t> members;
};
using Partition = std::vector<PartitionBlock>;

/// Arc counts e_r(A, B) for every ordered pair of blocks.
struct ArcDecomposition {
  std::map<std::pair<std::string, std::string>, std::size_t> blocks;

  std::size_t between(const std::string& from, const std::string& to) const;
  std::size_t total() const;
};

/// Throws InputError if the partition overlaps, misses a vertex, or repeats a label.
ArcDecomposition count_between(const FavDigraph& g, const Partition& partition);

struct OptimalRadii {
  std::vector<double> radii;
  std::size_t e_value = 0;
};

/// Exact inner maximisation of e_r over r for fixed points ("mode oracle").
///
/// Every candidate radius for p_i is one of its distances d to the other
/// points; its multiplicity is the number of distances within tol * max(1, d)
/// of it, which is exactly the out-degree build_digraph would assign. The
/// most frequent candidate wins, ties going to the smallest distance.
OptimalRadii optimal_radii(const std::vector<Vec3>& points, double tol = kDefaultTol);

/// Brute-force test for a directed K_{r,s}: some r-set of vertices with at
/// least s common out-neighbours. Limited to n <= 64 and C(n, r) <= 2^22.
bool contains_krs(const FavDigraph& g, std::size_t r, std::size_t s);

}  // namespace favdist
