#pragma once

// Dynamics of favourite distances on the axis of a unit circle.
//
// Identify the axis with the real line, the circle centre with 0. An axis
// point x whose radius is its distance to the circle, sqrt(1 + x^2), reaches
// exactly the two axis points x +- sqrt(1 + x^2) and is reached from at most
// one, (y - 1/y) / 2. In the angle coordinate alpha(x) = 1/2 + atan(x)/pi the
// successors halve alpha (prepending a binary digit) and the predecessor
// doubles it mod 1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "favdist/digraph.hpp"

namespace favdist {

enum class Branch { Minus, Plus };

/// x + sqrt(1 + x^2) or x - sqrt(1 + x^2), evaluated without cancellation.
double succ(double x, Branch branch);

/// (y - 1/y) / 2. Throws InputError for y = 0.
double pred(double y);

/// (pi/2 + atan x) / pi, in (0, 1).
double alpha_of_point(double x);

/// -cot(alpha * pi). Throws InputError unless 0 < alpha < 1.
double point_of_alpha(double alpha);

/// Exact rational angle num/den in (0, 1), kept in lowest terms.
struct AngleFraction {
  std::int64_t num = 1;
  std::int64_t den = 2;

  AngleFraction() = default;
  AngleFraction(std::int64_t num, std::int64_t den);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// The axis point -cot(pi * num / den), evaluated as tan(pi (num/den - 1/2)).
  double point() const;
  /// The rational that one predecessor step (doubling mod 1) maps this to.
  AngleFraction doubled() const;

  friend bool operator==(const AngleFraction&, const AngleFraction&) = default;
};

/// Dyadic angle k / 2^m in (0, 1) with k odd (1/2 is stored as (1, 1)).
class DyadicAngle {
 public:
  static constexpr unsigned kMaxExp = 62;

  DyadicAngle() = default;
  /// Reduces to canonical form. Throws InputError unless 0 < k / 2^m < 1.
  DyadicAngle(std::uint64_t num, unsigned exp);

  std::uint64_t num() const { return num_; }
  unsigned exp() const { return exp_; }
  /// Depth in the successor tree of 0; 1/2 has depth 0.
  unsigned depth() const { return exp_ - 1; }
  double value() const;
  double point() const { return fraction().point(); }
  AngleFraction fraction() const;

  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;
  friend auto operator<=>(const DyadicAngle& a, const DyadicAngle& b) {
    // Compare k_a 2^{m_b} with k_b 2^{m_a} after aligning exponents.
    const unsigned m = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (a.num_ << (m - a.exp_)) <=> (b.num_ << (m - b.exp_));
  }

 private:
  std::uint64_t num_ = 1;
  unsigned exp_ = 1;
};

enum class ShiftOp { SuccMinus, SuccPlus, Pred };

/// Exact shift dynamics. Pred of 1/2 (the point 0) throws InputError, as does
/// a successor that would need more than kMaxExp binary digits.
DyadicAngle dy_shift(const DyadicAngle& a, ShiftOp op);

/// The l-vertex subtree of the successor tree of 0 used by the extremal
/// construction: the root 1/2, then 1/4, 3/4, 3/8, 5/8 (points 0, -1, 1,
/// 1 - sqrt 2, sqrt 2 - 1), then breadth-first in increasing angle.
/// Throws InputError for l < 5.
std::vector<DyadicAngle> build_tree_line_set(std::size_t ell);

/// One weakly connected component of an axis digraph, in the caller's indices.
struct LineComponent {
  std::vector<std::size_t> vertices;        // ascending
  std::vector<std::size_t> cycle_vertices;  // in arc order; empty for a tree
  std::vector<std::size_t> roots;           // vertices without in-neighbour (trees)
  std::vector<Arc> tree_arcs;               // arcs not on the cycle
};

struct LineComponentStructure {
  std::vector<LineComponent> components;
  std::size_t arc_count = 0;
  std::size_t max_out_degree = 0;
  std::size_t max_in_degree = 0;
};

/// Decomposes the favourite-distance digraph of axis points xs with radii
/// sqrt(1 + x^2) (normalised frame). Throws InputError if a radius deviates
/// from that value, if points repeat, or if a degree bound (out <= 2, in <= 1)
/// fails.
LineComponentStructure analyze_line_digraph(std::span<const double> xs, std::span<const double> radii,
                                            double tol = kDefaultTol);

/// Same, for angles; radii are taken as sqrt(1 + x^2).
LineComponentStructure analyze_line_digraph(std::span<const AngleFraction> angles, double tol = kDefaultTol);

/// Orbit of p/q under doubling mod 1, starting at p/q, until it returns.
/// Throws InputError if the orbit is not purely periodic.
std::vector<AngleFraction> doubling_cycle(std::int64_t p, std::int64_t q);

}  // namespace favdist
