#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace favdist {

/// ceil(n^2/4 + 5n/2), computed as ceil((n^2 + 10n)/4) in integers.
std::int64_t quarter_square_term(std::int64_t n);

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t lower = 0;           // construction: term + 1
  std::int64_t suspension_cap = 0;  // any suspension: term + 2
  std::int64_t upper = 0;           // large-n ceiling: term + 12
  std::optional<std::map<std::pair<int, int>, double>> kst_values;
  std::optional<double> induction_value;
};

/// Integer-exact sandwich for f_3(n). Values are only claims about f_3 for
/// large n. Throws InputError for n < 1.
BoundReport f3_bounds(std::int64_t n);

/// Bipartite Kovari-Sos-Turan bound (s-1)^{1/r} (m-r+1) n^{1-1/r} + (r-1) n
/// for graphs with parts of sizes m, n and no K_{r,s} (r-side in the m-part).
double kst_bipartite(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t s);

/// Directed version (s-1)^{1/r} n^{2-1/r} + (r-1) n.
double kst_digraph(std::int64_t n, std::int64_t r, std::int64_t s);

/// Bound on e_r(S) when t points lie off a maximal suspension:
/// (n^2 - 2nt + 2t^2 + 14n + 6t + 25 + 4 A t^{5/3}) / 4 + 2^{1/3} t (n-t)^{2/3}.
double decomposition_rhs(double n, double t, double A);

/// n^2/4 + A n^{5/3}.
double induction_rhs(double n, double A);

/// Smallest A admissible for the induction step, (5 + 2^{-4/3}) / (1 - 2^{-5/3}).
double induction_constant_floor();

struct NewmanPair {
  std::int64_t theta_num = 0;
  std::int64_t theta_den = 1;
  std::int64_t phi_num = 0;
  std::int64_t phi_den = 1;

  friend bool operator==(const NewmanPair&, const NewmanPair&) = default;
  friend auto operator<=>(const NewmanPair&, const NewmanPair&) = default;
};

/// Rational angle pairs (theta/pi, phi/pi) = (a/b, c/d) in lowest terms, with
/// b, d <= max_denominator, satisfying sin(theta) sin(phi/2) = 1/2 to within tol.
/// theta ranges over (0, 1/2]: theta and pi - theta give the same sine, so
/// each solution is reported once. Candidates that pass in double precision
/// are re-tested with 50 significant digits. Sorted ascending.
std::vector<NewmanPair> newman_enumerate(std::int64_t max_denominator, double tol);

}  // namespace favdist
