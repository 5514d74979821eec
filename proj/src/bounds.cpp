#include "favdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "favdist/point_set.hpp"

namespace favdist {

std::int64_t quarter_square_term(std::int64_t n) {
  const std::int64_t num = n * n + 10 * n;
  // num >= 0 for n >= 0, so the ceiling is (num + 3) / 4.
  return (num + 3) / 4;
}

BoundReport f3_bounds(std::int64_t n) {
  if (n < 1) throw InputError("f3_bounds needs n >= 1");
  if (n > 2'000'000'000) throw InputError("f3_bounds: n too large for exact 64-bit evaluation");
  const std::int64_t term = quarter_square_term(n);
  BoundReport out;
  out.n = n;
  out.lower = term + 1;
  out.suspension_cap = term + 2;
  out.upper = term + 12;
  return out;
}

double kst_bipartite(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t s) {
  if (m < 1 || n < 1) throw InputError("kst_bipartite needs m, n >= 1");
  if (r < 1 || r > m) throw InputError("kst_bipartite needs 1 <= r <= m");
  if (s < 1 || s > n) throw InputError("kst_bipartite needs 1 <= s <= n");
  const double rd = static_cast<double>(r);
  const double nd = static_cast<double>(n);
  return std::pow(static_cast<double>(s - 1), 1.0 / rd) * static_cast<double>(m - r + 1) * std::pow(nd, 1.0 - 1.0 / rd) +
         static_cast<double>(r - 1) * nd;
}

double kst_digraph(std::int64_t n, std::int64_t r, std::int64_t s) {
  if (n < 1) throw InputError("kst_digraph needs n >= 1");
  if (r < 1 || s < 1) throw InputError("kst_digraph needs r, s >= 1");
  const double rd = static_cast<double>(r);
  const double nd = static_cast<double>(n);
  return std::pow(static_cast<double>(s - 1), 1.0 / rd) * std::pow(nd, 2.0 - 1.0 / rd) + static_cast<double>(r - 1) * nd;
}

double decomposition_rhs(double n, double t, double A) {
  if (!(t >= 0.0 && t <= n)) throw InputError("decomposition_rhs needs 0 <= t <= n");
  if (!(A > 0.0)) throw InputError("decomposition_rhs needs A > 0");
  const double quadratic = n * n - 2.0 * n * t + 2.0 * t * t + 14.0 * n + 6.0 * t + 25.0 + 4.0 * A * std::pow(t, 5.0 / 3.0);
  return quadratic / 4.0 + std::cbrt(2.0) * t * std::pow(n - t, 2.0 / 3.0);
}

double induction_rhs(double n, double A) {
  if (!(n >= 0.0)) throw InputError("induction_rhs needs n >= 0");
  if (!(A > 0.0)) throw InputError("induction_rhs needs A > 0");
  return n * n / 4.0 + A * std::pow(n, 5.0 / 3.0);
}

double induction_constant_floor() { return (5.0 + std::pow(2.0, -4.0 / 3.0)) / (1.0 - std::pow(2.0, -5.0 / 3.0)); }

std::vector<NewmanPair> newman_enumerate(std::int64_t max_denominator, double tol) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  if (max_denominator < 1) throw InputError("newman_enumerate needs max_denominator >= 1");
  if (!(tol > 0.0)) throw InputError("newman_enumerate needs tol > 0");

  struct Fraction {
    std::int64_t num;
    std::int64_t den;
  };
  std::vector<Fraction> fractions;
  for (std::int64_t den = 2; den <= max_denominator; ++den) {
    for (std::int64_t num = 1; num < den; ++num) {
      if (std::gcd(num, den) == 1) fractions.push_back({num, den});
    }
  }
  std::vector<double> half_sines;
  half_sines.reserve(fractions.size());
  for (const auto& f : fractions) {
    half_sines.push_back(std::sin(std::numbers::pi * static_cast<double>(f.num) / (2.0 * static_cast<double>(f.den))));
  }

  const Wide pi = boost::math::constants::pi<Wide>();
  const Wide half = Wide(1) / 2;
  std::vector<NewmanPair> out;
  for (const auto& theta : fractions) {
    if (2 * theta.num > theta.den) continue;
    const double sin_theta = std::sin(std::numbers::pi * static_cast<double>(theta.num) / static_cast<double>(theta.den));
    for (std::size_t k = 0; k < fractions.size(); ++k) {
      if (std::abs(sin_theta * half_sines[k] - 0.5) > tol) continue;
      const auto& phi = fractions[k];
      const Wide wide = sin(pi * theta.num / theta.den) * sin(pi * phi.num / (2 * phi.den));
      if (abs(wide - half) <= Wide(tol)) out.push_back({theta.num, theta.den, phi.num, phi.den});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace favdist
