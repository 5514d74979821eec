#include "favdist/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "favdist/digraph.hpp"
#include "favdist/suspension.hpp"

namespace favdist {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Vec3> initial_points(const SearchConfig& cfg, std::mt19937_64& rng) {
  std::vector<Vec3> pts;
  if (cfg.init == SearchInit::Random) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    while (pts.size() < cfg.n) {
      const Vec3 p(coord(rng), coord(rng), coord(rng));
      const bool clash = std::any_of(pts.begin(), pts.end(), [&](const Vec3& q) { return (p - q).norm() < 1e-6; });
      if (!clash) pts.push_back(p);
    }
    return pts;
  }
  pts = build_extremal(cfg.n).points;
  if (cfg.init == SearchInit::PerturbedSuspension) {
    std::normal_distribution<double> noise(0.0, 0.01);
    for (auto& p : pts) p += Vec3(noise(rng), noise(rng), noise(rng));
  }
  return pts;
}

// Point on the circle where the spheres (cj, rj) and (ck, rk) meet, at a
// uniformly drawn angle; nullopt if the spheres do not intersect.
std::optional<Vec3> sphere_meet(const Vec3& cj, double rj, const Vec3& ck, double rk, std::mt19937_64& rng) {
  const Vec3 delta = ck - cj;
  const double d = delta.norm();
  if (!(d > 0.0) || d > rj + rk || d < std::abs(rj - rk)) return std::nullopt;
  const Vec3 e = delta / d;
  const double along = (d * d + rj * rj - rk * rk) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, rj * rj - along * along));
  const Vec3 helper = std::abs(e.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 b1 = e.cross(helper).normalized();
  const Vec3 b2 = e.cross(b1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double phi = angle(rng);
  return cj + along * e + h * (std::cos(phi) * b1 + std::sin(phi) * b2);
}

struct RestartOutcome {
  std::vector<Vec3> points;
  OptimalRadii score;
  std::size_t accepted = 0;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3> current = initial_points(cfg, rng);
  OptimalRadii cur_score = optimal_radii(current, cfg.tol);
  RestartOutcome best{current, cur_score, 0};

  const double diam = std::max(diameter(current), 1e-3);
  const double min_sep = 1e-6 * diam;
  const std::size_t n = cfg.n;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double temperature = cfg.t0;
  for (std::size_t it = 0; it < cfg.iterations; ++it, temperature *= cfg.decay) {
    const std::size_t i = pick(rng);
    std::optional<Vec3> moved;
    if (unit(rng) < cfg.snap_probability) {
      std::size_t j = pick(rng);
      while (j == i) j = pick(rng);
      std::size_t k = pick(rng);
      while (k == i || k == j) k = pick(rng);
      moved = sphere_meet(current[j], cur_score.radii[j], current[k], cur_score.radii[k], rng);
    }
    if (!moved) {
      const double sigma = cfg.step_scale * diam * temperature;
      moved = current[i] + sigma * Vec3(gauss(rng), gauss(rng), gauss(rng));
    }
    const double u = unit(rng);
    if (!moved->allFinite()) continue;
    bool clash = false;
    for (std::size_t q = 0; q < n && !clash; ++q) clash = q != i && (current[q] - *moved).norm() <= min_sep;
    if (clash) continue;

    const Vec3 previous = current[i];
    current[i] = *moved;
    OptimalRadii proposal = optimal_radii(current, cfg.tol);
    const double delta = static_cast<double>(proposal.e_value) - static_cast<double>(cur_score.e_value);
    if (delta >= 0.0 || (temperature > 0.0 && u < std::exp(delta / temperature))) {
      cur_score = std::move(proposal);
      ++best.accepted;
      if (cur_score.e_value > best.score.e_value) {
        best.points = current;
        best.score = cur_score;
      }
    } else {
      current[i] = previous;
    }
  }
  return best;
}

}  // namespace

SearchInit parse_search_init(std::string_view name) {
  if (name == "random") return SearchInit::Random;
  if (name == "suspension") return SearchInit::Suspension;
  if (name == "perturbed-suspension") return SearchInit::PerturbedSuspension;
  throw InputError("unknown init '" + std::string(name) + "'");
}

std::string_view to_string(SearchInit init) {
  switch (init) {
    case SearchInit::Random:
      return "random";
    case SearchInit::Suspension:
      return "suspension";
    case SearchInit::PerturbedSuspension:
      return "perturbed-suspension";
  }
  return "random";
}

void SearchConfig::validate() const {
  if (n < 3) throw InputError("search needs n >= 3");
  if (iterations < 1 || restarts < 1) throw InputError("iterations and restarts must be >= 1");
  if (!(step_scale > 0.0)) throw InputError("step_scale must be positive");
  if (!(t0 > 0.0)) throw InputError("initial temperature must be positive");
  if (!(decay > 0.0 && decay < 1.0)) throw InputError("decay must lie in (0, 1)");
  if (!(snap_probability >= 0.0 && snap_probability <= 1.0)) throw InputError("snap_probability must lie in [0, 1]");
  if (!(tol >= 0.0)) throw InputError("tolerance must be nonnegative");
  if (init != SearchInit::Random && n < 13) throw InputError("suspension initialisation needs n >= 13");
}

SearchResult local_search(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < cfg.restarts; first += workers) {
    const std::size_t last = std::min(cfg.restarts, first + workers);
    std::vector<std::future<RestartOutcome>> batch;
    for (std::size_t r = first; r < last; ++r) {
      const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(r));
      batch.push_back(std::async(std::launch::async, run_restart, std::cref(cfg), seed));
    }
    for (std::size_t r = first; r < last; ++r) outcomes[r] = batch[r - first].get();
  }

  SearchResult out;
  std::size_t winner = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    out.accepted_moves += outcomes[r].accepted;
    if (outcomes[r].score.e_value > outcomes[winner].score.e_value) winner = r;
  }
  out.best_restart = winner;
  out.e_value = outcomes[winner].score.e_value;
  out.best.points = std::move(outcomes[winner].points);
  out.best.radii = std::move(outcomes[winner].score.radii);
  out.best.meta["search_seed"] = cfg.seed;
  out.best.meta["restart"] = winner;
  return out;
}

}  // namespace favdist
