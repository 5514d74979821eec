#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "favdist/point_set.hpp"

namespace favdist {

enum class SearchInit { Random, Suspension, PerturbedSuspension };

/// Parses "random", "suspension" or "perturbed-suspension".
SearchInit parse_search_init(std::string_view name);
std::string_view to_string(SearchInit init);

struct SearchConfig {
  std::size_t n = 13;
  std::size_t iterations = 2000;
  std::size_t restarts = 1;
  std::uint64_t seed = 1;
  SearchInit init = SearchInit::Random;
  double step_scale = 0.1;  // fraction of the initial diameter
  double t0 = 1.0;
  double decay = 0.999;
  double snap_probability = 0.5;
  double tol = kDefaultTol;

  /// Throws InputError on out-of-range fields.
  void validate() const;
};

struct SearchResult {
  PointSet3 best;  // radii are the mode-optimal assignment
  std::size_t e_value = 0;
  std::size_t best_restart = 0;
  std::size_t accepted_moves = 0;  // summed over restarts
};

/// Simulated annealing over point positions, scored by optimal_radii.
///
/// Two proposal kinds, both moving one point: a Gaussian step of scale
/// step_scale * diameter * temperature, and a snap onto the intersection
/// circle of the favourite spheres of two other points. Acceptance is
/// Metropolis on the integer arc count. Restarts run concurrently on seeds
/// derived from cfg.seed; the best result wins, ties to the lowest restart.
SearchResult local_search(const SearchConfig& cfg);

}  // namespace favdist
