// favdist: construct, verify and explore favourite-distance configurations.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "favdist/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Favourite-distance digraphs in 3-space"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string variant = "square";
  std::string path;
  auto* construct = app.add_subcommand("construct", "Write the extremal (or hexagon) suspension for n points");
  construct->add_option("--n", n, "Number of points (>= 13)")->required();
  construct->add_option("--variant", variant, "square | hexagon");
  construct->add_option("--out", path, "Output JSON path")->required();

  favdist::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Recount arcs, detect suspension structure and check bounds");
  verify->add_option("--in", path, "Input JSON path")->required();
  verify->add_option("--tol", vopts.tol, "Arc equality tolerance");
  verify->add_option("--detect-tol", vopts.detect_tol, "Detection residual tolerance");
  verify->add_option("--ransac-iters", vopts.ransac_iters, "RANSAC iterations");
  verify->add_option("--seed", vopts.seed, "RANSAC seed");

  std::int64_t n_min = 1;
  std::int64_t n_max = 1;
  std::int64_t construct_max = 500;
  auto* table = app.add_subcommand("bounds-table", "Write the bounds CSV");
  table->add_option("--n-min", n_min)->required();
  table->add_option("--n-max", n_max)->required();
  table->add_option("--csv", path, "Output CSV path")->required();
  table->add_option("--construct-max", construct_max, "Largest n for the brute-force constructed column");

  favdist::SearchConfig cfg;
  std::string init = "random";
  std::optional<std::string> search_out;
  auto* search = app.add_subcommand("search", "Simulated annealing over point positions");
  search->add_option("--n", cfg.n)->required();
  search->add_option("--iters", cfg.iterations);
  search->add_option("--restarts", cfg.restarts);
  search->add_option("--seed", cfg.seed)->required();
  search->add_option("--init", init, "random | suspension | perturbed-suspension");
  search->add_option("--step-scale", cfg.step_scale);
  search->add_option("--t0", cfg.t0);
  search->add_option("--decay", cfg.decay);
  search->add_option("--out", search_out, "Also write the best configuration as a point-set file");

  double tol = 1e-6;
  std::size_t ransac_iters = 500;
  std::uint64_t seed = 0;
  auto* detect = app.add_subcommand("detect", "Recover circle, axis and exceptional points");
  detect->add_option("--in", path)->required();
  detect->add_option("--tol", tol);
  detect->add_option("--ransac-iters", ransac_iters);
  detect->add_option("--seed", seed)->required();

  std::int64_t max_den = 64;
  double newman_tol = 1e-12;
  auto* newman = app.add_subcommand("newman", "Rational solutions of sin(theta) sin(phi/2) = 1/2");
  newman->add_option("--max-denominator", max_den);
  newman->add_option("--tol", newman_tol);

  double damage = 0.0;
  auto* stability = app.add_subcommand("stability", "Damage the extremal construction and re-detect");
  stability->add_option("--n", n)->required();
  stability->add_option("--damage", damage, "Fraction of displaced points, in [0, 0.2]");
  stability->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return favdist::kExitInvalid;
  }

  if (*construct) return favdist::cmd_construct(n, variant, path, std::cerr);
  if (*verify) return favdist::cmd_verify(path, vopts, std::cout, std::cerr);
  if (*table) return favdist::cmd_bounds_table(n_min, n_max, path, construct_max, std::cerr);
  if (*search) {
    try {
      cfg.init = favdist::parse_search_init(init);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return favdist::kExitInvalid;
    }
    return favdist::cmd_search(cfg, search_out, std::cout, std::cerr);
  }
  if (*detect) return favdist::cmd_detect(path, tol, ransac_iters, seed, std::cout, std::cerr);
  if (*newman) return favdist::cmd_newman(max_den, newman_tol, std::cout, std::cerr);
  if (*stability) return favdist::cmd_stability(n, damage, seed, std::cout, std::cerr);
  return favdist::kExitInvalid;
}
