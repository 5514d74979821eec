#pragma once

// Subcommand bodies behind the `favdist` executable. Each returns the process
// exit code: 0 success/verified, 1 verification failure, 2 invalid input or
// I/O error. Reports go to `out` as a single JSON document; diagnostics to `err`.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "favdist/search.hpp"

namespace favdist {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

int cmd_construct(std::size_t n, const std::string& variant, const std::string& out_path, std::ostream& err);

struct VerifyOptions {
  double tol = kDefaultTol;
  double detect_tol = 1e-6;
  std::size_t ransac_iters = 500;
  std::uint64_t seed = 1;
};
int cmd_verify(const std::string& in_path, const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// CSV `n,lower,suspension_cap,upper,constructed`; `constructed` is the
/// brute-force arc count of build_extremal(n) for 13 <= n <= construct_max.
int cmd_bounds_table(std::int64_t n_min, std::int64_t n_max, const std::string& csv_path, std::int64_t construct_max,
                     std::ostream& err);

int cmd_search(const SearchConfig& cfg, const std::optional<std::string>& out_path, std::ostream& out,
               std::ostream& err);

int cmd_detect(const std::string& in_path, double tol, std::size_t ransac_iters, std::uint64_t seed,
               std::ostream& out, std::ostream& err);

int cmd_newman(std::int64_t max_denominator, double tol, std::ostream& out, std::ostream& err);

int cmd_stability(std::size_t n, double damage_fraction, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace favdist
