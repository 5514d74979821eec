#include "favdist/commands.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "favdist/bounds.hpp"
#include "favdist/detect.hpp"
#include "favdist/digraph.hpp"
#include "favdist/io.hpp"
#include "favdist/suspension.hpp"

namespace favdist {
namespace {

using nlohmann::json;

json detection_json(const DetectionResult& det) {
  return {{"center", {det.frame.center.x(), det.frame.center.y(), det.frame.center.z()}},
          {"axis", {det.frame.axis.x(), det.frame.axis.y(), det.frame.axis.z()}},
          {"circle_radius", det.frame.radius},
          {"C", det.C_indices},
          {"L", det.L_indices},
          {"T", det.T_indices},
          {"t", det.t},
          {"residuals", det.residuals}};
}

json count_json(const CountReport& rep) {
  return {{"n", rep.n},
          {"ell", rep.ell},
          {"c", rep.c},
          {"e_LC", rep.e_LC},
          {"e_L", rep.e_L},
          {"e_CL", rep.e_CL},
          {"e_C", rep.e_C},
          {"e_total", rep.e_total},
          {"formula_value", rep.formula_value},
          {"matches", rep.matches}};
}

// Runs `body`, mapping library exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInvalid;
}

}  // namespace

int cmd_construct(std::size_t n, const std::string& variant, const std::string& out_path, std::ostream& err) {
  return guarded(err, [&] {
    if (variant != "square" && variant != "hexagon") throw InputError("variant must be 'square' or 'hexagon'");
    const PointSet3 ps = variant == "square" ? build_extremal(n) : build_hexagon_variant(n);
    write_point_set_file(out_path, to_file(ps));
    return kExitOk;
  });
}

int cmd_verify(const std::string& in_path, const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PointSetFile file = read_point_set_file(in_path);
    bool from_file = false;
    const PointSet3 ps = resolve_radii(file, opts.tol, &from_file);
    const FavDigraph g = build_digraph(ps, opts.tol);
    const std::size_t n = ps.size();

    json report;
    report["n"] = n;
    report["radii_source"] = from_file ? "file" : "mode";
    report["e_total"] = g.arc_count();
    bool ok = g.arc_count() <= n * (n > 0 ? n - 1 : 0);

    if (file.meta.contains("expected")) {
      const auto expected = file.meta["expected"].get<std::int64_t>();
      const bool hit = expected == static_cast<std::int64_t>(g.arc_count());
      report["expected"] = expected;
      report["expected_matches"] = hit;
      ok = ok && hit;
    }
    if (n >= 1) {
      const BoundReport b = f3_bounds(static_cast<std::int64_t>(n));
      report["bounds"] = {{"lower", b.lower}, {"suspension_cap", b.suspension_cap}, {"upper", b.upper}};
    }

    report["suspension"] = false;
    if (n < 8) {
      report["detection"] = nullptr;
      report["detection_skipped"] = "fewer than 8 points";
    } else {
      const DetectionResult det = detect_suspension(ps, opts.detect_tol, opts.ransac_iters, opts.seed);
      report["detection"] = detection_json(det);
      if (det.t == 0 && det.C_indices.size() >= 3) {
        try {
          const CountReport rep = verify_suspension_counts(ps, det.L_indices, det.C_indices, opts.tol);
          report["suspension"] = true;
          report["count_report"] = count_json(rep);
          ok = ok && rep.matches;
        } catch (const InputError& e) {
          // Detected at detect_tol but not exact at the arc tolerance.
          report["suspension_check"] = e.what();
        }
      }
    }
    report["matches"] = ok;
    out << report.dump(2) << '\n';
    return ok ? kExitOk : kExitFailed;
  });
}

int cmd_bounds_table(std::int64_t n_min, std::int64_t n_max, const std::string& csv_path, std::int64_t construct_max,
                     std::ostream& err) {
  return guarded(err, [&] {
    if (n_min < 1 || n_max < n_min || n_max > 1'000'000) {
      throw InputError("need 1 <= n_min <= n_max <= 1000000");
    }
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) throw IoError("cannot open '" + csv_path + "' for writing");
    csv << "n,lower,suspension_cap,upper,constructed\n";
    for (std::int64_t n = n_min; n <= n_max; ++n) {
      const BoundReport b = f3_bounds(n);
      csv << n << ',' << b.lower << ',' << b.suspension_cap << ',' << b.upper << ',';
      if (n >= 13 && n <= construct_max) {
        csv << build_digraph(build_extremal(static_cast<std::size_t>(n))).arc_count();
      }
      csv << '\n';
    }
    csv.flush();
    if (!csv) throw IoError("failed writing '" + csv_path + "'");
    return kExitOk;
  });
}

int cmd_search(const SearchConfig& cfg, const std::optional<std::string>& out_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const SearchResult res = local_search(cfg);
    const std::size_t n = cfg.n;
    const BoundReport b = f3_bounds(static_cast<std::int64_t>(n));
    json report = {{"n", n},
                   {"e_value", res.e_value},
                   {"best_restart", res.best_restart},
                   {"accepted_moves", res.accepted_moves},
                   {"trivial_ceiling", n * (n - 1)},
                   {"f3_upper_formula", b.upper},
                   {"config",
                    {{"iterations", cfg.iterations},
                     {"restarts", cfg.restarts},
                     {"seed", cfg.seed},
                     {"init", std::string(to_string(cfg.init))},
                     {"step_scale", cfg.step_scale},
                     {"t0", cfg.t0},
                     {"decay", cfg.decay}}}};
    json pts = json::array();
    for (const auto& p : res.best.points) pts.push_back({p.x(), p.y(), p.z()});
    report["points"] = pts;
    report["radii"] = res.best.radii;
    if (out_path) write_point_set_file(*out_path, to_file(res.best));
    out << report.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_detect(const std::string& in_path, double tol, std::size_t ransac_iters, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PointSetFile file = read_point_set_file(in_path);
    const PointSet3 ps = resolve_radii(file, kDefaultTol);
    const DetectionResult det = detect_suspension(ps, tol, ransac_iters, seed);
    out << detection_json(det).dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_newman(std::int64_t max_denominator, double tol, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    json sols = json::array();
    for (const auto& s : newman_enumerate(max_denominator, tol)) {
      sols.push_back({{"theta_over_pi", std::to_string(s.theta_num) + "/" + std::to_string(s.theta_den)},
                      {"phi_over_pi", std::to_string(s.phi_num) + "/" + std::to_string(s.phi_den)}});
    }
    out << json{{"max_denominator", max_denominator}, {"tol", tol}, {"solutions", sols}}.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_stability(std::size_t n, double damage_fraction, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StabilityReport r = stability_experiment(n, damage_fraction, seed);
    out << json{{"n", r.n},
                {"damage_fraction", r.damage_fraction},
                {"damaged", r.damaged},
                {"e_value", r.e_value},
                {"e_ratio", r.e_ratio},
                {"c_fraction", r.c_fraction},
                {"l_fraction", r.l_fraction},
                {"t", r.t},
                {"t_fraction", r.t_fraction}}
               .dump(2)
        << '\n';
    return kExitOk;
  });
}

}  // namespace favdist
