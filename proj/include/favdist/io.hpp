#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "favdist/point_set.hpp"

namespace favdist {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk point set: "points" ([x, y, z] triples), optional "radii", optional
/// "meta" object. Absent radii mean "use the mode-optimal assignment".
struct PointSetFile {
  std::vector<Vec3> points;
  std::optional<std::vector<double>> radii;
  nlohmann::json meta = nlohmann::json::object();
};

/// Numbers are written with 17 significant digits, so reading back is bit-exact.
std::string to_json_text(const PointSetFile& file);
/// Throws InputError on malformed documents.
PointSetFile parse_point_set(const std::string& text);

PointSetFile read_point_set_file(const std::string& path);
void write_point_set_file(const std::string& path, const PointSetFile& file);

PointSetFile to_file(const PointSet3& ps);

/// Resolves radii from the file, or from optimal_radii when absent.
PointSet3 resolve_radii(const PointSetFile& file, double tol, bool* radii_from_file = nullptr);

}  // namespace favdist
