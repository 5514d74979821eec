#include "favdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "favdist/digraph.hpp"

namespace favdist {
namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double as_finite(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) throw InputError(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(std::string(what) + " must be finite");
  return d;
}

}  // namespace

std::string to_json_text(const PointSetFile& file) {
  std::ostringstream out;
  out << "{\n  \"points\": [";
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    const Vec3& p = file.points[i];
    out << (i ? ",\n    " : "\n    ") << '[' << number(p.x()) << ", " << number(p.y()) << ", " << number(p.z())
        << ']';
  }
  out << (file.points.empty() ? "]" : "\n  ]");
  if (file.radii) {
    out << ",\n  \"radii\": [";
    for (std::size_t i = 0; i < file.radii->size(); ++i) out << (i ? ", " : "") << number((*file.radii)[i]);
    out << ']';
  }
  out << ",\n  \"meta\": " << file.meta.dump() << "\n}\n";
  return out.str();
}

PointSetFile parse_point_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("point set document must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array()) throw InputError("\"points\" must be an array");

  PointSetFile file;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || row.size() != 3) throw InputError("each point must be an [x, y, z] array");
    file.points.emplace_back(as_finite(row[0], "coordinate"), as_finite(row[1], "coordinate"),
                             as_finite(row[2], "coordinate"));
  }
  if (doc.contains("radii") && !doc["radii"].is_null()) {
    if (!doc["radii"].is_array()) throw InputError("\"radii\" must be an array");
    std::vector<double> radii;
    for (const auto& r : doc["radii"]) {
      const double v = as_finite(r, "radius");
      if (!(v > 0.0)) throw InputError("radii must be positive");
      radii.push_back(v);
    }
    if (radii.size() != file.points.size()) throw InputError("\"radii\" and \"points\" differ in length");
    file.radii = std::move(radii);
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw InputError("\"meta\" must be an object");
    file.meta = doc["meta"];
  }
  return file;
}

PointSetFile read_point_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return parse_point_set(buf.str());
}

void write_point_set_file(const std::string& path, const PointSetFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << to_json_text(file);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

PointSetFile to_file(const PointSet3& ps) {
  PointSetFile file;
  file.points = ps.points;
  file.radii = ps.radii;
  file.meta = ps.meta.is_object() ? ps.meta : nlohmann::json::object();
  return file;
}

PointSet3 resolve_radii(const PointSetFile& file, double tol, bool* radii_from_file) {
  PointSet3 ps;
  ps.points = file.points;
  ps.meta = file.meta;
  if (file.radii) {
    ps.radii = *file.radii;
  } else {
    ps.radii = optimal_radii(ps.points, tol).radii;
  }
  if (radii_from_file) *radii_from_file = file.radii.has_value();
  return ps;
}

}  // namespace favdist
