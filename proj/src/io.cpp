#include "tetra/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tetra {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

std::array<double, 2> read_pair(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2)
    throw DegenerateBase(std::string("expected \"") + key +
                         "\" to be a two element array");
  return {j[key][0].get<double>(), j[key][1].get<double>()};
}

}  // namespace

BaseTriangle base_from_json_text(const std::string& text,
                                 const ToleranceConfig& tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DegenerateBase(std::string("base description is not valid JSON: ") +
                         e.what());
  }
  if (!j.is_object())
    throw DegenerateBase("base description must be a JSON object");

  try {
    if (j.contains("angles")) {
      if (!j["angles"].is_array() || j["angles"].size() != 3)
        throw DegenerateBase("\"angles\" must hold three values");
      if (!j.contains("circumradius"))
        throw DegenerateBase("the angles form needs a \"circumradius\"");
      return base_from_angles(j["angles"][0].get<double>(),
                              j["angles"][1].get<double>(),
                              j["angles"][2].get<double>(),
                              j["circumradius"].get<double>(), tol);
    }
    const auto a = read_pair(j, "A");
    const auto b = read_pair(j, "B");
    const auto c = read_pair(j, "C");
    return BaseTriangle({a[0], a[1]}, {b[0], b[1]}, {c[0], c[1]}, tol);
  } catch (const nlohmann::json::exception& e) {
    throw DegenerateBase(std::string("malformed base description: ") +
                         e.what());
  }
}

BaseTriangle load_base(const std::string& path_or_inline,
                       const ToleranceConfig& tol) {
  std::size_t first = 0;
  while (first < path_or_inline.size() &&
         std::isspace(static_cast<unsigned char>(path_or_inline[first])))
    ++first;
  if (first < path_or_inline.size() && path_or_inline[first] == '{')
    return base_from_json_text(path_or_inline, tol);

  std::ifstream in(path_or_inline, std::ios::binary);
  if (!in)
    throw DegenerateBase("cannot open base file: " + path_or_inline);
  std::ostringstream buf;
  buf << in.rdbuf();
  return base_from_json_text(buf.str(), tol);
}

void write_obj(const BoundaryMesh& mesh, std::ostream& out) {
  int offset = 0;
  for (const MeshPatch& patch : mesh.patches) {
    out << "g " << patch.name << "\n";
    for (const auto& v : patch.vertices)
      out << "v " << format_double(v.x()) << ' ' << format_double(v.y())
          << ' ' << format_double(v.z()) << "\n";
    for (const auto& t : patch.triangles)
      out << "f " << offset + t[0] + 1 << ' ' << offset + t[1] + 1 << ' '
          << offset + t[2] + 1 << "\n";
    offset += static_cast<int>(patch.vertices.size());
  }
}

void write_ply(const BoundaryMesh& mesh, std::ostream& out) {
  std::size_t faces = 0;
  for (const MeshPatch& patch : mesh.patches) faces += patch.triangles.size();

  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.total_vertices() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "property int patch_id\n";
  out << "element face " << faces << "\n";
  out << "property list uchar int vertex_indices\nend_header\n";

  int patch_id = 0;
  for (const MeshPatch& patch : mesh.patches) {
    for (const auto& v : patch.vertices)
      out << format_double(v.x()) << ' ' << format_double(v.y()) << ' '
          << format_double(v.z()) << ' ' << patch_id << "\n";
    ++patch_id;
  }
  int offset = 0;
  for (const MeshPatch& patch : mesh.patches) {
    for (const auto& t : patch.triangles)
      out << "3 " << offset + t[0] << ' ' << offset + t[1] << ' '
          << offset + t[2] << "\n";
    offset += static_cast<int>(patch.vertices.size());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move temporary file onto: " + path);
  }
}

}  // namespace tetra
