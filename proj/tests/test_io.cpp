#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tetra/io.hpp"

using namespace tetra;

TEST_CASE("format_double tracks fifteen significant digits") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.25) == "-0.25");
}

TEST_CASE("base parses from vertex JSON, inline or via file") {
  const std::string text =
      "{\"A\":[0,0],\"B\":[3,0],\"C\":[0,4]}";
  const BaseTriangle from_text = base_from_json_text(text);
  CHECK(from_text.sides().bc == doctest::Approx(5.0).epsilon(1e-15));

  const BaseTriangle inline_base = load_base("  " + text);
  CHECK(inline_base.b().x() == from_text.b().x());

  const std::string path = "io_test_base.json";
  { std::ofstream(path) << text; }
  const BaseTriangle from_file = load_base(path);
  CHECK(from_file.c().y() == from_text.c().y());
  std::remove(path.c_str());
}

TEST_CASE("base parses from the angles form") {
  const double a1 = 0.6, a2 = 1.1, a3 = 3.14159265358979323846 - a1 - a2;
  std::ostringstream text;
  text.precision(17);
  text << "{\"angles\":[" << a1 << "," << a2 << "," << a3
       << "],\"circumradius\":2.0}";
  const BaseTriangle parsed = base_from_json_text(text.str());
  const BaseTriangle direct = base_from_angles(a1, a2, a3, 2.0);
  CHECK((parsed.a() - direct.a()).norm() <= 1e-12);
  CHECK((parsed.b() - direct.b()).norm() <= 1e-12);
  CHECK((parsed.c() - direct.c()).norm() <= 1e-12);
}

TEST_CASE("malformed base descriptions raise the same error type") {
  CHECK_THROWS_AS(base_from_json_text("not json"), DegenerateBase);
  CHECK_THROWS_AS(base_from_json_text("[1,2,3]"), DegenerateBase);
  CHECK_THROWS_AS(base_from_json_text("{\"A\":[0,0],\"B\":[1,0]}"),
                  DegenerateBase);
  CHECK_THROWS_AS(base_from_json_text("{\"A\":[0,0,9],\"B\":[1,0],\"C\":[0,1]}"),
                  DegenerateBase);
  CHECK_THROWS_AS(base_from_json_text("{\"angles\":[1,1,1.14]}"),
                  DegenerateBase);
  CHECK_THROWS_AS(load_base("/nonexistent/base.json"), DegenerateBase);
}

namespace {

BoundaryMesh tiny_mesh() {
  BoundaryMesh mesh;
  MeshPatch p;
  p.name = "P";
  p.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  p.triangles = {{0, 1, 2}};
  mesh.patches.push_back(p);
  return mesh;
}

}  // namespace

TEST_CASE("obj writer emits groups with one based global indices") {
  BoundaryMesh mesh = tiny_mesh();
  std::ostringstream out;
  write_obj(mesh, out);
  CHECK(out.str() ==
        "g P\n"
        "v 0 0 0\n"
        "v 1 0 0\n"
        "v 0 1 0\n"
        "f 1 2 3\n");

  MeshPatch q;
  q.name = "Q";
  q.vertices = {{0.5, 0.5, 0.5}, {1.5, 0.5, 0.5}, {0.5, 1.5, 0.5}};
  q.triangles = {{0, 1, 2}};
  mesh.patches.push_back(q);
  std::ostringstream two;
  write_obj(mesh, two);
  CHECK(two.str().find("f 4 5 6\n") != std::string::npos);
}

TEST_CASE("ply writer declares counts and tags vertices by patch") {
  BoundaryMesh mesh = tiny_mesh();
  MeshPatch q;
  q.name = "Q";
  q.vertices = {{2.0, 0.0, 0.0}, {3.0, 0.0, 0.0}, {2.0, 1.0, 0.0}};
  q.triangles = {{0, 2, 1}};
  mesh.patches.push_back(q);

  std::ostringstream out;
  write_ply(mesh, out);
  const std::string s = out.str();
  CHECK(s.rfind("ply\nformat ascii 1.0\n", 0) == 0);
  CHECK(s.find("element vertex 6\n") != std::string::npos);
  CHECK(s.find("element face 2\n") != std::string::npos);
  CHECK(s.find("property int patch_id\n") != std::string::npos);
  CHECK(s.find("0 0 0 0\n") != std::string::npos);
  CHECK(s.find("2 0 0 1\n") != std::string::npos);
  CHECK(s.find("3 0 1 2\n") != std::string::npos);
  CHECK(s.find("3 3 5 4\n") != std::string::npos);
}

TEST_CASE("atomic writer lands the file and removes its scratch name") {
  const std::string path = "io_test_atomic.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  std::ifstream tmp(path + ".tmp");
  CHECK(!tmp.good());
  std::remove(path.c_str());
}
