#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "tetra/angle_map.hpp"
#include "tetra/boundary.hpp"
#include "tetra/limits.hpp"
#include "tetra/pillow.hpp"

using namespace tetra;

TEST_CASE("boundary mesh census per base classification") {
  const BoundaryMesh acute = build_boundary_mesh(fixture_equilateral(), 8);
  CHECK(acute.patches.size() == 8);
  const BoundaryMesh right = build_boundary_mesh(fixture_right345(), 8);
  CHECK(right.patches.size() == 6);
  const BoundaryMesh obtuse = build_boundary_mesh(fixture_obtuse(), 8);
  CHECK(obtuse.patches.size() == 6);
  for (const char* name :
       {"F_Bminus", "F_Bplus", "EllipseCap_A", "EllipseCap_B",
        "EllipseCap_C"}) {
    CHECK(acute.find(name) != nullptr);
    CHECK(right.find(name) != nullptr);
    CHECK(obtuse.find(name) != nullptr);
  }
  CHECK(acute.find("SpecialRegionImage_A") != nullptr);
  CHECK(acute.find("SpecialRegionImage_B") != nullptr);
  CHECK(acute.find("SpecialRegionImage_C") != nullptr);
  CHECK(right.find("SpecialRegionImage_A") != nullptr);
  CHECK(obtuse.find("SpecialRegionImage_C") != nullptr);
}

TEST_CASE("planar image patches stay on the pillowcase") {
  const BoundaryMesh mesh = build_boundary_mesh(fixture_obtuse(), 10);
  for (const char* name : {"F_Bminus", "F_Bplus"}) {
    const MeshPatch* p = mesh.find(name);
    REQUIRE(p != nullptr);
    CHECK(!p->vertices.empty());
    for (const auto& v : p->vertices)
      CHECK(std::abs(pillow_value(AngleCosTriple::from_vec(v))) <= 1e-8);
  }
}

TEST_CASE("exterior image patch pins the point at infinity exactly") {
  const BoundaryMesh mesh = build_boundary_mesh(fixture_equilateral(), 6);
  const MeshPatch* p = mesh.find("F_Bplus");
  REQUIRE(p != nullptr);
  bool has_ones = false;
  for (const auto& v : p->vertices)
    if (v.x() == 1.0 && v.y() == 1.0 && v.z() == 1.0) has_ones = true;
  CHECK(has_ones);
}

TEST_CASE("ellipse cap vertices satisfy their plane exactly") {
  const BaseTriangle base = fixture_equilateral();
  const BoundaryMesh mesh = build_boundary_mesh(base, 6);
  const MeshPatch* cap = mesh.find("EllipseCap_B");
  REQUIRE(cap != nullptr);
  const double fixed = limit_solid_ellipse(base, VertexId::B).fixed_value;
  for (const auto& v : cap->vertices) CHECK(v.y() == fixed);
}

TEST_CASE("special region image vertices respect the pillow inequality") {
  const BoundaryMesh mesh = build_boundary_mesh(fixture_right345(), 8);
  const MeshPatch* p = mesh.find("SpecialRegionImage_A");
  REQUIRE(p != nullptr);
  CHECK(!p->vertices.empty());
  for (const auto& v : p->vertices)
    CHECK(pillow_value(AngleCosTriple::from_vec(v)) >= -1e-9);
}

TEST_CASE("triangle indices stay in range after trimming") {
  const BoundaryMesh mesh = build_boundary_mesh(fixture_right345(), 8);
  for (const MeshPatch& patch : mesh.patches) {
    const int n = static_cast<int>(patch.vertices.size());
    for (const auto& t : patch.triangles)
      for (int k : t) {
        CHECK(k >= 0);
        CHECK(k < n);
      }
  }
}

TEST_CASE("membership of a planar image value is boundary only") {
  const BaseTriangle base = fixture_equilateral();
  const Circumcircle& cc = base.circle();
  const AngleCosTriple center_img =
      face_cosines(base, {cc.center.x(), cc.center.y(), 0.0});
  CHECK((center_img.vec() - Eigen::Vector3d(-0.5, -0.5, -0.5)).norm() <=
        1e-12);
  CHECK(sigma_membership(base, center_img) ==
        SigmaMembership::OnClosureBoundaryOnly);
}
