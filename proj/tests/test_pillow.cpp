#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "tetra/pillow.hpp"

using namespace tetra;

TEST_CASE("pillow polynomial reference values") {
  CHECK(pillow_value({1.0, 1.0, 1.0}) == 0.0);
  CHECK(std::abs(pillow_value({0.25, 0.25, 0.25}) - 0.84375) <= 1e-15);
  CHECK(pillow_value({0.0, 0.0, 0.0}) == 1.0);
}

TEST_CASE("pillow membership classification") {
  CHECK(pillow_membership({0.0, 0.0, 0.0}) == PillowSide::Interior);
  CHECK(pillow_membership({1.0, 1.0, 1.0}) == PillowSide::OnPillowcase);
  CHECK(pillow_membership({0.99, -0.99, 0.99}) == PillowSide::Outside);
  CHECK(pillow_membership({1.5, 0.0, 0.0}) == PillowSide::Outside);
}

TEST_CASE("the two-angle parametrization lands on the pillowcase") {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const PillowParam p{2.0 * std::numbers::pi * (i + 0.3) / 20.0,
                          2.0 * std::numbers::pi * (j + 0.7) / 20.0};
      CHECK(std::abs(pillow_value(param_to_pillowcase(p))) <= 1e-12);
    }
  }
}

TEST_CASE("plane slices of the pillowcase") {
  const PillowSlice s = pillowcase_slice(2, 0.5);
  CHECK(s.coef_xx == 1.0);
  CHECK(s.coef_yy == 1.0);
  CHECK(std::abs(s.coef_xy + 1.0) <= 1e-15);
  CHECK(std::abs(s.rhs - 0.75) <= 1e-15);
  CHECK(std::abs(s.eccentricity() - std::sqrt(2.0 / 3.0)) <= 1e-15);

  // Points of the parametrized pillowcase with the third angle frozen fall
  // on the slice conic.
  const double phi = std::acos(0.5);
  for (int j = 0; j < 16; ++j) {
    const double psi = 2.0 * std::numbers::pi * j / 16.0;
    const AngleCosTriple t = param_to_pillowcase({phi, psi});
    CHECK(std::abs(s.residual(t.c_alpha, t.c_beta)) <= 1e-12);
  }

  CHECK_THROWS_AS(pillowcase_slice(2, 1.5), DegenerateSlice);
  CHECK_THROWS_AS(pillowcase_slice(7, 0.0), GeometryError);
}

TEST_CASE("pillow corner vertices and edges") {
  const PillowEdges e = pillowcase_edges();
  CHECK(e.vertices[0] == Eigen::Vector3d(1.0, 1.0, 1.0));
  CHECK(e.vertices[1] == Eigen::Vector3d(1.0, -1.0, -1.0));
  CHECK(e.vertices[2] == Eigen::Vector3d(-1.0, 1.0, -1.0));
  CHECK(e.vertices[3] == Eigen::Vector3d(-1.0, -1.0, 1.0));
  // Each edge lies on the pillowcase along its whole length.
  for (const auto& seg : e.segments) {
    for (int k = 0; k <= 10; ++k) {
      const Eigen::Vector3d p = e.vertices[seg.first] +
                                (e.vertices[seg.second] -
                                 e.vertices[seg.first]) *
                                    (k / 10.0);
      CHECK(std::abs(pillow_value(AngleCosTriple::from_vec(p))) <= 1e-12);
    }
  }
  // The distinguished chords avoid the all-ones corner.
  for (int idx : e.tetra_intervals) {
    CHECK(e.segments[idx].first != 0);
    CHECK(e.segments[idx].second != 0);
  }
}

TEST_CASE("special image points of the equilateral base") {
  const SpecialPoints sp = special_points(fixture_equilateral());
  CHECK((sp.a_tilde.vec() - Eigen::Vector3d(-0.5, 0.5, 0.5)).norm() <=
        1e-12);
  CHECK((sp.b_tilde.vec() - Eigen::Vector3d(0.5, -0.5, 0.5)).norm() <=
        1e-12);
  CHECK((sp.c_tilde.vec() - Eigen::Vector3d(0.5, 0.5, -0.5)).norm() <=
        1e-12);
  CHECK((sp.i_triangle.vec() - Eigen::Vector3d(0.5, 0.5, 0.5)).norm() <=
        1e-12);
}

TEST_CASE("sign-flipped image points lie on the pillowcase for every base") {
  for (const BaseTriangle& base :
       {fixture_equilateral(), fixture_right345(), fixture_obtuse()}) {
    const SpecialPoints sp = special_points(base);
    for (const AngleCosTriple& t : {sp.a_tilde, sp.b_tilde, sp.c_tilde})
      CHECK(std::abs(pillow_value(t)) <= 1e-12);

    // The base-angle point itself sits at depth 4 cosA cosB cosC: interior
    // of the pillow for acute bases, on the pillowcase for right ones, and
    // outside for obtuse ones.
    const BaseAngles& ang = base.angles();
    const double depth = 4.0 * std::cos(ang.at_a) * std::cos(ang.at_b) *
                         std::cos(ang.at_c);
    CHECK(std::abs(pillow_value(sp.i_triangle) - depth) <= 1e-12);
  }
}
