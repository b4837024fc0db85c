#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "tetra/angle_map.hpp"
#include "tetra/rng.hpp"

using namespace tetra;

TEST_CASE("distance triple order is (|DC|, |DB|, |DA|)") {
  const BaseTriangle base = fixture_right345();
  const DistanceTriple d = distances(base, {0.0, 0.0, 1.0});
  CHECK(std::abs(d.x - std::sqrt(17.0)) <= 1e-12);
  CHECK(std::abs(d.y - std::sqrt(10.0)) <= 1e-12);
  CHECK(std::abs(d.z - 1.0) <= 1e-12);
  CHECK_THROWS_AS(distances(base, {0.0, 0.0, 0.0}), ApexAtBaseVertex);
}

TEST_CASE("apex above the equilateral center maps to (1/4, 1/4, 1/4)") {
  const BaseTriangle base = fixture_equilateral();
  const AngleCosTriple t = face_cosines(base, {0.0, 0.0, 1.0});
  CHECK(std::abs(t.c_alpha - 0.25) <= 1e-14);
  CHECK(std::abs(t.c_beta - 0.25) <= 1e-14);
  CHECK(std::abs(t.c_gamma - 0.25) <= 1e-14);
}

TEST_CASE("impossible distance triples are rejected") {
  const BaseTriangle base =
      BaseTriangle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
  CHECK_THROWS_AS(face_cosines_dist({1.0, 5.0, 1.0}, base),
                  InconsistentDistances);
  CHECK_THROWS_AS(face_cosines_dist({0.0, 1.0, 1.0}, base),
                  NonPositiveLength);
}

TEST_CASE("gradient of the first component at the equilateral center apex") {
  const BaseTriangle base = fixture_equilateral();
  const Gradients g = gradients(base, {0.0, 0.0, 1.0});
  CHECK(std::abs(g.g1.x() - 3.0 / 8.0) <= 1e-14);
  CHECK(std::abs(g.g1.y() - 0.0) <= 1e-14);
  CHECK(std::abs(g.g1.z() - 3.0 / 4.0) <= 1e-14);
}

TEST_CASE("gradients agree with central differences") {
  for (const BaseTriangle& base :
       {fixture_equilateral(), fixture_right345(), fixture_obtuse()}) {
    Rng rng(11, 3);
    const Circumcircle& cc = base.circle();
    for (int i = 0; i < 20; ++i) {
      const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double rho = cc.radius * rng.uniform(0.1, 2.0);
      const ApexPoint apex{cc.center.x() + rho * std::cos(th),
                           cc.center.y() + rho * std::sin(th),
                           cc.radius * rng.uniform(0.2, 2.0)};
      const Gradients g = gradients(base, apex);
      const Eigen::Vector3d rows[3] = {g.g1, g.g2, g.g3};
      const double h = 1e-6 * cc.radius;
      for (int k = 0; k < 3; ++k) {
        ApexPoint hi = apex, lo = apex;
        (k == 0 ? hi.p : k == 1 ? hi.q : hi.r) += h;
        (k == 0 ? lo.p : k == 1 ? lo.q : lo.r) -= h;
        const Eigen::Vector3d fd =
            (face_cosines(base, hi).vec() - face_cosines(base, lo).vec()) /
            (2.0 * h);
        for (int c = 0; c < 3; ++c)
          CHECK(std::abs(fd[c] - rows[c][k]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("Jacobian determinant sign separates the cylinder sides") {
  const BaseTriangle base = fixture_equilateral();
  CHECK(jacobian_det(base, {0.0, 0.0, 1.0}) < 0.0);
  CHECK(jacobian_det(base, {2.5, 0.0, 1.0}) > 0.0);
  CHECK(std::abs(jacobian_det(
            base, {std::cos(0.7), std::sin(0.7), 1.3})) <= 1e-10);
  CHECK_THROWS_AS(jacobian_det(base, {0.3, 0.1, 0.0}), CoplanarApex);
}

TEST_CASE("Cartesian Jacobian differs by the frame volume factor") {
  const BaseTriangle base = fixture_obtuse();
  Rng rng(13, 4);
  const Circumcircle& cc = base.circle();
  for (int i = 0; i < 50; ++i) {
    const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = cc.radius * rng.uniform(0.1, 2.0);
    const ApexPoint apex{cc.center.x() + rho * std::cos(th),
                         cc.center.y() + rho * std::sin(th),
                         cc.radius * rng.uniform(0.2, 2.0)};
    const Eigen::Vector3d d(apex.p, apex.q, apex.r);
    Eigen::Matrix3d m;
    m.row(0) = Eigen::Vector3d(base.c().x(), base.c().y(), 0.0) - d;
    m.row(1) = Eigen::Vector3d(base.b().x(), base.b().y(), 0.0) - d;
    m.row(2) = Eigen::Vector3d(base.a().x(), base.a().y(), 0.0) - d;
    const double expected = jacobian_det(base, apex) * m.determinant();
    const double got = jacobian_det_cartesian(base, apex);
    CHECK(std::abs(got - expected) <=
          1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("solid angle inequalities") {
  CHECK(angle_inequalities({0.25, 0.25, 0.25}));
  CHECK_FALSE(angle_inequalities({0.9, 0.9, -0.9}));
  // A planar apex makes the three angles sum to exactly 2 pi, which the
  // slack admits.
  const BaseTriangle base = fixture_equilateral();
  const AngleCosTriple planar = face_cosines(base, {0.1, 0.2, 0.0});
  CHECK(angle_inequalities(planar, 1e-9));
}

TEST_CASE("sharpened bounds hold over an acute base and reject others") {
  const BaseTriangle base = fixture_equilateral();
  Rng rng(17, 5);
  for (int i = 0; i < 100; ++i) {
    const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = rng.uniform(0.0, 2.0);
    const ApexPoint apex{rho * std::cos(th), rho * std::sin(th),
                         rng.uniform(0.05, 2.5)};
    const ApexBoundsReport rep = apex_angle_bounds(base, apex);
    CHECK(rep.items.size() == 9);
    CHECK(rep.all_ok());
  }
  CHECK_THROWS_AS(apex_angle_bounds(fixture_right345(), {0.1, 0.1, 1.0}),
                  NotAcuteBase);
  CHECK_THROWS_AS(apex_angle_bounds(fixture_obtuse(), {0.1, 0.1, 1.0}),
                  NotAcuteBase);
}
