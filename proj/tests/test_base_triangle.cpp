#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "tetra/angle_map.hpp"
#include "tetra/base_triangle.hpp"
#include "tetra/rng.hpp"

using namespace tetra;

namespace {
constexpr double kPi = std::numbers::pi;

BaseTriangle unit_equilateral() {
  return BaseTriangle({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
}
}  // namespace

TEST_CASE("degenerate bases are rejected") {
  CHECK_THROWS_AS(BaseTriangle({0, 0}, {1, 0}, {2, 0}), DegenerateBase);
  CHECK_THROWS_AS(BaseTriangle({1, 1}, {1, 1}, {0, 3}), DegenerateBase);
}

TEST_CASE("side lengths, angles and circumcircle of the 3-4-5 base") {
  const BaseTriangle base = fixture_right345();
  CHECK(base.sides().ab == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(base.sides().ac == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(base.sides().bc == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(std::abs(base.angles().at_a - kPi / 2.0) <= 1e-12);
  CHECK(std::abs(base.angles().at_b - std::asin(4.0 / 5.0)) <= 1e-12);
  CHECK(std::abs(base.angles().at_c - std::asin(3.0 / 5.0)) <= 1e-12);
  CHECK((base.circle().center - Eigen::Vector2d(1.5, 2.0)).norm() <= 1e-12);
  CHECK(std::abs(base.circle().radius - 2.5) <= 1e-12);
  CHECK(base.twice_signed_area() == doctest::Approx(12.0));
}

TEST_CASE("classification of the three reference bases") {
  CHECK(classify(fixture_equilateral()) == TriangleKind::Acute);
  CHECK(classify(fixture_right345()) == TriangleKind::Right);
  CHECK(classify(fixture_obtuse()) == TriangleKind::Obtuse);
}

TEST_CASE("base_from_angles puts A at angle zero and honors the data") {
  const double a1 = kPi / 6.0, a2 = kPi / 4.0, a3 = kPi - a1 - a2;
  const BaseTriangle base = base_from_angles(a1, a2, a3, 2.0);
  CHECK(std::abs(base.angles().at_a - a1) <= 1e-12);
  CHECK(std::abs(base.angles().at_b - a2) <= 1e-12);
  CHECK(std::abs(base.angles().at_c - a3) <= 1e-12);
  CHECK(std::abs(base.circle().radius - 2.0) <= 1e-12);
  const Eigen::Vector2d rel = base.a() - base.circle().center;
  CHECK(std::abs(std::atan2(rel.y(), rel.x())) <= 1e-12);
  CHECK_THROWS_AS(base_from_angles(1.0, 1.0, 1.0, 1.0), DegenerateBase);
  CHECK_THROWS_AS(base_from_angles(a1, a2, a3, -1.0), DegenerateBase);
}

TEST_CASE("Cayley-Menger values of the regular tetrahedron") {
  const BaseTriangle base = unit_equilateral();
  const DistanceTriple d{1.0, 1.0, 1.0};
  CHECK(std::abs(cayley_menger(d, base) - 4.0) <= 1e-12);
  CHECK(std::abs(cayley_menger_base(base) - (-3.0)) <= 1e-12);
  CHECK(is_realizable(d, base));
  // Volume squared of the unit regular tetrahedron is 1/72.
  CHECK(std::abs(cayley_menger(d, base) / 288.0 - 1.0 / 72.0) <= 1e-15);
}

TEST_CASE("realizability predicate and its failure modes") {
  const BaseTriangle base = unit_equilateral();
  CHECK_FALSE(is_realizable({0.5, 0.5, 0.5}, base));
  CHECK_THROWS_AS(is_realizable({0.0, 1.0, 1.0}, base), NonPositiveLength);
}

TEST_CASE("paraboloid polynomial is half the Cayley-Menger determinant") {
  const BaseTriangle base = fixture_right345();
  Rng rng(5, 1);
  for (int i = 0; i < 200; ++i) {
    const double u = rng.uniform(0.01, 30.0);
    const double v = rng.uniform(0.01, 30.0);
    const double w = rng.uniform(0.01, 30.0);
    const DistanceTriple d{std::sqrt(u), std::sqrt(v), std::sqrt(w)};
    const double cm = cayley_menger(d, base);
    const double pv = paraboloid_value(u, v, w, base.sides());
    CHECK(std::abs(pv - cm / 2.0) <=
          1e-10 * std::max(1.0, std::abs(cm)));
  }
}

TEST_CASE("squared distance triples classify against the paraboloid") {
  const BaseTriangle base = fixture_equilateral();
  // Apex above the centroid: realizable.
  CHECK(dt_membership(2.0, 2.0, 2.0, base) == ParaboloidSide::Inside);
  // Planar apex at the circumcenter: distances all equal the radius.
  CHECK(dt_membership(1.0, 1.0, 1.0, base) == ParaboloidSide::OnParaboloid);
  CHECK(dt_membership(25.0, 0.09, 0.09, base) == ParaboloidSide::Outside);
}

TEST_CASE("both volume formulas agree with the determinant") {
  const BaseTriangle base = fixture_obtuse();
  Rng rng(7, 2);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(0.4, 3.0);
    const double y = rng.uniform(0.4, 3.0);
    const double z = rng.uniform(0.4, 3.0);
    const DistanceTriple d{x, y, z};
    const double cm = cayley_menger(d, base);
    if (cm <= 0.1) continue;
    const AngleCosTriple t = face_cosines_dist(d, base);
    const double ref = cm / 288.0;
    const double gram = volume_squared_cosines(x, y, z, t);
    const double sine = volume_squared_sines(
        x, y, z, std::acos(t.c_alpha), std::acos(t.c_beta),
        std::acos(t.c_gamma));
    CHECK(std::abs(gram - ref) <= 1e-11 * ref);
    CHECK(std::abs(sine - ref) <= 1e-11 * ref);
  }
}

TEST_CASE("canonical frame of the equilateral base") {
  const BaseTriangle base = fixture_equilateral();
  const CanonicalFrame frame = canonicalize(base);
  CHECK(std::abs(frame.theta_b() - 2.0 * kPi / 3.0) <= 1e-12);
  CHECK(std::abs(frame.theta_c() - 4.0 * kPi / 3.0) <= 1e-12);
  CHECK(std::abs(frame.u_cot() - 1.0 / std::sqrt(3.0)) <= 1e-12);
  CHECK(std::abs(frame.v_cot() + 1.0 / std::sqrt(3.0)) <= 1e-12);
}

TEST_CASE("canonical frame normalizes pose and scale") {
  const BaseTriangle base = fixture_right345();
  const CanonicalFrame frame = canonicalize(base);
  const BaseTriangle& canon = frame.canonical_base();
  CHECK((canon.a() - Eigen::Vector2d(1.0, 0.0)).norm() <= 1e-12);
  CHECK(std::abs(canon.b().norm() - 1.0) <= 1e-12);
  CHECK(std::abs(canon.c().norm() - 1.0) <= 1e-12);
  CHECK(std::abs(frame.scale() - 1.0 / 2.5) <= 1e-15);

  const ApexPoint apex{0.7, -0.3, 1.9};
  const ApexPoint there = frame.apex_to_canonical(apex);
  const ApexPoint back = frame.apex_from_canonical(there);
  CHECK(std::abs(back.p - apex.p) <= 1e-12);
  CHECK(std::abs(back.q - apex.q) <= 1e-12);
  CHECK(std::abs(back.r - apex.r) <= 1e-12);
  // Angles are preserved, so the images agree.
  const AngleCosTriple t0 = face_cosines(base, apex);
  const AngleCosTriple t1 = face_cosines(canon, there);
  CHECK((t0.vec() - t1.vec()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("clockwise vertex order is accepted") {
  const BaseTriangle base = reflected_equilateral();
  CHECK(base.twice_signed_area() < 0.0);
  const CanonicalFrame frame = canonicalize(base);
  CHECK(std::abs(frame.theta_b() - 4.0 * kPi / 3.0) <= 1e-12);
  CHECK(std::abs(frame.theta_c() - 2.0 * kPi / 3.0) <= 1e-12);
}
