#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "tetra/angle_map.hpp"
#include "tetra/boundary.hpp"
#include "tetra/inverse.hpp"
#include "tetra/pillow.hpp"
#include "tetra/rng.hpp"

using namespace tetra;

TEST_CASE("preimages recover deterministic apex grids") {
  for (const BaseTriangle& base :
       {fixture_equilateral(), fixture_right345(), fixture_obtuse()}) {
    const Circumcircle& cc = base.circle();
    for (double rho_rel : {0.3, 0.8, 1.6}) {
      for (double th : {0.5, 2.1, 4.0}) {
        for (double r_rel : {0.2, 1.0, 2.4}) {
          const ApexPoint apex{
              cc.center.x() + rho_rel * cc.radius * std::cos(th),
              cc.center.y() + rho_rel * cc.radius * std::sin(th),
              r_rel * cc.radius};
          const RoundtripReport rt = roundtrip_check(base, apex);
          CHECK(rt.recovered);
          CHECK(rt.count >= 1);
        }
      }
    }
  }
}

TEST_CASE("preimage count stays within four and solutions are accurate") {
  const BaseTriangle base = fixture_equilateral();
  Rng rng(43, 11);
  int found = 0;
  for (int i = 0; i < 500; ++i) {
    const AngleCosTriple t{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                           rng.uniform(-1.0, 1.0)};
    if (pillow_value(t) < 0.0) continue;
    const P3PSolution sol = preimages(base, t);
    CHECK(sol.solutions.size() <= 4);
    for (const P3PCandidate& cand : sol.solutions) {
      CHECK(cand.residual <= 1e-7);
      CHECK(cand.apex.r >= 0.0);
      ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("the all-ones target is reported as a pure limit") {
  const P3PSolution sol =
      preimages(fixture_right345(), {1.0, 1.0, 1.0});
  CHECK(sol.solutions.empty());
  CHECK(sol.note.find("limit point") != std::string::npos);
}

TEST_CASE("targets outside the cube or the angle bounds have no preimage") {
  const BaseTriangle base = fixture_equilateral();
  const P3PSolution cube = preimages(base, {1.5, 0.0, 0.0});
  CHECK(cube.solutions.empty());
  CHECK(cube.note.find("unit cube") != std::string::npos);
  const P3PSolution tri = preimages(base, {0.9, 0.9, -0.9});
  CHECK(tri.solutions.empty());
  CHECK(tri.note.find("solid angle") != std::string::npos);
}

TEST_CASE("arc image constants have only planar preimages") {
  const BaseTriangle base = fixture_equilateral();
  const SpecialPoints sp = special_points(base);
  const P3PSolution sol = preimages(base, sp.a_tilde);
  for (const P3PCandidate& cand : sol.solutions) CHECK(cand.planar);
}

TEST_CASE("count profile is deterministic in the seed") {
  const BaseTriangle base = fixture_obtuse();
  const CountProfile a = preimage_count_profile(base, 300, 99);
  const CountProfile b = preimage_count_profile(base, 300, 99);
  CHECK(a.counts == b.counts);
  CHECK(a.overflow == b.overflow);
  CHECK(a.nonconverged == b.nonconverged);
  std::uint64_t total = a.overflow;
  for (std::uint64_t c : a.counts) total += c;
  CHECK(total == 300);
}

TEST_CASE("roundtrip near the cylinder flags the warning band") {
  const BaseTriangle base = fixture_equilateral();
  const ApexPoint apex{std::cos(1.2), std::sin(1.2), 0.9};
  const RoundtripReport rt = roundtrip_check(base, apex);
  CHECK(rt.near_cylinder);
  CHECK(rt.count >= 1);
}

TEST_CASE("membership of distinguished targets over the equilateral base") {
  const BaseTriangle base = fixture_equilateral();
  const SpecialPoints sp = special_points(base);
  CHECK(sigma_membership(base, sp.i_triangle) == SigmaMembership::InSigma);
  CHECK(sigma_membership(base, {1.0, 1.0, 1.0}) ==
        SigmaMembership::OnClosureBoundaryOnly);
  CHECK(sigma_membership(base, sp.a_tilde) ==
        SigmaMembership::OnClosureBoundaryOnly);
  CHECK(sigma_membership(base, {0.99, -0.99, 0.99}) ==
        SigmaMembership::Outside);
  // A generic interior point of the attainable set.
  const AngleCosTriple img = face_cosines(base, {0.2, -0.1, 1.3});
  CHECK(sigma_membership(base, img) == SigmaMembership::InSigma);
}
