#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Distances from the apex to C, B, A in that order. Errors out when the
// apex sits on a base vertex, where the angle map has no value.
DistanceTriple distances(const BaseTriangle& base, const ApexPoint& apex);

// Law-of-cosines map from distance coordinates to apex angle cosines.
// Raw values that exceed 1 in magnitude by at most tol_predicate are taken
// as roundoff and clamped; beyond that the distances are rejected.
AngleCosTriple face_cosines_dist(const DistanceTriple& d,
                                 const BaseTriangle& base);

// The forward map: apex position to apex angle cosines.
AngleCosTriple face_cosines(const BaseTriangle& base, const ApexPoint& apex);

struct Gradients {
  Eigen::Vector3d g1, g2, g3;  // gradients of the three cosine components
};

// Closed-form Cartesian gradients of the three components, valid for any
// apex off the base vertices including planar ones.
Gradients gradients(const BaseTriangle& base, const ApexPoint& apex);

// Jacobian determinant of the forward map written in the basis of the three
// apex-to-vertex vectors (DC, DB, DA). That basis needs a non-coplanar apex,
// so r = 0 is rejected. Its zero set is the cylinder over the circumcircle.
double jacobian_det(const BaseTriangle& base, const ApexPoint& apex);

// Determinant of the Cartesian gradient matrix, rows (g3, g2, g1). Same
// zero set; differs from jacobian_det by the volume factor of the basis.
double jacobian_det_cartesian(const BaseTriangle& base, const ApexPoint& apex);

// The classical solid angle inequalities: each apex angle is less than the
// sum of the other two and the total is below 2 pi. slack > 0 checks them
// non-strictly with that margin.
bool angle_inequalities(const AngleCosTriple& t, double slack = 0.0);

struct ApexBoundsReport {
  struct Item {
    std::string name;
    bool hypothesis_met = true;  // conditional statements may not apply
    bool holds = true;
  };
  std::vector<Item> items;
  bool all_ok() const {
    for (const auto& it : items)
      if (it.hypothesis_met && !it.holds) return false;
    return true;
  }
};

// Evaluates the three sharpened angle bounds that hold over acute bases,
// together with their cyclic permutations. Throws NotAcuteBase otherwise.
ApexBoundsReport apex_angle_bounds(const BaseTriangle& base, const ApexPoint& apex);

}  // namespace tetra
