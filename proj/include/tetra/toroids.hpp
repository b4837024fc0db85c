#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Surface of points seeing the chord [k, l] under the fixed angle alpha.
struct Toroid {
  Eigen::Vector3d k, l;
  double alpha = 0.0;
};

// cos(angle at m between k and l) minus cos(alpha); zero on the toroid.
double toroid_residual(const Toroid& t, const Eigen::Vector3d& m);

// Intersection curve of the cylinder with the critical toroid built on one
// base side (chord = that side, angle = the opposite base angle). In
// canonical coordinates the height profile is
//   z(phi) = 2 sqrt(cos_opposite * cos(phi - mu)),
// where mu is the midpoint of the side's circumcircle arc that does not
// contain the opposite vertex, and phi runs over [mu - pi/2, mu + pi/2].
struct CriticalCurve {
  SideId side = SideId::BC;
  double mu = 0.0;
  double cos_opposite = 0.0;
  double phi_lo = 0.0;
  double phi_hi = 0.0;

  double height(double phi) const;
  Eigen::Vector3d point(double phi) const;  // canonical (cos phi, sin phi, z)
};

// Throws EmptyCurve when the opposite angle is not acute, in which case the
// toroid never reaches the cylinder.
CriticalCurve critical_curve(const CanonicalFrame& frame, SideId side);

// Patch of the cylinder pinched between the two critical curves of the
// sides meeting at one vertex. Exists iff both opposite angles are acute.
struct SpecialRegion {
  VertexId vertex = VertexId::A;
  CriticalCurve first, second;  // first has the larger arc midpoint
  double phi_lo = 0.0;
  double phi_hi = 0.0;
  double phi_split = 0.0;  // where the two height profiles cross

  double z_max(double phi) const;
};

SpecialRegion special_region(const CanonicalFrame& frame, VertexId vertex);

// All special regions of a base: three for an acute base, one (at the
// vertex of the largest angle) otherwise.
std::vector<SpecialRegion> special_regions_all(const BaseTriangle& base);

// True iff the apex lies on the cylinder with 0 < r <= z_max inside some
// region's angular range. Bounding curves count as inside, the base circle
// does not.
bool in_special_region(const BaseTriangle& base, const ApexPoint& apex);

}  // namespace tetra
