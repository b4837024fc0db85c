#pragma once

#include <Eigen/Dense>
#include <array>

#include "tetra/angle_map.hpp"
#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

// True when the apex projects onto the circumcircle of the base, i.e. lies
// on the cylinder where the forward map degenerates. Works for planar
// apexes too.
bool on_cylinder(const BaseTriangle& base, const ApexPoint& apex);

// Residual of the inscribed-quadrilateral criterion for a planar point:
// (2 C1 t - C2)^2 + (2 C1 s - C3)^2 - C4 with the classical coefficients.
// Zero iff ABCD is cyclic; sign matches |D - O|^2 - R^2.
double cyclic_criterion(const BaseTriangle& base, const Eigen::Vector2d& d);

// The quartic polynomial in the apex distances whose zero set is the
// degeneracy cylinder. The Jacobian determinant is this value scaled by
// -1/(4 x^4 y^4 z^4).
double degeneracy_residual(const DistanceTriple& d, const SideLengths& s);

// Same locus written in squared distances (u, v, w) = (x^2, y^2, z^2).
double distance_cylinder_residual(double u, double v, double w,
                                  const SideLengths& s);

// Plane carrying the intersection of the squared-distance cylinder with the
// realizability paraboloid.
double distance_plane_residual(double u, double v, double w,
                               const SideLengths& s);

// A point of the degeneracy cylinder in canonical coordinates: angular
// position phi on the unit circumcircle and height r above the base plane.
struct CylinderPoint {
  double phi = 0.0;
  double r = 0.0;
};

// The forward map restricted to the cylinder, evaluated through the closed
// form in the half-angle coordinates of the frame. Agrees with face_cosines
// at the embedded 3D point; kept separate as an independent formula path.
AngleCosTriple fc_point(const CanonicalFrame& frame, const CylinderPoint& cp);

// Normal of the cylinder-image surface in the (t, r) chart, t = tan(phi/2).
// Vanishes exactly on the nonsmooth rays of the image (and, with the chart
// factor, at phi = pi where the chart itself closes up).
Eigen::Vector3d fc_normal(const CanonicalFrame& frame, const CylinderPoint& cp);

struct NonSmoothAngles {
  std::array<double, 3> phis;  // sorted, in [0, 2 pi)
};

// The three angular positions where the cylinder image fails to be smooth:
// roots of a cubic in tan(phi/2), with phi = pi taking the place of the
// infinite root when the cubic degenerates to a quadratic.
NonSmoothAngles nonsmooth_angles(const CanonicalFrame& frame);

// Gaussian curvature of the cylinder image away from the nonsmooth rays.
// Positive everywhere it is defined.
double gaussian_curvature_fc(const CanonicalFrame& frame,
                             const CylinderPoint& cp);

// Direction along which the forward map degenerates at a cylinder point:
// orthogonal to all three gradients, so the map moves only quadratically
// along it. Returned in the coordinates of the original base.
Eigen::Vector3d degenerate_direction(const BaseTriangle& base,
                                     const ApexPoint& apex);

// Value and first and second partial derivatives of the cylinder image in
// the (t, r) chart. Exposed for the curvature assembly and its tests.
struct FcDerivs {
  Eigen::Vector3d f, ft, fr, ftt, ftr, frr;
};

FcDerivs fc_derivatives(const CanonicalFrame& frame, double t, double r);

}  // namespace tetra
