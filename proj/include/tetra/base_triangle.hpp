#pragma once

#include <Eigen/Dense>

#include "tetra/errors.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Side lengths of the base, in the naming used throughout: ab = |AB|,
// ac = |AC|, bc = |BC|.
struct SideLengths {
  double ab = 0.0;
  double ac = 0.0;
  double bc = 0.0;
};

// Interior angles at the three vertices.
struct BaseAngles {
  double at_a = 0.0;
  double at_b = 0.0;
  double at_c = 0.0;

  double at(VertexId v) const {
    return v == VertexId::A ? at_a : (v == VertexId::B ? at_b : at_c);
  }
};

enum class TriangleKind { Acute, Right, Obtuse };

struct Circumcircle {
  Eigen::Vector2d center;
  double radius = 0.0;
};

// The fixed planar base ABC. Construction validates non-degeneracy and
// precomputes the derived quantities every other module keeps asking for.
class BaseTriangle {
 public:
  BaseTriangle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
               const Eigen::Vector2d& c, const ToleranceConfig& tol = {});

  const Eigen::Vector2d& a() const { return a_; }
  const Eigen::Vector2d& b() const { return b_; }
  const Eigen::Vector2d& c() const { return c_; }
  const Eigen::Vector2d& vertex(VertexId v) const {
    return v == VertexId::A ? a_ : (v == VertexId::B ? b_ : c_);
  }
  const ToleranceConfig& tol() const { return tol_; }

  // Twice the signed area of ABC; positive for counterclockwise order.
  double twice_signed_area() const { return twice_area_; }

  const SideLengths& sides() const { return sides_; }
  const BaseAngles& angles() const { return angles_; }
  const Circumcircle& circle() const { return circle_; }

 private:
  Eigen::Vector2d a_, b_, c_;
  ToleranceConfig tol_;
  double twice_area_ = 0.0;
  SideLengths sides_;
  BaseAngles angles_;
  Circumcircle circle_;
};

SideLengths side_lengths(const BaseTriangle& base);
BaseAngles base_angles(const BaseTriangle& base);

// Sign of cos(A)cos(B)cos(C) with a tolerance band around zero: positive
// means acute, a value inside the band means right, negative means obtuse.
TriangleKind classify(const BaseTriangle& base);

Circumcircle circumcircle(const BaseTriangle& base);

// Builds the base with the given interior angles on a circle of the given
// radius: A at angle zero, then B and C counterclockwise as dictated by the
// inscribed angle theorem. The angles must be positive and sum to pi.
BaseTriangle base_from_angles(double at_a, double at_b, double at_c,
                              double circumradius,
                              const ToleranceConfig& tol = {});

// Orientation-preserving similarity taking the base plane to the pose with
// the circumcenter at the origin, circumradius 1, and A at angle zero on the
// unit circle. The angular positions of B and C are the primary data; the
// tangent half-angle coordinates some closed forms want are derived from
// them at the call site because two incompatible conventions are in use
// (cotangent for the cylinder-image formulas, tangent for the interior
// witness).
class CanonicalFrame {
 public:
  CanonicalFrame(const Eigen::Vector2d& center, double radius,
                 double rotation, double theta_b, double theta_c,
                 const ToleranceConfig& tol);

  double theta_a() const { return 0.0; }
  double theta_b() const { return theta_b_; }
  double theta_c() const { return theta_c_; }
  double theta(VertexId v) const {
    return v == VertexId::A ? 0.0 : (v == VertexId::B ? theta_b_ : theta_c_);
  }

  // cot(theta/2) coordinates of B and C.
  double u_cot() const;
  double v_cot() const;
  // tan(theta/2) coordinates of B and C.
  double u_tan() const;
  double v_tan() const;

  double scale() const { return 1.0 / radius_; }

  Eigen::Vector2d to_canonical(const Eigen::Vector2d& p) const;
  Eigen::Vector2d from_canonical(const Eigen::Vector2d& p) const;
  ApexPoint apex_to_canonical(const ApexPoint& d) const;
  ApexPoint apex_from_canonical(const ApexPoint& d) const;
  // Direction vectors transform by the linear part alone.
  Eigen::Vector3d direction_from_canonical(const Eigen::Vector3d& w) const;

  // The base triangle as seen in this frame: vertices on the unit circle.
  const BaseTriangle& canonical_base() const { return canon_base_; }

 private:
  Eigen::Vector2d center_;
  double radius_;
  double cos_rot_, sin_rot_;
  double theta_b_, theta_c_;
  BaseTriangle canon_base_;
};

CanonicalFrame canonicalize(const BaseTriangle& base);

// Cayley-Menger determinant of the six lengths (apex distances d plus base
// sides): the 5x5 determinant that is 288 V^2 for a realizable tetrahedron.
double cayley_menger(const DistanceTriple& d, const SideLengths& s);
double cayley_menger(const DistanceTriple& d, const BaseTriangle& base);

// The minor obtained by deleting the apex row and column; it is negative
// exactly when the three base lengths form a genuine triangle.
double cayley_menger_base(const SideLengths& s);
double cayley_menger_base(const BaseTriangle& base);

// Six lengths are the edges of a tetrahedron iff the 5x5 determinant is
// positive and the base minor is negative.
bool is_realizable(const DistanceTriple& d, const BaseTriangle& base);

enum class ParaboloidSide { Inside, OnParaboloid, Outside };

// Classification of a squared-distance triple (u, v, w) = (x^2, y^2, z^2)
// against the elliptic paraboloid that carries the realizability boundary.
// The polynomial evaluated here equals half the Cayley-Menger determinant.
ParaboloidSide dt_membership(double u, double v, double w,
                             const BaseTriangle& base);
double paraboloid_value(double u, double v, double w, const SideLengths& s);

// Squared volume from apex distances and apex angle cosines.
double volume_squared_cosines(double x, double y, double z,
                              const AngleCosTriple& t);

// Squared volume from apex distances and apex angles via the four-sine
// product.
double volume_squared_sines(double x, double y, double z, double alpha,
                            double beta, double gamma);

}  // namespace tetra
