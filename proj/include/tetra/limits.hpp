#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "tetra/base_triangle.hpp"
#include "tetra/degeneracy.hpp"
#include "tetra/pillow.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Accumulation set of the forward map as the apex approaches one base
// vertex: a solid ellipse in the coordinate plane where the component tied
// to that vertex is frozen at the base angle cosine. Its boundary is the
// matching pillowcase slice.
struct LimitSolidEllipse {
  VertexId vertex = VertexId::A;
  int axis = 0;              // which cosine component is fixed
  double fixed_value = 0.0;  // cosine of the base angle at the vertex

  double plane_residual(const AngleCosTriple& t) const {
    return t.component(axis) - fixed_value;
  }
  // Quadratic form in the two free components; inside iff <= bound().
  double form_value(const AngleCosTriple& t) const;
  double bound() const { return 1.0 - fixed_value * fixed_value; }
  bool contains(const AngleCosTriple& t, double tol) const;
  PillowSlice boundary_slice() const;
};

LimitSolidEllipse limit_solid_ellipse(const BaseTriangle& base, VertexId v);

// The three straight segments joining the arc-image points pairwise; the
// segment avoiding a vertex's point lies inside that vertex's solid
// ellipse.
struct LimitSegments {
  std::array<std::pair<AngleCosTriple, AngleCosTriple>, 3> segs;
};

LimitSegments limit_segments(const BaseTriangle& base);

// Direction of approach to (1, 1, 1) as the apex height grows: the limit of
// r^2 (F - (1,1,1)), the same for every angular position.
Eigen::Vector3d asymptotic_direction(const CanonicalFrame& frame);

// The finite-height rate r^2 (F(phi, r) - (1,1,1)) for comparison.
Eigen::Vector3d asymptotic_rate(const CanonicalFrame& frame,
                                const CylinderPoint& cp);

// Explicit apex strictly inside the cylinder whose image is the triple of
// base angle cosines. Only exists over acute bases.
ApexPoint interior_witness(const BaseTriangle& base);

enum class Marker { Plus, Minus, PlusMinus };

// Interior/exterior census of the eight octants around the base angle
// cosine point: Plus cells meet the interior of the image closure and
// nothing outside it, Minus cells only the outside, PlusMinus cells both.
struct RegionMarkerTable {
  std::array<Marker, 8> markers;  // index: bit2 = x side, bit1 = y, bit0 = z
  AngleCosTriple center;

  static int octant_index(bool x_plus, bool y_plus, bool z_plus) {
    return (x_plus ? 4 : 0) | (y_plus ? 2 : 0) | (z_plus ? 1 : 0);
  }
  int octant(const AngleCosTriple& t) const {
    return octant_index(t.c_alpha > center.c_alpha, t.c_beta > center.c_beta,
                        t.c_gamma > center.c_gamma);
  }
  Marker marker(const AngleCosTriple& t) const { return markers[octant(t)]; }
};

RegionMarkerTable omega_markers(const BaseTriangle& base);

}  // namespace tetra
