#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Defining polynomial of the pillow: non-negative inside, zero on the
// pillowcase surface.
inline double pillow_value(const AngleCosTriple& t) {
  return 1.0 + 2.0 * t.c_alpha * t.c_beta * t.c_gamma - t.c_alpha * t.c_alpha -
         t.c_beta * t.c_beta - t.c_gamma * t.c_gamma;
}

enum class PillowSide { Interior, OnPillowcase, Outside };

// Sign classification with a tolerance band, including the cube bound
// |component| <= 1 that the cubic alone does not enforce.
PillowSide pillow_membership(const AngleCosTriple& t, double tol = 1e-9);

struct PillowParam {
  double phi = 0.0;
  double psi = 0.0;
};

// Two-angle parametrization covering the entire pillowcase:
// (phi, psi) -> (cos(phi - psi), cos psi, cos phi).
AngleCosTriple param_to_pillowcase(const PillowParam& p);

// Plane slice of the pillowcase at component 'axis' fixed to c. In the two
// free coordinates the slice is the ellipse
//   coef_xx A^2 + coef_xy A B + coef_yy B^2 = rhs.
struct PillowSlice {
  int axis = 2;  // 0, 1, 2 for first, second, third coordinate
  double c = 0.0;
  double coef_xx = 1.0;
  double coef_xy = 0.0;
  double coef_yy = 1.0;
  double rhs = 1.0;

  double residual(double first, double second) const {
    return coef_xx * first * first + coef_xy * first * second +
           coef_yy * second * second - rhs;
  }
  double eccentricity() const;
};

PillowSlice pillowcase_slice(int axis, double c);

// The four corner vertices of the pillow and the six straight edges joining
// them (the pillowcase contains all of them). tetra_intervals indexes the
// three edges opposite the all-ones vertex, in the order they come up as
// planar image chords.
struct PillowEdges {
  std::array<Eigen::Vector3d, 4> vertices;
  std::array<std::pair<int, int>, 6> segments;
  std::array<int, 3> tetra_intervals;
};

PillowEdges pillowcase_edges();

// Distinguished image points of a base: the three constant values the map
// takes on the circumcircle arcs and the triple of base angle cosines.
struct SpecialPoints {
  AngleCosTriple a_tilde, b_tilde, c_tilde;
  AngleCosTriple i_triangle;
};

SpecialPoints special_points(const BaseTriangle& base);

}  // namespace tetra
