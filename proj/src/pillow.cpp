#include "tetra/pillow.hpp"

#include <cmath>

namespace tetra {

PillowSide pillow_membership(const AngleCosTriple& t, double tol) {
  const double cube_excess =
      std::max({std::abs(t.c_alpha), std::abs(t.c_beta), std::abs(t.c_gamma)}) -
      1.0;
  if (cube_excess > tol) return PillowSide::Outside;
  const double value = pillow_value(t);
  if (value > tol) return PillowSide::Interior;
  if (value < -tol) return PillowSide::Outside;
  return PillowSide::OnPillowcase;
}

AngleCosTriple param_to_pillowcase(const PillowParam& p) {
  return {std::cos(p.phi - p.psi), std::cos(p.psi), std::cos(p.phi)};
}

double PillowSlice::eccentricity() const {
  const double m = std::abs(c);
  return std::sqrt(2.0 * m / (1.0 + m));
}

PillowSlice pillowcase_slice(int axis, double c) {
  if (axis < 0 || axis > 2)
    throw GeometryError("slice axis must be 0, 1 or 2");
  if (!std::isfinite(c) || std::abs(c) > 1.0)
    throw DegenerateSlice("slice plane misses the pillow");
  PillowSlice s;
  s.axis = axis;
  s.c = c;
  s.coef_xx = 1.0;
  s.coef_xy = -2.0 * c;
  s.coef_yy = 1.0;
  s.rhs = 1.0 - c * c;
  return s;
}

PillowEdges pillowcase_edges() {
  PillowEdges e;
  e.vertices[0] = {1.0, 1.0, 1.0};
  e.vertices[1] = {1.0, -1.0, -1.0};
  e.vertices[2] = {-1.0, 1.0, -1.0};
  e.vertices[3] = {-1.0, -1.0, 1.0};
  e.segments = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  // Chords swept by planar apexes, one per fixed first, second, third
  // coordinate sign pattern.
  e.tetra_intervals = {3, 5, 4};
  return e;
}

SpecialPoints special_points(const BaseTriangle& base) {
  const BaseAngles& ang = base.angles();
  const double ca = std::cos(ang.at_a);
  const double cb = std::cos(ang.at_b);
  const double cc = std::cos(ang.at_c);
  SpecialPoints sp;
  sp.a_tilde = {-ca, cb, cc};
  sp.b_tilde = {ca, -cb, cc};
  sp.c_tilde = {ca, cb, -cc};
  sp.i_triangle = {ca, cb, cc};
  return sp;
}

}  // namespace tetra
