#include "tetra/limits.hpp"

#include <cmath>

#include "tetra/degeneracy.hpp"
#include "tetra/pillow.hpp"

namespace tetra {

namespace {

void free_components(const AngleCosTriple& t, int axis, double& f,
                     double& s) {
  switch (axis) {
    case 0: f = t.c_beta; s = t.c_gamma; break;
    case 1: f = t.c_alpha; s = t.c_gamma; break;
    default: f = t.c_alpha; s = t.c_beta; break;
  }
}

}  // namespace

double LimitSolidEllipse::form_value(const AngleCosTriple& t) const {
  double f = 0.0, s = 0.0;
  free_components(t, axis, f, s);
  return f * f + s * s - 2.0 * fixed_value * f * s;
}

bool LimitSolidEllipse::contains(const AngleCosTriple& t, double tol) const {
  return std::abs(plane_residual(t)) <= tol &&
         form_value(t) <= bound() + tol;
}

PillowSlice LimitSolidEllipse::boundary_slice() const {
  return pillowcase_slice(axis, fixed_value);
}

LimitSolidEllipse limit_solid_ellipse(const BaseTriangle& base, VertexId v) {
  LimitSolidEllipse lim;
  lim.vertex = v;
  lim.axis = static_cast<int>(v);
  lim.fixed_value = std::cos(base.angles().at(v));
  return lim;
}

LimitSegments limit_segments(const BaseTriangle& base) {
  const SpecialPoints sp = special_points(base);
  LimitSegments out;
  out.segs[0] = {sp.b_tilde, sp.c_tilde};
  out.segs[1] = {sp.a_tilde, sp.c_tilde};
  out.segs[2] = {sp.a_tilde, sp.b_tilde};
  return out;
}

Eigen::Vector3d asymptotic_direction(const CanonicalFrame& frame) {
  const double tb = frame.theta_b(), tc = frame.theta_c();
  return {std::cos(tb - tc) - 1.0, std::cos(tc) - 1.0, std::cos(tb) - 1.0};
}

Eigen::Vector3d asymptotic_rate(const CanonicalFrame& frame,
                                const CylinderPoint& cp) {
  const AngleCosTriple f = fc_point(frame, cp);
  return cp.r * cp.r *
         (f.vec() - Eigen::Vector3d(1.0, 1.0, 1.0));
}

ApexPoint interior_witness(const BaseTriangle& base) {
  if (classify(base) != TriangleKind::Acute)
    throw NotAcuteBase("only acute bases attain their own angle triple");
  const CanonicalFrame frame = canonicalize(base);
  const double u = frame.u_tan(), v = frame.v_tan();
  const double mix = 1.0 + u * v;
  if (!(mix < 0.0))
    throw NotAcuteBase("only acute bases attain their own angle triple");
  const double den = (1.0 + u * u) * (1.0 + v * v);
  ApexPoint canonical;
  canonical.p = (u * u * v * v - u * u - v * v - 3.0) / den;
  canonical.q = -2.0 * (u + v) * mix / den;
  canonical.r = std::sqrt(-16.0 * mix / den);
  return frame.apex_from_canonical(canonical);
}

RegionMarkerTable omega_markers(const BaseTriangle& base) {
  const BaseAngles& ang = base.angles();
  RegionMarkerTable table;
  table.center = {std::cos(ang.at_a), std::cos(ang.at_b),
                  std::cos(ang.at_c)};

  const bool acute = classify(base) == TriangleKind::Acute;
  int widest = 0;
  if (ang.at_b > ang.at(static_cast<VertexId>(widest))) widest = 1;
  if (ang.at_c > ang.at(static_cast<VertexId>(widest))) widest = 2;

  for (int idx = 0; idx < 8; ++idx) {
    const bool plus[3] = {(idx & 4) != 0, (idx & 2) != 0, (idx & 1) != 0};
    const int nplus = int(plus[0]) + int(plus[1]) + int(plus[2]);
    Marker m;
    if (acute) {
      m = nplus == 1 ? Marker::PlusMinus : Marker::Plus;
    } else if (nplus == 0 || nplus == 3) {
      m = Marker::Plus;
    } else if (nplus == 1) {
      m = plus[widest] ? Marker::PlusMinus : Marker::Minus;
    } else {
      m = plus[widest] ? Marker::Plus : Marker::Minus;
    }
    table.markers[idx] = m;
  }
  return table;
}

}  // namespace tetra
