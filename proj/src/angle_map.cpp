#include "tetra/angle_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tetra {

namespace {

Eigen::Vector3d lift(const Eigen::Vector2d& p) { return {p.x(), p.y(), 0.0}; }

double checked_cosine(double num, double den, double tol) {
  const double raw = num / den;
  if (std::abs(raw) > 1.0 + tol)
    throw InconsistentDistances(
        "distances do not close up into a triangle with the base side");
  return std::clamp(raw, -1.0, 1.0);
}

}  // namespace

DistanceTriple distances(const BaseTriangle& base, const ApexPoint& apex) {
  const Eigen::Vector3d d = apex.vec();
  DistanceTriple out;
  out.x = (lift(base.c()) - d).norm();
  out.y = (lift(base.b()) - d).norm();
  out.z = (lift(base.a()) - d).norm();
  if (!(out.x > 0.0) || !(out.y > 0.0) || !(out.z > 0.0))
    throw ApexAtBaseVertex("apex coincides with a base vertex");
  return out;
}

AngleCosTriple face_cosines_dist(const DistanceTriple& d,
                                 const BaseTriangle& base) {
  if (!(d.x > 0.0) || !(d.y > 0.0) || !(d.z > 0.0))
    throw NonPositiveLength("apex distances must be positive");
  const SideLengths& s = base.sides();
  const double tol = base.tol().tol_predicate;
  const double x = d.x, y = d.y, z = d.z;
  AngleCosTriple t;
  t.c_alpha =
      checked_cosine(x * x + y * y - s.bc * s.bc, 2.0 * x * y, tol);
  t.c_beta = checked_cosine(x * x + z * z - s.ac * s.ac, 2.0 * x * z, tol);
  t.c_gamma = checked_cosine(y * y + z * z - s.ab * s.ab, 2.0 * y * z, tol);
  return t;
}

AngleCosTriple face_cosines(const BaseTriangle& base, const ApexPoint& apex) {
  return face_cosines_dist(distances(base, apex), base);
}

Gradients gradients(const BaseTriangle& base, const ApexPoint& apex) {
  const DistanceTriple dist = distances(base, apex);
  const double x = dist.x, y = dist.y, z = dist.z;
  const SideLengths& s = base.sides();
  const Eigen::Vector3d d = apex.vec();
  const Eigen::Vector3d da = lift(base.a()) - d;
  const Eigen::Vector3d db = lift(base.b()) - d;
  const Eigen::Vector3d dc = lift(base.c()) - d;
  const double ab2 = s.ab * s.ab, ac2 = s.ac * s.ac, bc2 = s.bc * s.bc;

  Gradients g;
  g.g1 = (x * x - y * y - bc2) / (2.0 * y * y * y * x) * db +
         (y * y - x * x - bc2) / (2.0 * x * x * x * y) * dc;
  g.g2 = (x * x - z * z - ac2) / (2.0 * z * z * z * x) * da +
         (z * z - x * x - ac2) / (2.0 * x * x * x * z) * dc;
  g.g3 = (y * y - z * z - ab2) / (2.0 * z * z * z * y) * da +
         (z * z - y * y - ab2) / (2.0 * y * y * y * z) * db;
  return g;
}

double jacobian_det(const BaseTriangle& base, const ApexPoint& apex) {
  if (apex.r == 0.0)
    throw CoplanarApex("apex lies in the base plane");
  const DistanceTriple dist = distances(base, apex);
  const double x2 = dist.x * dist.x, y2 = dist.y * dist.y,
               z2 = dist.z * dist.z;
  const SideLengths& s = base.sides();
  const double ab2 = s.ab * s.ab, ac2 = s.ac * s.ac, bc2 = s.bc * s.bc;
  const double lobe = ab2 * (x2 - z2) * (y2 - x2) +
                      ac2 * (z2 - y2) * (y2 - x2) +
                      bc2 * (z2 - y2) * (x2 - z2) + ab2 * ac2 * bc2;
  return -lobe / (4.0 * x2 * x2 * y2 * y2 * z2 * z2);
}

double jacobian_det_cartesian(const BaseTriangle& base, const ApexPoint& apex) {
  const Gradients g = gradients(base, apex);
  Eigen::Matrix3d m;
  m.row(0) = g.g3;
  m.row(1) = g.g2;
  m.row(2) = g.g1;
  return m.determinant();
}

bool angle_inequalities(const AngleCosTriple& t, double slack) {
  const double a = std::acos(std::clamp(t.c_alpha, -1.0, 1.0));
  const double b = std::acos(std::clamp(t.c_beta, -1.0, 1.0));
  const double c = std::acos(std::clamp(t.c_gamma, -1.0, 1.0));
  return a < b + c + slack && b < a + c + slack && c < a + b + slack &&
         a + b + c < 2.0 * std::numbers::pi + slack;
}

ApexBoundsReport apex_angle_bounds(const BaseTriangle& base,
                               const ApexPoint& apex) {
  if (classify(base) != TriangleKind::Acute)
    throw NotAcuteBase("the sharpened angle bounds require an acute base");

  const AngleCosTriple t = face_cosines(base, apex);
  const double apex_ang[3] = {std::acos(std::clamp(t.c_alpha, -1.0, 1.0)),
                              std::acos(std::clamp(t.c_beta, -1.0, 1.0)),
                              std::acos(std::clamp(t.c_gamma, -1.0, 1.0))};
  const BaseAngles& ang = base.angles();
  const double base_ang[3] = {ang.at_a, ang.at_b, ang.at_c};
  const char* vertex_name[3] = {"A", "B", "C"};
  const double slack = 1e-12;

  ApexBoundsReport report;
  for (int k = 0; k < 3; ++k) {
    // Rotate apex and base angles in lockstep.
    const double aa = apex_ang[k % 3];
    const double bb = apex_ang[(k + 1) % 3];
    const double cc = apex_ang[(k + 2) % 3];
    const double va = base_ang[k % 3];
    const double vb = base_ang[(k + 1) % 3];
    const double vc = base_ang[(k + 2) % 3];
    const std::string tag = vertex_name[k];

    ApexBoundsReport::Item sum_item;
    sum_item.name = "angle_sum_" + tag;
    sum_item.hypothesis_met = true;
    sum_item.holds = va + bb + cc < 2.0 * std::numbers::pi + slack;
    report.items.push_back(sum_item);

    const bool hyp = aa <= va + slack;

    ApexBoundsReport::Item bound_item;
    bound_item.name = "apex_bound_" + tag;
    bound_item.hypothesis_met = hyp;
    bound_item.holds = bb <= std::max(vb, vc + aa) + slack;
    report.items.push_back(bound_item);

    ApexBoundsReport::Item cosine_item;
    cosine_item.name = "cosine_mix_" + tag;
    cosine_item.hypothesis_met = hyp;
    cosine_item.holds =
        std::cos(vc) * std::cos(bb) + std::cos(vb) * std::cos(cc) > -slack;
    report.items.push_back(cosine_item);
  }
  return report;
}

}  // namespace tetra
