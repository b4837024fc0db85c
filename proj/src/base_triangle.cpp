#include "tetra/base_triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tetra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

double wrap_two_pi(double a) {
  double t = std::fmod(a, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

BaseTriangle unit_circle_base(double theta_b, double theta_c,
                              const ToleranceConfig& tol) {
  return BaseTriangle(Eigen::Vector2d(1.0, 0.0),
                      Eigen::Vector2d(std::cos(theta_b), std::sin(theta_b)),
                      Eigen::Vector2d(std::cos(theta_c), std::sin(theta_c)),
                      tol);
}

}  // namespace

BaseTriangle::BaseTriangle(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                           const Eigen::Vector2d& c, const ToleranceConfig& tol)
    : a_(a), b_(b), c_(c), tol_(tol) {
  for (const auto* v : {&a_, &b_, &c_}) {
    if (!std::isfinite(v->x()) || !std::isfinite(v->y()))
      throw DegenerateBase("base vertex coordinate is not finite");
  }

  const Eigen::Vector2d p = b_ - a_;
  const Eigen::Vector2d q = c_ - a_;
  twice_area_ = p.x() * q.y() - p.y() * q.x();

  sides_.ab = p.norm();
  sides_.ac = q.norm();
  sides_.bc = (c_ - b_).norm();
  const double longest = std::max({sides_.ab, sides_.ac, sides_.bc});
  if (longest <= 0.0) throw DegenerateBase("base vertices coincide");
  if (std::abs(twice_area_) <= tol_.tol_area * longest * longest)
    throw DegenerateBase("base triangle is degenerate");

  const double ab = sides_.ab, ac = sides_.ac, bc = sides_.bc;
  angles_.at_a =
      std::acos(clamp_unit((ab * ab + ac * ac - bc * bc) / (2.0 * ab * ac)));
  angles_.at_b =
      std::acos(clamp_unit((ab * ab + bc * bc - ac * ac) / (2.0 * ab * bc)));
  angles_.at_c =
      std::acos(clamp_unit((ac * ac + bc * bc - ab * ab) / (2.0 * ac * bc)));

  const double d = 2.0 * twice_area_;
  const double p2 = p.squaredNorm();
  const double q2 = q.squaredNorm();
  const Eigen::Vector2d rel((q.y() * p2 - p.y() * q2) / d,
                            (p.x() * q2 - q.x() * p2) / d);
  circle_.center = a_ + rel;
  circle_.radius = rel.norm();
}

SideLengths side_lengths(const BaseTriangle& base) { return base.sides(); }

BaseAngles base_angles(const BaseTriangle& base) { return base.angles(); }

TriangleKind classify(const BaseTriangle& base) {
  const BaseAngles& ang = base.angles();
  const double product =
      std::cos(ang.at_a) * std::cos(ang.at_b) * std::cos(ang.at_c);
  if (std::abs(product) <= base.tol().tol_predicate)
    return TriangleKind::Right;
  return product > 0.0 ? TriangleKind::Acute : TriangleKind::Obtuse;
}

Circumcircle circumcircle(const BaseTriangle& base) { return base.circle(); }

BaseTriangle base_from_angles(double at_a, double at_b, double at_c,
                              double circumradius,
                              const ToleranceConfig& tol) {
  if (!(at_a > 0.0) || !(at_b > 0.0) || !(at_c > 0.0))
    throw DegenerateBase("base angles must be positive");
  if (std::abs(at_a + at_b + at_c - std::numbers::pi) > 1e-9)
    throw DegenerateBase("base angles must sum to pi");
  if (!(circumradius > 0.0))
    throw DegenerateBase("circumradius must be positive");
  // Central angles double the inscribed ones: going counterclockwise from A,
  // the arc to B subtends the angle at C and the arc back from C subtends
  // the angle at B.
  const double theta_b = 2.0 * at_c;
  const double theta_c = kTwoPi - 2.0 * at_b;
  const double r = circumradius;
  return BaseTriangle(
      Eigen::Vector2d(r, 0.0),
      Eigen::Vector2d(r * std::cos(theta_b), r * std::sin(theta_b)),
      Eigen::Vector2d(r * std::cos(theta_c), r * std::sin(theta_c)), tol);
}

CanonicalFrame::CanonicalFrame(const Eigen::Vector2d& center, double radius,
                               double rotation, double theta_b, double theta_c,
                               const ToleranceConfig& tol)
    : center_(center),
      radius_(radius),
      cos_rot_(std::cos(rotation)),
      sin_rot_(std::sin(rotation)),
      theta_b_(theta_b),
      theta_c_(theta_c),
      canon_base_(unit_circle_base(theta_b, theta_c, tol)) {}

double CanonicalFrame::u_cot() const {
  return std::cos(0.5 * theta_b_) / std::sin(0.5 * theta_b_);
}

double CanonicalFrame::v_cot() const {
  return std::cos(0.5 * theta_c_) / std::sin(0.5 * theta_c_);
}

double CanonicalFrame::u_tan() const { return std::tan(0.5 * theta_b_); }

double CanonicalFrame::v_tan() const { return std::tan(0.5 * theta_c_); }

Eigen::Vector2d CanonicalFrame::to_canonical(const Eigen::Vector2d& p) const {
  const Eigen::Vector2d q = p - center_;
  return Eigen::Vector2d(cos_rot_ * q.x() + sin_rot_ * q.y(),
                         -sin_rot_ * q.x() + cos_rot_ * q.y()) /
         radius_;
}

Eigen::Vector2d CanonicalFrame::from_canonical(const Eigen::Vector2d& p) const {
  return center_ + radius_ * Eigen::Vector2d(
                                 cos_rot_ * p.x() - sin_rot_ * p.y(),
                                 sin_rot_ * p.x() + cos_rot_ * p.y());
}

ApexPoint CanonicalFrame::apex_to_canonical(const ApexPoint& d) const {
  const Eigen::Vector2d xy = to_canonical({d.p, d.q});
  return {xy.x(), xy.y(), d.r / radius_};
}

ApexPoint CanonicalFrame::apex_from_canonical(const ApexPoint& d) const {
  const Eigen::Vector2d xy = from_canonical({d.p, d.q});
  return {xy.x(), xy.y(), d.r * radius_};
}

Eigen::Vector3d CanonicalFrame::direction_from_canonical(
    const Eigen::Vector3d& w) const {
  return radius_ * Eigen::Vector3d(cos_rot_ * w.x() - sin_rot_ * w.y(),
                                   sin_rot_ * w.x() + cos_rot_ * w.y(), w.z());
}

CanonicalFrame canonicalize(const BaseTriangle& base) {
  const Circumcircle& cc = base.circle();
  const Eigen::Vector2d ra = base.a() - cc.center;
  const double rotation = std::atan2(ra.y(), ra.x());
  const double cr = std::cos(rotation), sr = std::sin(rotation);
  auto angle_of = [&](const Eigen::Vector2d& p) {
    const Eigen::Vector2d q = p - cc.center;
    return wrap_two_pi(
        std::atan2(-sr * q.x() + cr * q.y(), cr * q.x() + sr * q.y()));
  };
  return CanonicalFrame(cc.center, cc.radius, rotation, angle_of(base.b()),
                        angle_of(base.c()), base.tol());
}

double cayley_menger(const DistanceTriple& d, const SideLengths& s) {
  const double u = d.x * d.x, v = d.y * d.y, w = d.z * d.z;
  const double ab2 = s.ab * s.ab, ac2 = s.ac * s.ac, bc2 = s.bc * s.bc;
  Eigen::Matrix<double, 5, 5> m;
  // Point order: apex, C, B, A; border of ones last.
  m << 0.0, u, v, w, 1.0,
       u, 0.0, bc2, ac2, 1.0,
       v, bc2, 0.0, ab2, 1.0,
       w, ac2, ab2, 0.0, 1.0,
       1.0, 1.0, 1.0, 1.0, 0.0;
  return m.determinant();
}

double cayley_menger(const DistanceTriple& d, const BaseTriangle& base) {
  return cayley_menger(d, base.sides());
}

double cayley_menger_base(const SideLengths& s) {
  const double ab2 = s.ab * s.ab, ac2 = s.ac * s.ac, bc2 = s.bc * s.bc;
  Eigen::Matrix4d m;
  m << 0.0, bc2, ac2, 1.0,
       bc2, 0.0, ab2, 1.0,
       ac2, ab2, 0.0, 1.0,
       1.0, 1.0, 1.0, 0.0;
  return m.determinant();
}

double cayley_menger_base(const BaseTriangle& base) {
  return cayley_menger_base(base.sides());
}

bool is_realizable(const DistanceTriple& d, const BaseTriangle& base) {
  if (!(d.x > 0.0) || !(d.y > 0.0) || !(d.z > 0.0))
    throw NonPositiveLength("apex distances must be positive");
  return cayley_menger(d, base) > 0.0 && cayley_menger_base(base) < 0.0;
}

double paraboloid_value(double u, double v, double w, const SideLengths& s) {
  const double A = s.ab * s.ab, B = s.ac * s.ac, C = s.bc * s.bc;
  return -A * u * u - B * v * v - C * w * w + (A + B - C) * u * v +
         (A - B + C) * u * w + (B + C - A) * v * w +
         (A * B + A * C - A * A) * u + (A * B + B * C - B * B) * v +
         (A * C + B * C - C * C) * w - A * B * C;
}

ParaboloidSide dt_membership(double u, double v, double w,
                             const BaseTriangle& base) {
  const SideLengths& s = base.sides();
  const double value = paraboloid_value(u, v, w, s);
  const double s2 = std::max({s.ab, s.ac, s.bc});
  const double q = std::max({u, v, w, s2 * s2});
  const double band = base.tol().tol_predicate * (s2 * s2) * q * q;
  if (std::abs(value) <= band) return ParaboloidSide::OnParaboloid;
  return value > 0.0 ? ParaboloidSide::Inside : ParaboloidSide::Outside;
}

double volume_squared_cosines(double x, double y, double z,
                              const AngleCosTriple& t) {
  const double c1 = t.c_alpha, c2 = t.c_beta, c3 = t.c_gamma;
  const double gram = 1.0 + 2.0 * c1 * c2 * c3 - c1 * c1 - c2 * c2 - c3 * c3;
  return x * x * y * y * z * z * gram / 36.0;
}

double volume_squared_sines(double x, double y, double z, double alpha,
                            double beta, double gamma) {
  const double sigma = 0.5 * (alpha + beta + gamma);
  return x * x * y * y * z * z / 9.0 * std::sin(sigma) *
         std::sin(sigma - alpha) * std::sin(sigma - beta) *
         std::sin(sigma - gamma);
}

}  // namespace tetra
