#include "tetra/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double a) {
  double t = std::fmod(a, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// Signed distance of an angle from pi, measured on the circle.
double seam_distance(double phi) {
  return std::abs(wrap_two_pi(phi) - kPi);
}

struct ChartPolys {
  double p1, p2, p3;
};

ChartPolys chart_polys(double u, double v, double t, double r) {
  const double t2 = t * t, r2 = r * r;
  return {(t2 + 1.0) * r2 + 4.0 * t2,
          (u * u + 1.0) * (t2 + 1.0) * r2 + 4.0 * (t * u - 1.0) * (t * u - 1.0),
          (v * v + 1.0) * (t2 + 1.0) * r2 +
              4.0 * (t * v - 1.0) * (t * v - 1.0)};
}

FcDerivs fc_derivs_uvtr(double u, double v, double t, double r) {
  const double a = (u * u + 1.0) * (v * v + 1.0);
  const double t2 = t * t, r2 = r * r;

  const double P1 = (t2 + 1.0) * r2 + 4.0 * t2;
  const double P1t = 2.0 * t * (r2 + 4.0);
  const double P1r = 2.0 * r * (t2 + 1.0);
  const double P1tt = 2.0 * (r2 + 4.0);
  const double P1tr = 4.0 * t * r;
  const double P1rr = 2.0 * (t2 + 1.0);

  const double P2 = (u * u + 1.0) * (t2 + 1.0) * r2 +
                    4.0 * (t * u - 1.0) * (t * u - 1.0);
  const double P2t = 2.0 * t * (u * u + 1.0) * r2 + 8.0 * u * (t * u - 1.0);
  const double P2r = 2.0 * r * (u * u + 1.0) * (t2 + 1.0);
  const double P2tt = 2.0 * (u * u + 1.0) * r2 + 8.0 * u * u;
  const double P2tr = 4.0 * t * r * (u * u + 1.0);
  const double P2rr = 2.0 * (u * u + 1.0) * (t2 + 1.0);

  const double P3 = (v * v + 1.0) * (t2 + 1.0) * r2 +
                    4.0 * (t * v - 1.0) * (t * v - 1.0);
  const double P3t = 2.0 * t * (v * v + 1.0) * r2 + 8.0 * v * (t * v - 1.0);
  const double P3r = 2.0 * r * (v * v + 1.0) * (t2 + 1.0);
  const double P3tt = 2.0 * (v * v + 1.0) * r2 + 8.0 * v * v;
  const double P3tr = 4.0 * t * r * (v * v + 1.0);
  const double P3rr = 2.0 * (v * v + 1.0) * (t2 + 1.0);

  const double B1 =
      a * (t2 + 1.0) * r2 + 4.0 * (u * v + 1.0) * (t * v - 1.0) * (t * u - 1.0);
  const double B1t =
      2.0 * a * t * r2 + 4.0 * (u * v + 1.0) * (2.0 * u * v * t - (u + v));
  const double B1r = 2.0 * a * (t2 + 1.0) * r;
  const double B1tt = 2.0 * a * r2 + 8.0 * u * v * (u * v + 1.0);
  const double B1tr = 4.0 * a * t * r;
  const double B1rr = 2.0 * a * (t2 + 1.0);

  const double B2 =
      (v * v + 1.0) * (t2 + 1.0) * r2 + 4.0 * t2 * v * v - 4.0 * t * v;
  const double B2t = 2.0 * t * (v * v + 1.0) * r2 + 8.0 * t * v * v - 4.0 * v;
  const double B2r = 2.0 * r * (v * v + 1.0) * (t2 + 1.0);
  const double B2tt = 2.0 * (v * v + 1.0) * r2 + 8.0 * v * v;
  const double B2tr = 4.0 * t * r * (v * v + 1.0);
  const double B2rr = 2.0 * (v * v + 1.0) * (t2 + 1.0);

  const double B3 =
      (u * u + 1.0) * (t2 + 1.0) * r2 + 4.0 * t2 * u * u - 4.0 * t * u;
  const double B3t = 2.0 * t * (u * u + 1.0) * r2 + 8.0 * t * u * u - 4.0 * u;
  const double B3r = 2.0 * r * (u * u + 1.0) * (t2 + 1.0);
  const double B3tt = 2.0 * (u * u + 1.0) * r2 + 8.0 * u * u;
  const double B3tr = 4.0 * t * r * (u * u + 1.0);
  const double B3rr = 2.0 * (u * u + 1.0) * (t2 + 1.0);

  struct Pack {
    double B, Bt, Br, Btt, Btr, Brr, beta;
    double A, At, Ar, Att, Atr, Arr;
    double C, Ct, Cr, Ctt, Ctr, Crr;
  };
  const Pack packs[3] = {
      {B1, B1t, B1r, B1tt, B1tr, B1rr, std::sqrt(a),
       P2, P2t, P2r, P2tt, P2tr, P2rr, P3, P3t, P3r, P3tt, P3tr, P3rr},
      {B2, B2t, B2r, B2tt, B2tr, B2rr, std::sqrt(v * v + 1.0),
       P1, P1t, P1r, P1tt, P1tr, P1rr, P3, P3t, P3r, P3tt, P3tr, P3rr},
      {B3, B3t, B3r, B3tt, B3tr, B3rr, std::sqrt(u * u + 1.0),
       P1, P1t, P1r, P1tt, P1tr, P1rr, P2, P2t, P2r, P2tt, P2tr, P2rr}};

  FcDerivs out;
  for (int i = 0; i < 3; ++i) {
    const Pack& k = packs[i];
    const double g = 1.0 / (k.beta * std::sqrt(k.A * k.C));
    // Log-derivative scheme keeps the quotient rule numerically tame.
    const double Lt = -0.5 * (k.At / k.A + k.Ct / k.C);
    const double Lr = -0.5 * (k.Ar / k.A + k.Cr / k.C);
    const double Ltt = -0.5 * ((k.Att * k.A - k.At * k.At) / (k.A * k.A) +
                               (k.Ctt * k.C - k.Ct * k.Ct) / (k.C * k.C));
    const double Ltr = -0.5 * ((k.Atr * k.A - k.At * k.Ar) / (k.A * k.A) +
                               (k.Ctr * k.C - k.Ct * k.Cr) / (k.C * k.C));
    const double Lrr = -0.5 * ((k.Arr * k.A - k.Ar * k.Ar) / (k.A * k.A) +
                               (k.Crr * k.C - k.Cr * k.Cr) / (k.C * k.C));
    const double gt = Lt * g;
    const double gr = Lr * g;
    const double gtt = (Ltt + Lt * Lt) * g;
    const double gtr = (Ltr + Lt * Lr) * g;
    const double grr = (Lrr + Lr * Lr) * g;
    out.f[i] = k.B * g;
    out.ft[i] = k.Bt * g + k.B * gt;
    out.fr[i] = k.Br * g + k.B * gr;
    out.ftt[i] = k.Btt * g + 2.0 * k.Bt * gt + k.B * gtt;
    out.ftr[i] = k.Btr * g + k.Bt * gr + k.Br * gt + k.B * gtr;
    out.frr[i] = k.Brr * g + 2.0 * k.Br * gr + k.B * grr;
  }
  return out;
}

double curvature_uvtr(double u, double v, double t, double r) {
  const FcDerivs d = fc_derivs_uvtr(u, v, t, r);
  const Eigen::Vector3d n = d.ft.cross(d.fr);
  const double n2 = n.squaredNorm();
  if (!(n2 > 1e-100))
    throw NonSmoothPoint("curvature is undefined on a nonsmooth ray");
  const double d2 =
      (d.ftt.dot(n) * d.frr.dot(n) - d.ftr.dot(n) * d.ftr.dot(n)) / n2;
  return d2 / n2;
}

}  // namespace

bool on_cylinder(const BaseTriangle& base, const ApexPoint& apex) {
  const Circumcircle& cc = base.circle();
  const double dist = (Eigen::Vector2d(apex.p, apex.q) - cc.center).norm();
  return std::abs(dist - cc.radius) <= base.tol().tol_predicate * cc.radius;
}

double cyclic_criterion(const BaseTriangle& base, const Eigen::Vector2d& d) {
  const double a1 = base.a().x(), a2 = base.a().y();
  const double b1 = base.b().x(), b2 = base.b().y();
  const double c1 = base.c().x(), c2 = base.c().y();
  const double C1 =
      a1 * b2 - a1 * c2 - a2 * b1 + a2 * c1 + b1 * c2 - b2 * c1;
  const double C2 = (a1 * a1 + a2 * a2) * (b2 - c2) +
                    (b1 * b1 + b2 * b2) * (c2 - a2) +
                    (c1 * c1 + c2 * c2) * (a2 - b2);
  const double C3 = (a1 * a1 + a2 * a2) * (c1 - b1) +
                    (b1 * b1 + b2 * b2) * (a1 - c1) +
                    (c1 * c1 + c2 * c2) * (b1 - a1);
  const SideLengths& s = base.sides();
  const double C4 =
      (s.bc * s.bc) * (s.ac * s.ac) * (s.ab * s.ab);
  const double ex = 2.0 * C1 * d.x() - C2;
  const double ey = 2.0 * C1 * d.y() - C3;
  return ex * ex + ey * ey - C4;
}

double distance_cylinder_residual(double u, double v, double w,
                                  const SideLengths& s) {
  const double A = s.ab * s.ab, B = s.ac * s.ac, C = s.bc * s.bc;
  return -A * u * u - B * v * v - C * w * w + (A + B - C) * u * v +
         (A - B + C) * u * w + (B + C - A) * v * w + A * B * C;
}

double degeneracy_residual(const DistanceTriple& d, const SideLengths& s) {
  return distance_cylinder_residual(d.x * d.x, d.y * d.y, d.z * d.z, s);
}

double distance_plane_residual(double u, double v, double w,
                               const SideLengths& s) {
  const double A = s.ab * s.ab, B = s.ac * s.ac, C = s.bc * s.bc;
  return (B + C - A) * A * u + (A + C - B) * B * v + (A + B - C) * C * w -
         2.0 * A * B * C;
}

AngleCosTriple fc_point(const CanonicalFrame& frame, const CylinderPoint& cp) {
  const double u = frame.u_cot(), v = frame.v_cot();
  const double s = std::sin(0.5 * cp.phi), c = std::cos(0.5 * cp.phi);
  const double r2 = cp.r * cp.r;
  const double q1 = r2 + 4.0 * s * s;
  const double q2 = (u * u + 1.0) * r2 + 4.0 * (s * u - c) * (s * u - c);
  const double q3 = (v * v + 1.0) * r2 + 4.0 * (s * v - c) * (s * v - c);
  if (!(q1 > 0.0) || !(q2 > 0.0) || !(q3 > 0.0))
    throw ApexAtBaseVertex("cylinder point coincides with a base vertex");
  AngleCosTriple out;
  out.c_alpha = ((v * v + 1.0) * (u * u + 1.0) * r2 +
                 4.0 * (u * v + 1.0) * (s * v - c) * (s * u - c)) /
                (std::sqrt(u * u + 1.0) * std::sqrt(v * v + 1.0) *
                 std::sqrt(q2) * std::sqrt(q3));
  out.c_beta = ((v * v + 1.0) * r2 + 4.0 * s * v * (s * v - c)) /
               (std::sqrt(v * v + 1.0) * std::sqrt(q1) * std::sqrt(q3));
  out.c_gamma = ((u * u + 1.0) * r2 + 4.0 * s * u * (s * u - c)) /
                (std::sqrt(u * u + 1.0) * std::sqrt(q1) * std::sqrt(q2));
  return out;
}

Eigen::Vector3d fc_normal(const CanonicalFrame& frame,
                          const CylinderPoint& cp) {
  const double u = frame.u_cot(), v = frame.v_cot();
  const double s = std::sin(0.5 * cp.phi), c = std::cos(0.5 * cp.phi);
  const double r = cp.r, r2 = r * r;
  const double q1 = r2 + 4.0 * s * s;
  const double q2 = (u * u + 1.0) * r2 + 4.0 * (s * u - c) * (s * u - c);
  const double q3 = (v * v + 1.0) * r2 + 4.0 * (s * v - c) * (s * v - c);
  if (!(q1 > 0.0) || !(q2 > 0.0) || !(q3 > 0.0))
    throw ApexAtBaseVertex("cylinder point coincides with a base vertex");
  const double cubic = (v + u) * s * s * s + 3.0 * (u * v - 1.0) * s * s * c -
                       3.0 * (u + v) * s * c * c - (u * v - 1.0) * c * c * c;
  const double lead = 64.0 * r2 * r * (u - v) * cubic /
                      (std::pow(q1 * q2 * q3, 1.5) *
                       std::sqrt((u * u + 1.0) * (v * v + 1.0)));
  Eigen::Vector3d n;
  n.x() = lead * c * c * c / std::sqrt(q1);
  n.y() = lead * c * c * (s + u * c) * (v - u) /
          (std::sqrt(q2) * std::sqrt(u * u + 1.0));
  n.z() = lead * c * c * (s + v * c) * (u - v) /
          (std::sqrt(q3) * std::sqrt(v * v + 1.0));
  return n;
}

NonSmoothAngles nonsmooth_angles(const CanonicalFrame& frame) {
  const double u = frame.u_cot(), v = frame.v_cot();
  const double su = u + v;
  const double q = u * v - 1.0;
  std::array<double, 3> ts{};
  bool infinite_root = false;

  if (std::abs(su) <= 1e-12 * (std::abs(u) + std::abs(v) + 1.0)) {
    // Leading coefficient gone: quadratic roots plus the chart seam.
    ts[0] = -1.0 / std::sqrt(3.0);
    ts[1] = 1.0 / std::sqrt(3.0);
    infinite_root = true;
  } else {
    // Monic cubic t^3 + p t^2 - 3 t + w with three real roots; solve by the
    // cosine substitution on the depressed form.
    const double p = 3.0 * q / su;
    const double qq = -3.0;
    const double w = -q / su;
    const double sh = p / 3.0;
    const double dp = qq - p * p / 3.0;
    const double dq = w - p * qq / 3.0 + 2.0 * p * p * p / 27.0;
    const double m = 2.0 * std::sqrt(std::max(0.0, -dp / 3.0));
    const double arg =
        std::clamp(3.0 * dq / (dp * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      double t = m * std::cos(theta - 2.0 * kPi * k / 3.0) - sh;
      // Newton polish on the original cubic.
      for (int it = 0; it < 8; ++it) {
        const double f =
            su * t * t * t + 3.0 * q * t * t - 3.0 * su * t - q;
        const double fp = 3.0 * su * t * t + 6.0 * q * t - 3.0 * su;
        if (fp == 0.0) break;
        const double step = f / fp;
        t -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) break;
      }
      ts[k] = t;
    }
  }

  NonSmoothAngles out;
  int n = 0;
  if (infinite_root) out.phis[n++] = kPi;
  for (int k = 0; k + n < 3; ++k)
    out.phis[n + k] = wrap_two_pi(2.0 * std::atan(ts[k]));
  std::sort(out.phis.begin(), out.phis.end());
  return out;
}

double gaussian_curvature_fc(const CanonicalFrame& frame,
                             const CylinderPoint& cp) {
  if (!(cp.r > 0.0))
    throw HeightNonPositive("curvature needs a point above the base plane");
  const double tb = frame.theta_b(), tc = frame.theta_c();
  // The tan(phi/2) chart closes up at phi = pi, so evaluate in whichever
  // relabeled frame puts its seam farthest away. Permuting the vertices only
  // permutes image coordinates, which leaves the curvature alone.
  struct Chart {
    double shift, theta_b, theta_c;
  };
  const Chart charts[3] = {
      {0.0, tb, tc},
      {tb, wrap_two_pi(-tb), wrap_two_pi(tc - tb)},
      {tc, wrap_two_pi(tb - tc), wrap_two_pi(-tc)}};
  int best = 0;
  double best_dist = -1.0;
  for (int k = 0; k < 3; ++k) {
    const double d = seam_distance(cp.phi - charts[k].shift);
    if (d > best_dist) {
      best_dist = d;
      best = k;
    }
  }
  const Chart& ch = charts[best];
  const double u = std::cos(0.5 * ch.theta_b) / std::sin(0.5 * ch.theta_b);
  const double v = std::cos(0.5 * ch.theta_c) / std::sin(0.5 * ch.theta_c);
  const double phi = wrap_two_pi(cp.phi - ch.shift);
  return curvature_uvtr(u, v, std::tan(0.5 * phi), cp.r);
}

Eigen::Vector3d degenerate_direction(const BaseTriangle& base,
                                     const ApexPoint& apex) {
  if (!on_cylinder(base, apex))
    throw NotOnCylinder("degenerate direction only exists on the cylinder");
  const CanonicalFrame frame = canonicalize(base);
  const ApexPoint ca = frame.apex_to_canonical(apex);
  const double phi = std::atan2(ca.q, ca.p);
  const double z = ca.r;
  const double al = frame.theta_b(), be = frame.theta_c();
  const double sa = std::sin(al), cA = std::cos(al);
  const double sb = std::sin(be), cb = std::cos(be);
  const double sp = std::sin(phi), cp = std::cos(phi);

  Eigen::Vector3d eta;
  eta.x() = ((sb - sa) * (1.0 + cp) + (cA - cb) * sp) * z * z -
            2.0 * ((sb - sa) * (cb - cp) + (cA - cb) * (sb - sp)) * sp * sp;
  eta.y() = (cA - cb) * (cp * (2.0 * cp * cp + z * z - 2.0) + z * z) +
            sp * (sa - sb) * (2.0 * cp * cp + z * z) +
            std::sin(be - al) * std::sin(2.0 * phi);
  eta.z() = z * (sb - sa) * (2.0 - cp - 3.0 * cp * cp) -
            z * (cA - cb) * sp * (3.0 * cp + 1.0) +
            z * std::sin(be - al) * (1.0 + cp);

  const Eigen::Vector3d mapped = frame.direction_from_canonical(eta);
  const double norm = mapped.norm();
  if (!(norm > 1e-12))
    throw NonSmoothPoint("degenerate direction vanishes at this point");
  return mapped / norm;
}

FcDerivs fc_derivatives(const CanonicalFrame& frame, double t, double r) {
  return fc_derivs_uvtr(frame.u_cot(), frame.v_cot(), t, r);
}

}  // namespace tetra
