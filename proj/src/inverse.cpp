#include "tetra/inverse.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "tetra/angle_map.hpp"
#include "tetra/pillow.hpp"
#include "tetra/rng.hpp"

namespace tetra {

namespace {

// Relative width of the warning band around the degeneracy cylinder.
constexpr double kCylinderBand = 1e-4;

using Complex = std::complex<double>;

// Ascending-coefficient polynomial evaluation with derivative.
void poly_eval(const std::vector<double>& c, const Complex& z, Complex& f,
               Complex& fp) {
  f = Complex(0.0, 0.0);
  fp = Complex(0.0, 0.0);
  for (std::size_t i = c.size(); i-- > 0;) {
    fp = fp * z + f;
    f = f * z + c[i];
  }
}

Complex newton_polish(const std::vector<double>& c, Complex z) {
  for (int it = 0; it < 40; ++it) {
    Complex f, fp;
    poly_eval(c, z, f, fp);
    if (std::abs(fp) == 0.0) break;
    const Complex step = f / fp;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// Real roots of an ascending-coefficient polynomial via the companion
// matrix, with a Newton pass so genuinely real roots shed the eigensolver's
// imaginary noise before the acceptance filter runs. Double real roots stall
// at an imaginary part near the square root of the evaluation noise, so
// pairs that stay mildly complex land in `speculative` for the caller to
// test without trusting them.
std::vector<double> real_roots(std::vector<double> coeffs, double tol_root,
                               std::vector<double>& speculative) {
  double maxc = 0.0;
  for (double v : coeffs) maxc = std::max(maxc, std::abs(v));
  if (maxc == 0.0) return {};
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-13 * maxc)
    coeffs.pop_back();
  const int degree = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> out;
  if (degree < 1) return out;
  if (degree == 1) {
    out.push_back(-coeffs[0] / coeffs[1]);
    return out;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

  for (int i = 0; i < degree; ++i) {
    const Complex raw(solver.eigenvalues()[i].real(),
                      solver.eigenvalues()[i].imag());
    const Complex z = newton_polish(coeffs, raw);
    if (std::abs(z.imag()) <= tol_root * (1.0 + std::abs(z))) {
      out.push_back(z.real());
      continue;
    }
    // Newton can wander near a double root whose derivative vanishes, so
    // judge the raw eigenvalue too before discarding the pair as complex.
    const Complex& best = std::abs(z.imag()) <= std::abs(raw.imag()) ? z : raw;
    if (std::abs(best.imag()) <= 1e-4 * (1.0 + std::abs(best)))
      speculative.push_back(best.real());
  }
  return out;
}

struct DistTriple {
  double x, y, z;
};

// Newton iteration on the three law-of-cosines residuals in distance space.
// Returns false when the iteration leaves the positive octant or stalls far
// from a solution.
bool polish_distances(DistTriple& d, const AngleCosTriple& tgt,
                      const SideLengths& sides) {
  const double ab2 = sides.ab * sides.ab;
  const double ac2 = sides.ac * sides.ac;
  const double bc2 = sides.bc * sides.bc;
  const double scale =
      std::max({sides.ab, sides.ac, sides.bc, d.x, d.y, d.z});
  const double scale2 = scale * scale;
  double best = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 60; ++it) {
    const double x = d.x, y = d.y, z = d.z;
    const Eigen::Vector3d e(
        x * x + y * y - 2.0 * x * y * tgt.c_alpha - bc2,
        x * x + z * z - 2.0 * x * z * tgt.c_beta - ac2,
        y * y + z * z - 2.0 * y * z * tgt.c_gamma - ab2);
    const double err = e.cwiseAbs().maxCoeff();
    best = std::min(best, err);
    if (err <= 1e-13 * scale2) return true;
    Eigen::Matrix3d j;
    j << 2.0 * x - 2.0 * y * tgt.c_alpha, 2.0 * y - 2.0 * x * tgt.c_alpha, 0.0,
        2.0 * x - 2.0 * z * tgt.c_beta, 0.0, 2.0 * z - 2.0 * x * tgt.c_beta,
        0.0, 2.0 * y - 2.0 * z * tgt.c_gamma, 2.0 * z - 2.0 * y * tgt.c_gamma;
    const Eigen::Vector3d step = j.partialPivLu().solve(e);
    if (!step.allFinite()) break;
    d.x -= step.x();
    d.y -= step.y();
    d.z -= step.z();
    if (!(d.x > 0.0) || !(d.y > 0.0) || !(d.z > 0.0)) return false;
    if (step.cwiseAbs().maxCoeff() <= 1e-16 * scale) break;
  }
  return best <= 1e-8 * scale2;
}

}  // namespace

P3PSolution preimages(const BaseTriangle& base, const AngleCosTriple& target) {
  P3PSolution out;
  const ToleranceConfig& tol = base.tol();
  const SideLengths& sides = base.sides();
  const Circumcircle& cc = base.circle();

  double comps[3] = {target.c_alpha, target.c_beta, target.c_gamma};
  for (double& c : comps) {
    if (std::abs(c) > 1.0 + tol.tol_predicate) {
      out.note = "target leaves the unit cube";
      return out;
    }
    c = std::clamp(c, -1.0, 1.0);
  }
  const AngleCosTriple tgt{comps[0], comps[1], comps[2]};

  if (1.0 - std::min({comps[0], comps[1], comps[2]}) <= tol.tol_predicate) {
    out.note = "limit point: approached only as the apex height grows";
    return out;
  }
  if (!angle_inequalities(tgt, tol.tol_predicate)) {
    out.note = "solid angle inequalities reject the target";
    return out;
  }

  // Distances x = |DC|, y = |DB|, z = |DA| with y = s x, z = t x turn the
  // three law-of-cosines constraints into two quadratics in s whose
  // resultant is a quartic in t.
  const double c1 = tgt.c_alpha, c2 = tgt.c_beta, c3 = tgt.c_gamma;
  const double xb2 = sides.ab * sides.ab;
  const double yb2 = sides.ac * sides.ac;
  const double zb2 = sides.bc * sides.bc;

  const double a2 = yb2;
  const double a1 = -2.0 * c1 * yb2;
  // a0, b1, b0 by ascending power of t.
  const double a0c[3] = {yb2 - zb2, 2.0 * zb2 * c2, -zb2};
  const double b2 = xb2 - zb2;
  const double b1c[2] = {-2.0 * c1 * xb2, 2.0 * zb2 * c3};
  const double b0c[3] = {xb2, 0.0, -zb2};

  // t1 = a2 b0 - a0 b2 (deg 2), t2 = a2 b1 - a1 b2 (deg 1),
  // t3 = a1 b0 - a0 b1 (deg 3), quartic = t1^2 - t2 t3.
  const double t1c[3] = {a2 * b0c[0] - a0c[0] * b2, -a0c[1] * b2,
                         a2 * b0c[2] - a0c[2] * b2};
  const double t2c[2] = {a2 * b1c[0] - a1 * b2, a2 * b1c[1]};
  const double t3c[4] = {
      a1 * b0c[0] - a0c[0] * b1c[0],
      -(a0c[0] * b1c[1] + a0c[1] * b1c[0]),
      a1 * b0c[2] - (a0c[1] * b1c[1] + a0c[2] * b1c[0]),
      -a0c[2] * b1c[1]};
  std::vector<double> quartic(5, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) quartic[i + j] += t1c[i] * t1c[j];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) quartic[i + j] -= t2c[i] * t3c[j];

  std::vector<P3PCandidate> found;

  // Seeds the distance polish from a ratio pair y = s x, z = t x and keeps
  // the apex it converges to. Speculative seeds from the collapsed-resultant
  // scan pass strict = false so their routine failures stay uncounted.
  auto attempt = [&](double s, double t, bool strict) {
    if (!(s > 1e-12) || !(t > 1e-12)) return;
    const double dsq = 1.0 + s * s - 2.0 * s * c1;
    if (!(dsq > 0.0)) return;
    DistTriple dist;
    dist.x = sides.bc / std::sqrt(dsq);
    dist.y = s * dist.x;
    dist.z = t * dist.x;
    if (!polish_distances(dist, tgt, sides)) {
      if (strict) ++out.polish_failures;
      return;
    }

    // Trilateration back to an apex with non-negative height.
    const Eigen::Vector2d a = base.a(), b = base.b(), c = base.c();
    Eigen::Matrix2d m;
    m.row(0) = 2.0 * (b - a).transpose();
    m.row(1) = 2.0 * (c - a).transpose();
    Eigen::Vector2d rhs(dist.z * dist.z - dist.y * dist.y + b.squaredNorm() -
                            a.squaredNorm(),
                        dist.z * dist.z - dist.x * dist.x + c.squaredNorm() -
                            a.squaredNorm());
    const Eigen::Vector2d foot = m.partialPivLu().solve(rhs);
    const double planar_sq = (foot - a).squaredNorm();
    const double r_sq = dist.z * dist.z - planar_sq;
    const double r_scale = cc.radius * cc.radius + planar_sq + dist.z * dist.z;
    if (r_sq < -1e-9 * r_scale) return;  // distances close up below plane

    P3PCandidate cand;
    cand.apex = {foot.x(), foot.y(), std::sqrt(std::max(0.0, r_sq))};
    // The polish stops at a squared-length residual near 1e-13, so heights
    // under roughly its square root are indistinguishable from zero.
    const double planar_band = 3e-6 * std::sqrt(r_scale);
    if (cand.apex.r < std::max(planar_band, tol.tol_dedup * cc.radius)) {
      cand.apex.r = 0.0;
      cand.planar = true;
    }
    const double ring = std::abs((foot - cc.center).norm() - cc.radius);
    cand.near_cylinder = ring <= kCylinderBand * cc.radius;
    try {
      const AngleCosTriple back = face_cosines(base, cand.apex);
      cand.residual = (back.vec() - tgt.vec()).cwiseAbs().maxCoeff();
    } catch (const GeometryError&) {
      if (strict) ++out.polish_failures;
      return;
    }
    found.push_back(cand);
  };

  const double quartic_scale =
      (xb2 + yb2 + zb2) * (xb2 + yb2 + zb2) * (xb2 + yb2 + zb2) *
      (xb2 + yb2 + zb2);
  double quartic_max = 0.0;
  for (double v : quartic) quartic_max = std::max(quartic_max, std::abs(v));
  const bool collapsed = quartic_max <= 1e-12 * quartic_scale;

  if (collapsed) {
    // The resultant vanishes identically: the two quadratics share a root
    // for every t, either a mirror-image branch with s < 0 or a genuine
    // curve of solutions. Walk the t half-line and let the polish decide.
    constexpr int kScanSteps = 720;
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    for (int k = 0; k < kScanSteps; ++k) {
      const double t = std::tan((k + 0.5) * kHalfPi / kScanSteps);
      const double a0v = a0c[0] + a0c[1] * t + a0c[2] * t * t;
      const double b1v = b1c[0] + b1c[1] * t;
      const double b0v = b0c[0] + b0c[2] * t * t;

      const double disc_p = a1 * a1 - 4.0 * a2 * a0v;
      if (disc_p >= 0.0) {
        for (double sg : {1.0, -1.0})
          attempt((-a1 + sg * std::sqrt(disc_p)) / (2.0 * a2), t, false);
      }
      if (std::abs(b2) > 1e-14 * (xb2 + yb2 + zb2)) {
        const double disc_q = b1v * b1v - 4.0 * b2 * b0v;
        if (disc_q >= 0.0) {
          for (double sg : {1.0, -1.0})
            attempt((-b1v + sg * std::sqrt(disc_q)) / (2.0 * b2), t, false);
        }
      } else if (std::abs(b1v) > 1e-14 * (xb2 + yb2 + zb2)) {
        attempt(-b0v / b1v, t, false);
      }
    }
  } else {
    const auto process_root = [&](double t, bool strict) {
      if (!(t > 1e-12)) return;
      const double a0v = a0c[0] + a0c[1] * t + a0c[2] * t * t;
      const double b1v = b1c[0] + b1c[1] * t;
      const double b0v = b0c[0] + b0c[2] * t * t;
      const double num = a2 * b0v - a0v * b2;
      const double den = a1 * b2 - a2 * b1v;
      const double coeff_scale = std::abs(a2) + std::abs(a1) + std::abs(a0v) +
                                 std::abs(b2) + std::abs(b1v) + std::abs(b0v);

      if (strict && std::abs(den) > 1e-5 * coeff_scale) {
        attempt(num / den, t, strict);
        return;
      }
      // Either the linear eliminant is drowned by the root's own
      // uncertainty (near a double root den scales with the root error),
      // or the root itself is speculative and any drift in t sends the
      // eliminant onto the mirror branch. The roots of the first quadratic
      // stay well conditioned, so try those instead; for trusted roots the
      // second quadratic filters the branch, for speculative ones the
      // distance polish arbitrates.
      double disc = a1 * a1 - 4.0 * a2 * a0v;
      if (disc < 0.0 && disc >= -1e-6 * (a1 * a1 + std::abs(4.0 * a2 * a0v)))
        disc = 0.0;
      if (disc >= 0.0) {
        for (double sg : {1.0, -1.0}) {
          const double s = (-a1 + sg * std::sqrt(disc)) / (2.0 * a2);
          if (!strict || std::abs(b2 * s * s + b1v * s + b0v) <=
                             1e-6 * coeff_scale * (1.0 + s * s))
            attempt(s, t, strict);
        }
      }
    };

    std::vector<double> speculative;
    for (double t : real_roots(quartic, tol.tol_root, speculative))
      process_root(t, true);
    // Near-double roots stall against the polynomial's evaluation noise and
    // keep a stray imaginary part; their real parts still seed the distance
    // polish, which either converges to a genuine solution or is discarded
    // without counting as a solver failure.
    for (double t : speculative) process_root(t, false);
  }

  // Merge duplicates (double roots and fallback overlaps), keep the better
  // residual, then order by height and footprint.
  const double merge = tol.tol_dedup * cc.radius;
  std::vector<P3PCandidate> merged;
  for (const P3PCandidate& cand : found) {
    bool absorbed = false;
    for (P3PCandidate& kept : merged) {
      if ((kept.apex.vec() - cand.apex.vec()).norm() <= merge) {
        if (cand.residual < kept.residual) kept = cand;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(cand);
  }
  std::sort(merged.begin(), merged.end(),
            [](const P3PCandidate& l, const P3PCandidate& r) {
              if (l.apex.r != r.apex.r) return l.apex.r < r.apex.r;
              if (l.apex.p != r.apex.p) return l.apex.p < r.apex.p;
              return l.apex.q < r.apex.q;
            });
  if (collapsed && merged.size() >= 8) {
    out.note = "degenerate fiber: a whole curve of planar apexes maps here";
    if (merged.size() > 16) merged.resize(16);
  }
  out.solutions = std::move(merged);
  return out;
}

CountProfile preimage_count_profile(const BaseTriangle& base, int samples,
                                    std::uint64_t seed) {
  CountProfile profile;
  Rng rng(seed);
  int accepted = 0;
  while (accepted < samples) {
    AngleCosTriple t{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                     rng.uniform(-1.0, 1.0)};
    if (pillow_value(t) < 0.0) continue;
    ++accepted;
    const P3PSolution sol = preimages(base, t);
    const std::size_t n = sol.solutions.size();
    if (n <= 4)
      ++profile.counts[n];
    else
      ++profile.overflow;
    if (sol.polish_failures > 0) ++profile.nonconverged;
  }
  return profile;
}

RoundtripReport roundtrip_check(const BaseTriangle& base,
                                const ApexPoint& apex) {
  RoundtripReport report;
  const Circumcircle& cc = base.circle();
  const Eigen::Vector3d given(apex.p, apex.q, std::abs(apex.r));
  const double ring =
      std::abs((Eigen::Vector2d(apex.p, apex.q) - cc.center).norm() -
               cc.radius);
  report.near_cylinder = ring <= kCylinderBand * cc.radius;

  const P3PSolution sol = preimages(base, face_cosines(base, apex));
  report.count = static_cast<int>(sol.solutions.size());
  report.best_distance = std::numeric_limits<double>::infinity();
  for (const P3PCandidate& cand : sol.solutions)
    report.best_distance =
        std::min(report.best_distance, (cand.apex.vec() - given).norm());
  // The fiber collapses quadratically onto the cylinder, so the acceptance
  // radius is relaxed inside the warning band.
  const double radius =
      (report.near_cylinder ? 1e-3 : 1e-7) * cc.radius;
  report.recovered = report.best_distance <= radius;
  return report;
}

}  // namespace tetra
