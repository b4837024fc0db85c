#include "tetra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tetra/angle_map.hpp"
#include "tetra/boundary.hpp"
#include "tetra/degeneracy.hpp"
#include "tetra/inverse.hpp"
#include "tetra/limits.hpp"
#include "tetra/parallel.hpp"
#include "tetra/pillow.hpp"
#include "tetra/rng.hpp"
#include "tetra/toroids.hpp"

namespace tetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double wrap_2pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

double ang_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

void push(SuiteResult& s, const std::string& label, bool pass,
          const std::string& detail) {
  s.checks.push_back({label, pass, detail});
}

ApexPoint spatial_apex(Rng& rng, const Circumcircle& cc, double rho_max,
                       double r_lo, double r_hi) {
  const double rho = cc.radius * rho_max * std::sqrt(rng.unit());
  const double th = rng.uniform(0.0, kTwoPi);
  const double r = cc.radius * rng.uniform(r_lo, r_hi);
  return {cc.center.x() + rho * std::cos(th),
          cc.center.y() + rho * std::sin(th), r};
}

ApexPoint planar_apex(Rng& rng, const BaseTriangle& base, double rho_max) {
  const Circumcircle& cc = base.circle();
  for (;;) {
    const double rho = cc.radius * rho_max * std::sqrt(rng.unit());
    const double th = rng.uniform(0.0, kTwoPi);
    const Eigen::Vector2d p(cc.center.x() + rho * std::cos(th),
                            cc.center.y() + rho * std::sin(th));
    const double clearance = 1e-6 * cc.radius;
    if ((p - base.a()).norm() <= clearance) continue;
    if ((p - base.b()).norm() <= clearance) continue;
    if ((p - base.c()).norm() <= clearance) continue;
    return {p.x(), p.y(), 0.0};
  }
}

}  // namespace

BaseTriangle fixture_equilateral() {
  const double h = std::sqrt(3.0) / 2.0;
  return BaseTriangle({1.0, 0.0}, {-0.5, h}, {-0.5, -h});
}

BaseTriangle fixture_right345() {
  return BaseTriangle({0.0, 0.0}, {3.0, 0.0}, {0.0, 4.0});
}

BaseTriangle fixture_obtuse() {
  return base_from_angles(kPi / 6.0, kPi / 4.0, 7.0 * kPi / 12.0, 1.0);
}

SuiteResult verify_pillow(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"pillow", {}};
  Rng rng(opt.seed, 11);
  const Circumcircle& cc = base.circle();

  double worst_deficit = 0.0;
  for (int i = 0; i < opt.samples; ++i) {
    const ApexPoint d = spatial_apex(rng, cc, 3.0, 1e-4, 3.0);
    const double v = pillow_value(face_cosines(base, d));
    worst_deficit = std::min(worst_deficit, v);
  }
  push(s, "interior_nonnegative", worst_deficit >= -1e-9,
       "min pillow value " + num(worst_deficit) + " over " +
           std::to_string(opt.samples) + " apexes");

  double worst_planar = 0.0;
  for (int i = 0; i < opt.samples; ++i) {
    const ApexPoint d = planar_apex(rng, base, 3.0);
    const double v = std::abs(pillow_value(face_cosines(base, d)));
    worst_planar = std::max(worst_planar, v);
  }
  push(s, "planar_on_pillowcase", worst_planar <= 1e-9,
       "max |pillow value| " + num(worst_planar) + " over " +
           std::to_string(opt.samples) + " planar apexes");
  return s;
}

SuiteResult verify_volume(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"volume", {}};
  Rng rng(opt.seed, 12);
  const Circumcircle& cc = base.circle();

  double worst_gram = 0.0, worst_sine = 0.0;
  for (int i = 0; i < opt.samples; ++i) {
    const ApexPoint apex = spatial_apex(rng, cc, 2.0, 0.05, 3.0);
    const DistanceTriple d = distances(base, apex);
    const AngleCosTriple t = face_cosines_dist(d, base);
    const double ref = cayley_menger(d, base) / 288.0;
    const double gram = volume_squared_cosines(d.x, d.y, d.z, t);
    const double sine = volume_squared_sines(
        d.x, d.y, d.z, std::acos(std::clamp(t.c_alpha, -1.0, 1.0)),
        std::acos(std::clamp(t.c_beta, -1.0, 1.0)),
        std::acos(std::clamp(t.c_gamma, -1.0, 1.0)));
    worst_gram = std::max(worst_gram, std::abs(gram - ref) / ref);
    worst_sine = std::max(worst_sine, std::abs(sine - ref) / ref);
  }
  push(s, "gram_matches_cm288", worst_gram <= 1e-10,
       "max rel err " + num(worst_gram));
  push(s, "four_sine_matches_cm288", worst_sine <= 1e-10,
       "max rel err " + num(worst_sine));
  return s;
}

SuiteResult verify_jacobian(const BaseTriangle& base,
                            const VerifyOptions& opt) {
  SuiteResult s{"jacobian", {}};
  Rng rng(opt.seed, 13);
  const Circumcircle& cc = base.circle();
  const double band = 1e-6 * cc.radius;

  int misclassified = 0, used = 0;
  for (int i = 0; i < (opt.samples * 3) / 4; ++i) {
    ApexPoint apex;
    switch (i % 3) {
      case 0: apex = spatial_apex(rng, cc, 0.9, 0.01, 3.0); break;
      case 1: {
        const double rho = cc.radius * rng.uniform(0.9, 1.1);
        const double th = rng.uniform(0.0, kTwoPi);
        apex = {cc.center.x() + rho * std::cos(th),
                cc.center.y() + rho * std::sin(th),
                cc.radius * rng.uniform(0.01, 3.0)};
        break;
      }
      default: {
        const double rho = cc.radius * rng.uniform(1.1, 3.0);
        const double th = rng.uniform(0.0, kTwoPi);
        apex = {cc.center.x() + rho * std::cos(th),
                cc.center.y() + rho * std::sin(th),
                cc.radius * rng.uniform(0.01, 3.0)};
        break;
      }
    }
    const double rho =
        (Eigen::Vector2d(apex.p, apex.q) - cc.center).norm();
    if (std::abs(rho - cc.radius) <= band) continue;
    ++used;
    const double j = jacobian_det(base, apex);
    const bool inside = rho < cc.radius;
    if ((inside && j >= 0.0) || (!inside && j <= 0.0)) ++misclassified;
  }
  push(s, "sign_tracks_cylinder", misclassified == 0,
       std::to_string(misclassified) + " misclassified of " +
           std::to_string(used) + " off-band apexes");

  int disagreements = 0, planar_used = 0;
  for (int i = 0; i < opt.samples / 4; ++i) {
    const ApexPoint apex = planar_apex(rng, base, 3.0);
    const double rho =
        (Eigen::Vector2d(apex.p, apex.q) - cc.center).norm();
    if (std::abs(rho - cc.radius) <= 1e-9 * cc.radius) continue;
    ++planar_used;
    const DistanceTriple d = distances(base, apex);
    const double lobe = degeneracy_residual(d, base.sides());
    const double cyc = cyclic_criterion(base, {apex.p, apex.q});
    if ((-lobe > 0.0) != (cyc > 0.0)) ++disagreements;
  }
  push(s, "planar_residual_signs_agree", disagreements == 0,
       std::to_string(disagreements) + " sign disagreements of " +
           std::to_string(planar_used) + " planar apexes");
  return s;
}

SuiteResult verify_gradients(const BaseTriangle& base,
                             const VerifyOptions& opt) {
  SuiteResult s{"gradients", {}};
  Rng rng(opt.seed, 14);
  const Circumcircle& cc = base.circle();
  const double h = 1e-5;

  // Third derivatives of the face cosines grow like the inverse cube of the
  // distance to the nearest base vertex, so the central difference is only
  // trustworthy when the apex keeps a healthy three-dimensional clearance.
  const double clearance = 0.15 * cc.radius;
  double worst = 0.0;
  int accepted = 0;
  for (int i = 0; accepted < opt.samples && i < 20 * opt.samples; ++i) {
    ApexPoint apex = i % 4 == 3 ? planar_apex(rng, base, 2.5)
                                : spatial_apex(rng, cc, 2.5, 0.01, 3.0);
    const Eigen::Vector2d proj(apex.p, apex.q);
    const double rr = apex.r * apex.r;
    if (std::sqrt((proj - base.a()).squaredNorm() + rr) <= clearance ||
        std::sqrt((proj - base.b()).squaredNorm() + rr) <= clearance ||
        std::sqrt((proj - base.c()).squaredNorm() + rr) <= clearance)
      continue;
    ++accepted;
    const Gradients g = gradients(base, apex);
    const Eigen::Vector3d rows[3] = {g.g1, g.g2, g.g3};
    for (int k = 0; k < 3; ++k) {
      ApexPoint hi = apex, lo = apex;
      (k == 0 ? hi.p : k == 1 ? hi.q : hi.r) += h;
      (k == 0 ? lo.p : k == 1 ? lo.q : lo.r) -= h;
      const Eigen::Vector3d fd =
          (face_cosines(base, hi).vec() - face_cosines(base, lo).vec()) /
          (2.0 * h);
      for (int c = 0; c < 3; ++c)
        worst = std::max(worst, std::abs(fd[c] - rows[c][k]));
    }
  }
  push(s, "matches_central_difference", worst <= 1e-7,
       "max abs deviation " + num(worst));
  return s;
}

SuiteResult verify_nonsmooth(const BaseTriangle& base,
                             const VerifyOptions& opt) {
  (void)opt;
  SuiteResult s{"nonsmooth", {}};
  const CanonicalFrame frame = canonicalize(base);
  const NonSmoothAngles roots = nonsmooth_angles(frame);

  bool ordered = true;
  for (int k = 0; k < 3; ++k) {
    if (roots.phis[k] < 0.0 || roots.phis[k] >= kTwoPi) ordered = false;
    if (k > 0 && roots.phis[k] <= roots.phis[k - 1]) ordered = false;
  }
  push(s, "roots_in_range_sorted", ordered,
       "phis " + num(roots.phis[0]) + ", " + num(roots.phis[1]) + ", " +
           num(roots.phis[2]));

  double worst = 0.0;
  for (double phi : roots.phis)
    for (double r : {0.7, 2.0})
      worst = std::max(
          worst, fc_normal(frame, {phi, r}).cwiseAbs().maxCoeff());
  push(s, "normal_vanishes_at_roots", worst <= 1e-9,
       "max |normal component| " + num(worst));

  if (std::abs(frame.u_cot() + frame.v_cot()) <= 1e-9) {
    const double expected[3] = {kPi / 3.0, kPi, 5.0 * kPi / 3.0};
    double dev = 0.0;
    for (int k = 0; k < 3; ++k)
      dev = std::max(dev, std::abs(roots.phis[k] - expected[k]));
    push(s, "regular_base_closed_form", dev <= 1e-12,
         "max deviation from {pi/3, pi, 5pi/3} is " + num(dev));
  } else {
    push(s, "regular_base_closed_form", true, "not a regular base; skipped");
  }
  return s;
}

namespace {

// Curvature of the cylinder image over the regular base, as a function of
// t = tan(phi/2) and the height r.
double regular_base_curvature(double t, double r) {
  const double t2 = t * t, r2 = r * r;
  const double a = (r2 + 4.0) * std::pow(r2 * t2 + r2 + 4.0 * t2, 2);
  const double core = r2 * t2 + r2 + t2 + 3.0;
  const double b = std::pow(core * core - 12.0 * t2, 2);
  const double den =
      (r2 * r2 + 5.0 * r2) * std::pow(t2 + 1.0, 3) + 4.0 * std::pow(t2, 3) +
      30.0 * t2 * t2 + 6.0;
  return a * b / (27.0 * r2 * den * den);
}

}  // namespace

SuiteResult verify_curvature(const BaseTriangle& base,
                             const VerifyOptions& opt) {
  (void)opt;
  SuiteResult s{"curvature", {}};
  const CanonicalFrame frame = canonicalize(base);

  if (std::abs(frame.u_cot() + frame.v_cot()) <= 1e-9) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double t = -2.5 + 5.0 * (i + 0.5) / 50.0;
      for (int j = 0; j < 50; ++j) {
        const double r = 0.15 + (4.0 - 0.15) * (j + 0.5) / 50.0;
        const double expected = regular_base_curvature(t, r);
        const double got =
            gaussian_curvature_fc(frame, {2.0 * std::atan(t), r});
        worst = std::max(worst, std::abs(got - expected) / expected);
      }
    }
    push(s, "closed_form_regular_base", worst <= 1e-8,
         "max rel err " + num(worst) + " on a 50x50 grid");
  } else {
    push(s, "closed_form_regular_base", true, "not a regular base; skipped");
  }

  const NonSmoothAngles roots = nonsmooth_angles(frame);
  double min_k = std::numeric_limits<double>::infinity();
  int evaluated = 0;
  for (int i = 0; i < 60; ++i) {
    const double phi = kTwoPi * (i + 0.5) / 60.0;
    bool near_ray = false;
    for (double root : roots.phis)
      if (ang_dist(phi, root) < 0.02) near_ray = true;
    if (near_ray) continue;
    for (int j = 0; j < 40; ++j) {
      const double r = 0.05 + (5.0 - 0.05) * (j + 0.5) / 40.0;
      min_k = std::min(min_k, gaussian_curvature_fc(frame, {phi, r}));
      ++evaluated;
    }
  }
  push(s, "positive_on_grid", min_k > 0.0,
       "min curvature " + num(min_k) + " over " + std::to_string(evaluated) +
           " grid points");
  return s;
}

SuiteResult verify_eta(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"eta", {}};
  Rng rng(opt.seed, 17);
  const CanonicalFrame frame = canonicalize(base);
  const BaseTriangle& canon = frame.canonical_base();
  const NonSmoothAngles roots = nonsmooth_angles(frame);

  double worst_ortho = 0.0, worst_lin = 0.0;
  double min_quad = std::numeric_limits<double>::infinity();
  int used = 0;
  while (used < opt.samples) {
    const double phi = rng.uniform(0.0, kTwoPi);
    bool near_ray = false;
    for (double root : roots.phis)
      if (ang_dist(phi, root) < 0.05) near_ray = true;
    if (near_ray) continue;
    ++used;
    const double r = rng.uniform(0.1, 2.5);
    const ApexPoint apex{std::cos(phi), std::sin(phi), r};

    const Eigen::Vector3d eta = degenerate_direction(canon, apex);
    const Gradients g = gradients(canon, apex);
    for (const Eigen::Vector3d& grad : {g.g1, g.g2, g.g3})
      worst_ortho =
          std::max(worst_ortho, std::abs(eta.dot(grad)) / grad.norm());

    auto f_along = [&](double step) {
      const ApexPoint d{apex.p + step * eta.x(), apex.q + step * eta.y(),
                        apex.r + step * eta.z()};
      return face_cosines(canon, d).vec();
    };
    const double h = 1e-5;
    const Eigen::Vector3d lin =
        (8.0 * (f_along(h) - f_along(-h)) - (f_along(2.0 * h) -
                                             f_along(-2.0 * h))) /
        (12.0 * h);
    worst_lin = std::max(worst_lin, lin.cwiseAbs().maxCoeff());
    const double h2 = 1e-3;
    const Eigen::Vector3d quad =
        (f_along(h2) + f_along(-h2) - 2.0 * f_along(0.0)) / (h2 * h2);
    min_quad = std::min(min_quad, quad.cwiseAbs().maxCoeff());
  }
  push(s, "orthogonal_to_gradients", worst_ortho <= 1e-9,
       "max |cos| against gradients " + num(worst_ortho));
  push(s, "linear_term_vanishes", worst_lin <= 1e-8,
       "max fitted linear coefficient " + num(worst_lin));
  push(s, "quadratic_term_present", min_quad > 1e-4,
       "min fitted quadratic coefficient " + num(min_quad));
  return s;
}

namespace {

struct ImageHash {
  // Buckets image points on a grid a few orders coarser than the collision
  // radius so near pairs always share or neighbor a cell.
  static constexpr double kCell = 1e-5;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  std::vector<Eigen::Vector3d> images;
  std::vector<Eigen::Vector2d> points;

  static std::uint64_t key(long ix, long iy, long iz) {
    std::uint64_t h = 1469598103934665603ULL;
    for (long v : {ix, iy, iz}) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return h;
  }

  void insert(const Eigen::Vector2d& p, const Eigen::Vector3d& img) {
    const int idx = static_cast<int>(images.size());
    images.push_back(img);
    points.push_back(p);
    buckets[key(std::lround(img.x() / kCell), std::lround(img.y() / kCell),
                std::lround(img.z() / kCell))]
        .push_back(idx);
  }

  template <typename Pred>
  bool probe(const Eigen::Vector3d& img, Pred&& collides) const {
    const long ix = std::lround(img.x() / kCell);
    const long iy = std::lround(img.y() / kCell);
    const long iz = std::lround(img.z() / kCell);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = buckets.find(key(ix + dx, iy + dy, iz + dz));
          if (it == buckets.end()) continue;
          for (int idx : it->second)
            if ((images[idx] - img).cwiseAbs().maxCoeff() <= 1e-10 &&
                collides(idx))
              return true;
        }
    return false;
  }
};

// Planar apex inside the circumcircle whose image collides with a planar
// apex outside it, built the way the non-injectivity proof does: both see
// one chord under the same angle from opposite arcs, and a bisection places
// the remaining angle.
struct OverlapPair {
  Eigen::Vector2d d_minus, d_plus;
  bool found = false;
};

OverlapPair overlap_recipe(const BaseTriangle& base) {
  OverlapPair out;
  const BaseAngles ang = base.angles();
  VertexId w = VertexId::A;
  if (ang.at_b > ang.at(w)) w = VertexId::B;
  if (ang.at_c > ang.at(w)) w = VertexId::C;
  const VertexId pv = w == VertexId::A
                          ? VertexId::B
                          : (w == VertexId::B ? VertexId::C : VertexId::A);
  const VertexId qv = w == VertexId::A
                          ? VertexId::C
                          : (w == VertexId::B ? VertexId::A : VertexId::B);
  const Eigen::Vector2d P = base.vertex(pv);
  const Eigen::Vector2d Q = base.vertex(qv);
  const Eigen::Vector2d W = base.vertex(w);
  const double aw = ang.at(w), ap = ang.at(pv), aq = ang.at(qv);
  if (aw <= kPi / 2.0) return out;

  const double gamma = 0.5 * ((kPi - aw) + aw);  // midpoint of the window
  const double alpha_lo = ap, alpha_hi = gamma - aq;
  if (alpha_hi <= alpha_lo) return out;
  const double beta = gamma - 0.5 * (alpha_lo + alpha_hi);

  const Eigen::Vector2d mid = 0.5 * (P + Q);
  Eigen::Vector2d n(-(Q - P).y(), (Q - P).x());
  n.normalize();
  if (n.dot(W - mid) < 0.0) n = -n;
  const double half_chord = 0.5 * (Q - P).norm();
  const double radius = half_chord / std::sin(gamma);

  auto seen_angle = [&](const Eigen::Vector2d& x) {
    const Eigen::Vector2d u = P - x, v = W - x;
    return std::acos(
        std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0));
  };
  auto in_wedge = [&](const Eigen::Vector2d& x) {
    Eigen::Matrix2d m;
    m.col(0) = W - P;
    m.col(1) = W - Q;
    const Eigen::Vector2d ab = m.partialPivLu().solve(x - W);
    return ab.x() > 0.0 && ab.y() > 0.0;
  };

  auto solve_on_arc = [&](double side, bool wedge,
                          Eigen::Vector2d& sol) -> bool {
    const Eigen::Vector2d center =
        mid + side * n * half_chord / std::tan(gamma);
    const double ang_p = std::atan2(P.y() - center.y(), P.x() - center.x());
    const double ang_q = std::atan2(Q.y() - center.y(), Q.x() - center.x());
    double sweep = wrap_2pi(ang_q - ang_p);
    auto at = [&](double lam) {
      const double tau = ang_p + lam * sweep;
      return Eigen::Vector2d(center.x() + radius * std::cos(tau),
                             center.y() + radius * std::sin(tau));
    };
    if ((at(0.5) - mid).dot(side * n) < 0.0) sweep -= kTwoPi;

    const int steps = 600;
    double prev_lam = -1.0, prev_g = 0.0;
    bool have_prev = false;
    for (int i = 1; i < steps; ++i) {
      const double lam = double(i) / steps;
      const Eigen::Vector2d x = at(lam);
      if (wedge && !in_wedge(x)) {
        have_prev = false;
        continue;
      }
      const double g = seen_angle(x) - beta;
      if (have_prev && prev_g * g <= 0.0) {
        double lo = prev_lam, hi = lam;
        for (int it = 0; it < 100; ++it) {
          const double mid_lam = 0.5 * (lo + hi);
          if ((seen_angle(at(mid_lam)) - beta) * prev_g <= 0.0)
            hi = mid_lam;
          else
            lo = mid_lam;
        }
        sol = at(0.5 * (lo + hi));
        return true;
      }
      prev_lam = lam;
      prev_g = g;
      have_prev = true;
    }
    return false;
  };

  Eigen::Vector2d d1, d2;
  if (!solve_on_arc(-1.0, false, d1)) return out;
  if (!solve_on_arc(+1.0, true, d2)) return out;
  out.d_minus = d1;
  out.d_plus = d2;
  out.found = true;
  return out;
}

}  // namespace

SuiteResult verify_overlap(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"overlap", {}};
  Rng rng(opt.seed, 18);
  const Circumcircle& cc = base.circle();
  const TriangleKind kind = classify(base);

  ImageHash inner;
  bool self_collision = false;
  double min_pre_dist = 1e-5 * cc.radius;
  for (int i = 0; i < opt.samples; ++i) {
    const double rho = cc.radius * (1.0 - 1e-3) * std::sqrt(rng.unit());
    const double th = rng.uniform(0.0, kTwoPi);
    const Eigen::Vector2d p(cc.center.x() + rho * std::cos(th),
                            cc.center.y() + rho * std::sin(th));
    const Eigen::Vector3d img =
        face_cosines(base, {p.x(), p.y(), 0.0}).vec();
    if (inner.probe(img, [&](int idx) {
          return (inner.points[idx] - p).norm() >= min_pre_dist;
        }))
      self_collision = true;
    inner.insert(p, img);
  }
  push(s, "bminus_self_injective", !self_collision,
       std::to_string(opt.samples) + " interior planar apexes hashed");

  if (kind == TriangleKind::Acute) {
    bool cross_collision = false;
    for (int i = 0; i < opt.samples; ++i) {
      double rho;
      if (i % 4 == 0)
        rho = cc.radius / std::max(0.05, rng.unit());
      else
        rho = cc.radius * (1.0 + 1e-3 + 3.0 * rng.unit());
      if (rho <= cc.radius * (1.0 + 1e-3)) continue;
      const double th = rng.uniform(0.0, kTwoPi);
      const Eigen::Vector2d p(cc.center.x() + rho * std::cos(th),
                              cc.center.y() + rho * std::sin(th));
      const Eigen::Vector3d img =
          face_cosines(base, {p.x(), p.y(), 0.0}).vec();
      if (inner.probe(img, [](int) { return true; })) cross_collision = true;
    }
    push(s, "cross_images_disjoint", !cross_collision,
         "no inner/outer image pair within 1e-10");
  } else if (kind == TriangleKind::Obtuse) {
    const OverlapPair pair = overlap_recipe(base);
    if (!pair.found) {
      push(s, "recipe_pair_collides", false, "construction failed");
      return s;
    }
    const Eigen::Vector3d f1 =
        face_cosines(base, {pair.d_minus.x(), pair.d_minus.y(), 0.0}).vec();
    const Eigen::Vector3d f2 =
        face_cosines(base, {pair.d_plus.x(), pair.d_plus.y(), 0.0}).vec();
    const double gap = (f1 - f2).cwiseAbs().maxCoeff();
    push(s, "recipe_pair_collides", gap <= 1e-10,
         "image gap " + num(gap));
    const double rho1 = (pair.d_minus - cc.center).norm();
    const double rho2 = (pair.d_plus - cc.center).norm();
    push(s, "recipe_pair_straddles_circle",
         rho1 < cc.radius && rho2 > cc.radius,
         "radii " + num(rho1 / cc.radius) + "R and " +
             num(rho2 / cc.radius) + "R");
  } else {
    push(s, "cross_images_disjoint", true,
         "right base sits on the dichotomy boundary; cross search skipped");
  }
  return s;
}

SuiteResult verify_p3p(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"p3p", {}};
  const CountProfile prof =
      preimage_count_profile(base, opt.samples, opt.seed);
  push(s, "count_at_most_four", prof.overflow == 0,
       "counts " + std::to_string(prof.counts[0]) + "/" +
           std::to_string(prof.counts[1]) + "/" +
           std::to_string(prof.counts[2]) + "/" +
           std::to_string(prof.counts[3]) + "/" +
           std::to_string(prof.counts[4]) + ", overflow " +
           std::to_string(prof.overflow));
  push(s, "nonconvergence_below_rate",
       prof.nonconverged * 1000 <= static_cast<std::uint64_t>(opt.samples),
       std::to_string(prof.nonconverged) + " nonconverged of " +
           std::to_string(opt.samples));

  Rng rng(opt.seed, 19);
  const Circumcircle& cc = base.circle();
  int misses = 0, used = 0;
  double worst = 0.0;
  while (used < opt.samples) {
    const ApexPoint apex = spatial_apex(rng, cc, 2.5, 0.05, 3.0);
    const double rho =
        (Eigen::Vector2d(apex.p, apex.q) - cc.center).norm();
    if (std::abs(rho - cc.radius) <= 1e-3 * cc.radius) continue;
    ++used;
    const RoundtripReport rt = roundtrip_check(base, apex);
    if (!rt.recovered) ++misses;
    worst = std::max(worst, rt.best_distance);
  }
  push(s, "roundtrip_recovers", misses == 0,
       std::to_string(misses) + " misses of " + std::to_string(used) +
           ", worst distance " + num(worst));
  return s;
}

SuiteResult verify_witness(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"witness", {}};
  Rng rng(opt.seed, 20);

  if (classify(base) == TriangleKind::Acute) {
    const ApexPoint w = interior_witness(base);
    const Eigen::Vector3d got = face_cosines(base, w).vec();
    const Eigen::Vector3d want = special_points(base).i_triangle.vec();
    const double dev = (got - want).cwiseAbs().maxCoeff();
    push(s, "fixture_witness_maps_to_cosines", dev <= 1e-12,
         "max deviation " + num(dev));
    const Circumcircle& cc = base.circle();
    const double rho = (Eigen::Vector2d(w.p, w.q) - cc.center).norm();
    push(s, "witness_inside_circle", rho < cc.radius && w.r > 0.0,
         "projected radius " + num(rho / cc.radius) + "R");
  } else {
    bool threw = false;
    try {
      interior_witness(base);
    } catch (const NotAcuteBase&) {
      threw = true;
    }
    push(s, "fixture_witness_maps_to_cosines", threw,
         "non-acute base correctly rejected");
  }

  double worst = 0.0;
  bool all_inside = true;
  for (int i = 0; i < 100; ++i) {
    const double a1 = kPi * rng.uniform(0.3, 0.45);
    const double a2 = kPi * rng.uniform(0.3, 0.45);
    const double a3 = kPi - a1 - a2;
    const double radius = rng.uniform(0.5, 3.0);
    const BaseTriangle canon = base_from_angles(a1, a2, a3, radius);
    const double rot = rng.uniform(0.0, kTwoPi);
    const Eigen::Rotation2D<double> rotate(rot);
    const Eigen::Vector2d shift(rng.uniform(-2.0, 2.0),
                                rng.uniform(-2.0, 2.0));
    const BaseTriangle moved(rotate * canon.a() + shift,
                             rotate * canon.b() + shift,
                             rotate * canon.c() + shift);
    const ApexPoint w = interior_witness(moved);
    const Eigen::Vector3d got = face_cosines(moved, w).vec();
    const Eigen::Vector3d want = special_points(moved).i_triangle.vec();
    worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
    const Circumcircle& cc = moved.circle();
    if ((Eigen::Vector2d(w.p, w.q) - cc.center).norm() >= cc.radius)
      all_inside = false;
  }
  push(s, "random_acute_bases", worst <= 1e-12 && all_inside,
       "max deviation " + num(worst) + " over 100 bases");
  return s;
}

SuiteResult verify_limits(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"limits", {}};
  Rng rng(opt.seed, 21);
  const double radius = base.circle().radius;
  const double eps = 1e-7 * radius;

  double worst_plane = 0.0, worst_form = 0.0;
  for (VertexId v : {VertexId::A, VertexId::B, VertexId::C}) {
    const LimitSolidEllipse lim = limit_solid_ellipse(base, v);
    const Eigen::Vector2d vert = base.vertex(v);
    for (int k = 0; k < 20; ++k) {
      Eigen::Vector3d dir;
      if (k < 16) {
        const double z = rng.uniform(0.05, 1.0);
        const double psi = rng.uniform(0.0, kTwoPi);
        const double rr = std::sqrt(1.0 - z * z);
        dir = {rr * std::cos(psi), rr * std::sin(psi), z};
      } else {
        const double psi = rng.uniform(0.0, kTwoPi);
        dir = {std::cos(psi), std::sin(psi), 0.0};
      }
      const ApexPoint apex{vert.x() + eps * dir.x(),
                           vert.y() + eps * dir.y(), eps * dir.z()};
      const AngleCosTriple t = face_cosines(base, apex);
      worst_plane = std::max(worst_plane, std::abs(lim.plane_residual(t)));
      worst_form =
          std::max(worst_form, lim.form_value(t) - lim.bound());
    }
  }
  push(s, "approach_accumulates_in_ellipse",
       worst_plane <= 1e-6 && worst_form <= 1e-6,
       "max plane residual " + num(worst_plane) + ", max form excess " +
           num(worst_form));

  double worst_pillow = 0.0, worst_slice = 0.0;
  for (VertexId v : {VertexId::A, VertexId::B, VertexId::C}) {
    const LimitSolidEllipse lim = limit_solid_ellipse(base, v);
    const PillowSlice slice = lim.boundary_slice();
    const double x0 = lim.fixed_value;
    const double major = std::sqrt(1.0 + x0), minor = std::sqrt(1.0 - x0);
    for (int j = 0; j < 64; ++j) {
      const double psi = kTwoPi * j / 64.0;
      const double a = major * std::cos(psi), b = minor * std::sin(psi);
      const double f = (a + b) / std::numbers::sqrt2;
      const double g = (a - b) / std::numbers::sqrt2;
      AngleCosTriple t;
      if (lim.axis == 0)
        t = {x0, f, g};
      else if (lim.axis == 1)
        t = {f, x0, g};
      else
        t = {f, g, x0};
      worst_pillow = std::max(worst_pillow, std::abs(pillow_value(t)));
      worst_slice = std::max(worst_slice, std::abs(slice.residual(f, g)));
    }
  }
  push(s, "ellipse_boundary_on_pillowcase",
       worst_pillow <= 1e-10 && worst_slice <= 1e-10,
       "max |pillow value| " + num(worst_pillow) + ", max slice residual " +
           num(worst_slice));
  return s;
}

SuiteResult verify_markers(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"markers", {}};
  const RegionMarkerTable table = omega_markers(base);

  std::vector<AngleCosTriple> probes;
  probes.reserve(opt.samples);
  {
    Rng rng(opt.seed, 22);
    while (static_cast<int>(probes.size()) < opt.samples) {
      const AngleCosTriple t{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                             rng.uniform(-1.0, 1.0)};
      if (pillow_value(t) < 1e-3) continue;
      if (std::abs(t.c_alpha - table.center.c_alpha) < 1e-3 ||
          std::abs(t.c_beta - table.center.c_beta) < 1e-3 ||
          std::abs(t.c_gamma - table.center.c_gamma) < 1e-3)
        continue;
      probes.push_back(t);
    }
  }
  std::vector<int> status(probes.size(), 0);  // 1 interior, 2 exterior
  parallel_for(probes.size(), [&](std::size_t i) {
    const P3PSolution sol = preimages(base, probes[i]);
    if (sol.solutions.empty()) {
      status[i] = 2;
      return;
    }
    for (const P3PCandidate& cand : sol.solutions)
      if (!cand.planar && !cand.near_cylinder) {
        status[i] = 1;
        return;
      }
  });

  int interior[8] = {0}, exterior[8] = {0};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const int o = table.octant(probes[i]);
    if (status[i] == 1) ++interior[o];
    if (status[i] == 2) ++exterior[o];
  }

  bool ok = true;
  std::ostringstream detail;
  for (int o = 0; o < 8; ++o) {
    bool cell_ok = true;
    switch (table.markers[o]) {
      case Marker::Plus:
        cell_ok = interior[o] >= 1 && exterior[o] == 0;
        break;
      case Marker::Minus:
        cell_ok = interior[o] == 0;
        break;
      case Marker::PlusMinus:
        cell_ok = interior[o] >= 1 && exterior[o] >= 1;
        break;
    }
    ok = ok && cell_ok;
    detail << (o ? " " : "") << "o" << o << ":" << interior[o] << "/"
           << exterior[o];
  }
  push(s, "octant_census_matches", ok,
       "interior/exterior hits per octant: " + detail.str());
  return s;
}

namespace {

int flood_fill_components(const BaseTriangle& base, int res) {
  const std::size_t total = static_cast<std::size_t>(res) * res * res;
  std::vector<char> complement(total, 0);
  parallel_for(total, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % res);
    const int j = static_cast<int>((idx / res) % res);
    const int k = static_cast<int>(idx / (static_cast<std::size_t>(res) * res));
    const AngleCosTriple t{-1.0 + 2.0 * (i + 0.5) / res,
                           -1.0 + 2.0 * (j + 0.5) / res,
                           -1.0 + 2.0 * (k + 0.5) / res};
    if (pillow_value(t) < 1e-9) return;
    if (preimages(base, t).solutions.empty()) complement[idx] = 1;
  });

  std::vector<char> seen(total, 0);
  std::vector<std::size_t> stack;
  int components = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (!complement[start] || seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      const int i = static_cast<int>(cur % res);
      const int j = static_cast<int>((cur / res) % res);
      const int k =
          static_cast<int>(cur / (static_cast<std::size_t>(res) * res));
      const int off[6][3] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                             {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
      for (const auto& d : off) {
        const int ni = i + d[0], nj = j + d[1], nk = k + d[2];
        if (ni < 0 || nj < 0 || nk < 0 || ni >= res || nj >= res ||
            nk >= res)
          continue;
        const std::size_t nxt =
            static_cast<std::size_t>(nk) * res * res +
            static_cast<std::size_t>(nj) * res + ni;
        if (!complement[nxt] || seen[nxt]) continue;
        seen[nxt] = 1;
        stack.push_back(nxt);
      }
    }
  }
  return components;
}

}  // namespace

SuiteResult verify_mesh(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"mesh", {}};
  const bool acute = classify(base) == TriangleKind::Acute;

  BoundaryMesh mesh;
  try {
    mesh = build_boundary_mesh(base, opt.mesh_resolution, 1e-8);
  } catch (const MeshToleranceUnreachable& e) {
    push(s, "patch_census", false, e.what());
    return s;
  }

  const std::size_t expected = acute ? 8 : 6;
  int regions = 0;
  for (const MeshPatch& p : mesh.patches)
    if (p.name.rfind("SpecialRegionImage", 0) == 0) ++regions;
  push(s, "patch_census",
       mesh.patches.size() == expected && regions == (acute ? 3 : 1) &&
           mesh.find("F_Bminus") != nullptr &&
           mesh.find("F_Bplus") != nullptr &&
           mesh.find("EllipseCap_A") != nullptr &&
           mesh.find("EllipseCap_B") != nullptr &&
           mesh.find("EllipseCap_C") != nullptr,
       std::to_string(mesh.patches.size()) + " patches, " +
           std::to_string(regions) + " special region images");

  double worst = 0.0;
  for (const char* name : {"F_Bminus", "F_Bplus"}) {
    const MeshPatch* p = mesh.find(name);
    if (p == nullptr) continue;
    for (const auto& v : p->vertices)
      worst = std::max(
          worst, std::abs(pillow_value(AngleCosTriple::from_vec(v))));
  }
  push(s, "pillowcase_patch_residuals", worst <= 1e-8,
       "max |pillow value| " + num(worst));

  if (opt.flood_fill) {
    const int comps = flood_fill_components(base, opt.flood_fill_resolution);
    push(s, "flood_fill_components", comps == 3,
         std::to_string(comps) + " complement components at resolution " +
             std::to_string(opt.flood_fill_resolution));
  } else {
    push(s, "flood_fill_components", true, "disabled; skipped");
  }
  return s;
}

SuiteResult verify_bounds(const BaseTriangle& base, const VerifyOptions& opt) {
  SuiteResult s{"bounds", {}};
  Rng rng(opt.seed, 23);

  if (classify(base) != TriangleKind::Acute) {
    bool threw = false;
    try {
      apex_angle_bounds(base, {base.circle().center.x(),
                                base.circle().center.y(),
                                base.circle().radius});
    } catch (const NotAcuteBase&) {
      threw = true;
    }
    push(s, "rejects_non_acute", threw, "non-acute base correctly rejected");
    return s;
  }

  const int n = std::min(opt.samples, 2000);
  int failures = 0, applied = 0;
  for (int i = 0; i < n; ++i) {
    const ApexPoint apex = spatial_apex(rng, base.circle(), 2.5, 0.01, 3.0);
    const ApexBoundsReport rep = apex_angle_bounds(base, apex);
    if (!rep.all_ok()) ++failures;
    for (const auto& item : rep.items)
      if (item.hypothesis_met) ++applied;
  }
  push(s, "holds_on_samples", failures == 0,
       std::to_string(failures) + " failures of " + std::to_string(n) +
           " apexes, " + std::to_string(applied) + " hypotheses applied");
  return s;
}

std::vector<std::string> verify_suite_names() {
  return {"pillow",    "volume",   "jacobian", "gradients", "nonsmooth",
          "curvature", "eta",      "overlap",  "p3p",       "witness",
          "limits",    "markers",  "mesh",     "bounds"};
}

SuiteResult run_suite(const std::string& name, const BaseTriangle& base,
                      const VerifyOptions& opt) {
  if (name == "pillow") return verify_pillow(base, opt);
  if (name == "volume") return verify_volume(base, opt);
  if (name == "jacobian") return verify_jacobian(base, opt);
  if (name == "gradients") return verify_gradients(base, opt);
  if (name == "nonsmooth") return verify_nonsmooth(base, opt);
  if (name == "curvature") return verify_curvature(base, opt);
  if (name == "eta") return verify_eta(base, opt);
  if (name == "overlap") return verify_overlap(base, opt);
  if (name == "p3p") return verify_p3p(base, opt);
  if (name == "witness") return verify_witness(base, opt);
  if (name == "limits") return verify_limits(base, opt);
  if (name == "markers") return verify_markers(base, opt);
  if (name == "mesh") return verify_mesh(base, opt);
  if (name == "bounds") return verify_bounds(base, opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tetra
