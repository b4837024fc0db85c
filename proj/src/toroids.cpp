#include "tetra/toroids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tetra/degeneracy.hpp"

namespace tetra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double a) {
  double t = std::fmod(a, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// Representative of a in (center - pi, center + pi].
double wrap_near(double a, double center) {
  double t = std::fmod(a - center, kTwoPi);
  if (t <= -kPi) t += kTwoPi;
  if (t > kPi) t -= kTwoPi;
  return center + t;
}

void side_vertices(SideId side, VertexId& p, VertexId& q) {
  switch (side) {
    case SideId::BC: p = VertexId::B; q = VertexId::C; break;
    case SideId::AC: p = VertexId::A; q = VertexId::C; break;
    default:         p = VertexId::A; q = VertexId::B; break;
  }
}

}  // namespace

double toroid_residual(const Toroid& t, const Eigen::Vector3d& m) {
  const Eigen::Vector3d mk = t.k - m;
  const Eigen::Vector3d ml = t.l - m;
  const double nk = mk.norm(), nl = ml.norm();
  if (!(nk > 0.0) || !(nl > 0.0))
    throw PointOnChordEndpoint("angle is undefined at a chord endpoint");
  return mk.dot(ml) / (nk * nl) - std::cos(t.alpha);
}

double CriticalCurve::height(double phi) const {
  const double c = std::cos(phi - mu);
  return 2.0 * std::sqrt(std::max(0.0, cos_opposite * c));
}

Eigen::Vector3d CriticalCurve::point(double phi) const {
  return {std::cos(phi), std::sin(phi), height(phi)};
}

CriticalCurve critical_curve(const CanonicalFrame& frame, SideId side) {
  VertexId pv, qv;
  side_vertices(side, pv, qv);
  const VertexId ov = opposite_vertex(side);
  const double cos_opp =
      std::cos(frame.canonical_base().angles().at(ov));
  if (cos_opp <= frame.canonical_base().tol().tol_predicate)
    throw EmptyCurve("the toroid of a non-acute angle misses the cylinder");

  const double tp = frame.theta(pv);
  const double tq = frame.theta(qv);
  const double tv = frame.theta(ov);
  const double span = wrap_two_pi(tq - tp);
  const bool contains_opposite = wrap_two_pi(tv - tp) < span;
  double mu = tp + 0.5 * span;
  if (contains_opposite) mu += kPi;
  mu = wrap_two_pi(mu);

  CriticalCurve curve;
  curve.side = side;
  curve.mu = mu;
  curve.cos_opposite = cos_opp;
  curve.phi_lo = mu - 0.5 * kPi;
  curve.phi_hi = mu + 0.5 * kPi;
  return curve;
}

double SpecialRegion::z_max(double phi) const {
  const double lo = wrap_near(phi, first.mu);
  const double hi = wrap_near(phi, second.mu);
  return std::min(first.height(lo), second.height(hi));
}

SpecialRegion special_region(const CanonicalFrame& frame, VertexId vertex) {
  // The two sides meeting at the vertex; the curve of each needs the angle
  // at the respective far vertex to be acute.
  SideId sides[2];
  switch (vertex) {
    case VertexId::A: sides[0] = SideId::AB; sides[1] = SideId::AC; break;
    case VertexId::B: sides[0] = SideId::AB; sides[1] = SideId::BC; break;
    default:          sides[0] = SideId::AC; sides[1] = SideId::BC; break;
  }
  CriticalCurve curves[2];
  try {
    curves[0] = critical_curve(frame, sides[0]);
    curves[1] = critical_curve(frame, sides[1]);
  } catch (const EmptyCurve&) {
    throw EmptyRegion("no cylinder patch is pinched off at this vertex");
  }

  const double tv = frame.theta(vertex);
  const double m0 = wrap_near(curves[0].mu, tv);
  const double m1 = wrap_near(curves[1].mu, tv);
  const int hi_idx = m0 >= m1 ? 0 : 1;
  const double m_hi = std::max(m0, m1);
  const double m_lo = std::min(m0, m1);

  SpecialRegion region;
  region.vertex = vertex;
  region.first = curves[hi_idx];
  region.second = curves[1 - hi_idx];
  region.first.mu = m_hi;
  region.first.phi_lo = m_hi - 0.5 * kPi;
  region.first.phi_hi = m_hi + 0.5 * kPi;
  region.second.mu = m_lo;
  region.second.phi_lo = m_lo - 0.5 * kPi;
  region.second.phi_hi = m_lo + 0.5 * kPi;
  region.phi_lo = m_hi - 0.5 * kPi;
  region.phi_hi = m_lo + 0.5 * kPi;
  if (!(region.phi_hi > region.phi_lo))
    throw EmptyRegion("no cylinder patch is pinched off at this vertex");

  // Height profiles cross where the squared heights agree, a single zero of
  // a * cos(phi) + b * sin(phi) in the window.
  const double a = region.first.cos_opposite * std::cos(region.first.mu) -
                   region.second.cos_opposite * std::cos(region.second.mu);
  const double b = region.first.cos_opposite * std::sin(region.first.mu) -
                   region.second.cos_opposite * std::sin(region.second.mu);
  double split = std::atan2(-a, b);
  split = wrap_near(split, 0.5 * (region.phi_lo + region.phi_hi));
  region.phi_split = std::clamp(split, region.phi_lo, region.phi_hi);
  return region;
}

std::vector<SpecialRegion> special_regions_all(const BaseTriangle& base) {
  const CanonicalFrame frame = canonicalize(base);
  std::vector<SpecialRegion> out;
  if (classify(base) == TriangleKind::Acute) {
    for (VertexId v : {VertexId::A, VertexId::B, VertexId::C})
      out.push_back(special_region(frame, v));
    return out;
  }
  const BaseAngles& ang = base.angles();
  VertexId widest = VertexId::A;
  if (ang.at_b > ang.at(widest)) widest = VertexId::B;
  if (ang.at_c > ang.at(widest)) widest = VertexId::C;
  out.push_back(special_region(frame, widest));
  return out;
}

bool in_special_region(const BaseTriangle& base, const ApexPoint& apex) {
  if (!on_cylinder(base, apex)) return false;
  const CanonicalFrame frame = canonicalize(base);
  const ApexPoint ca = frame.apex_to_canonical(apex);
  if (!(ca.r > 0.0)) return false;
  const double phi = std::atan2(ca.q, ca.p);
  const double tol = base.tol().tol_predicate;
  for (const SpecialRegion& region : special_regions_all(base)) {
    const double local =
        wrap_near(phi, 0.5 * (region.phi_lo + region.phi_hi));
    if (local < region.phi_lo - tol || local > region.phi_hi + tol) continue;
    if (ca.r <= region.z_max(local) + tol) return true;
  }
  return false;
}

}  // namespace tetra
