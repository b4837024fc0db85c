#include "tetra/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tetra/angle_map.hpp"
#include "tetra/degeneracy.hpp"
#include "tetra/inverse.hpp"
#include "tetra/limits.hpp"
#include "tetra/pillow.hpp"
#include "tetra/toroids.hpp"

namespace tetra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// A target sits inside the attainable set when some fiber point has real
// height and stays clear of the degenerate cylinder.
bool interior_probe(const BaseTriangle& base, const AngleCosTriple& target) {
  const P3PSolution sol = preimages(base, target);
  for (const P3PCandidate& cand : sol.solutions)
    if (!cand.planar && !cand.near_cylinder) return true;
  return false;
}

struct GridPatch {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<bool> keep;
  std::vector<std::array<int, 3>> triangles;

  int add(const Eigen::Vector3d& v, bool kept = true) {
    vertices.push_back(v);
    keep.push_back(kept);
    return static_cast<int>(vertices.size()) - 1;
  }
  void tri(int a, int b, int c) { triangles.push_back({a, b, c}); }

  MeshPatch compact(const std::string& name) const {
    MeshPatch out;
    out.name = name;
    std::vector<int> remap(vertices.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!keep[i]) continue;
      remap[i] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(vertices[i]);
    }
    for (const auto& t : triangles) {
      if (remap[t[0]] < 0 || remap[t[1]] < 0 || remap[t[2]] < 0) continue;
      out.triangles.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
    }
    return out;
  }
};

// Image of one planar disc or exterior ring family. inverted == false walks
// radii rho = i/N inside the circumcircle; inverted == true walks
// rho = N/i from far away down to the circle and seats the point at
// infinity at (1, 1, 1).
MeshPatch planar_image_patch(const BaseTriangle& canon, double theta_b,
                             double theta_c, int n, int m, bool inverted,
                             double skip_band, double& max_residual) {
  GridPatch grid;
  if (inverted) {
    grid.add(Eigen::Vector3d(1.0, 1.0, 1.0));
  } else {
    const AngleCosTriple f = face_cosines(canon, ApexPoint{0.0, 0.0, 0.0});
    grid.add(f.vec());
    max_residual = std::max(max_residual, std::abs(pillow_value(f)));
  }

  const double vertex_angles[3] = {0.0, theta_b, theta_c};
  for (int i = 1; i <= n; ++i) {
    const double rho = inverted ? double(n) / double(i) : double(i) / double(n);
    const bool outermost = i == n;
    for (int j = 0; j < m; ++j) {
      const double th = kTwoPi * j / m;
      bool kept = true;
      if (outermost) {
        for (double va : vertex_angles)
          if (angular_distance(th, va) <= skip_band) kept = false;
      }
      if (!kept) {
        // Dropped slots sit on a base vertex where the map is undefined;
        // the placeholder never reaches the output.
        grid.add(Eigen::Vector3d::Zero(), false);
        continue;
      }
      const ApexPoint apex{rho * std::cos(th), rho * std::sin(th), 0.0};
      const AngleCosTriple f = face_cosines(canon, apex);
      grid.add(f.vec(), kept);
      max_residual = std::max(max_residual, std::abs(pillow_value(f)));
    }
  }

  auto ring_idx = [m](int ring, int j) { return 1 + (ring - 1) * m + j; };
  for (int j = 0; j < m; ++j)
    grid.tri(0, ring_idx(1, j), ring_idx(1, (j + 1) % m));
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int j1 = (j + 1) % m;
      grid.tri(ring_idx(i, j), ring_idx(i + 1, j), ring_idx(i + 1, j1));
      grid.tri(ring_idx(i, j), ring_idx(i + 1, j1), ring_idx(i, j1));
    }
  }
  return grid.compact(inverted ? "F_Bplus" : "F_Bminus");
}

Eigen::Vector3d cap_point(int axis, double fixed, double a, double b) {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double f = (a + b) * inv_sqrt2;
  const double g = (a - b) * inv_sqrt2;
  switch (axis) {
    case 0: return {fixed, f, g};
    case 1: return {f, fixed, g};
    default: return {f, g, fixed};
  }
}

MeshPatch ellipse_cap_patch(const BaseTriangle& base, VertexId v, int n,
                            int m, double& max_form_excess) {
  const LimitSolidEllipse lim = limit_solid_ellipse(base, v);
  const double x0 = lim.fixed_value;
  const double major = std::sqrt(std::max(0.0, 1.0 + x0));
  const double minor = std::sqrt(std::max(0.0, 1.0 - x0));

  GridPatch grid;
  {
    const Eigen::Vector3d center = cap_point(lim.axis, x0, 0.0, 0.0);
    grid.add(center,
             !interior_probe(base, AngleCosTriple::from_vec(center)));
  }
  for (int i = 1; i <= n; ++i) {
    const double s = double(i) / double(n);
    for (int j = 0; j < m; ++j) {
      const double psi = kTwoPi * j / m;
      const Eigen::Vector3d p = cap_point(lim.axis, x0,
                                          s * major * std::cos(psi),
                                          s * minor * std::sin(psi));
      const AngleCosTriple t = AngleCosTriple::from_vec(p);
      grid.add(p, !interior_probe(base, t));
      max_form_excess =
          std::max(max_form_excess, lim.form_value(t) - lim.bound());
    }
  }

  auto ring_idx = [m](int ring, int j) { return 1 + (ring - 1) * m + j; };
  for (int j = 0; j < m; ++j)
    grid.tri(0, ring_idx(1, j), ring_idx(1, (j + 1) % m));
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int j1 = (j + 1) % m;
      grid.tri(ring_idx(i, j), ring_idx(i + 1, j), ring_idx(i + 1, j1));
      grid.tri(ring_idx(i, j), ring_idx(i + 1, j1), ring_idx(i, j1));
    }
  }
  const char* names[3] = {"EllipseCap_A", "EllipseCap_B", "EllipseCap_C"};
  return grid.compact(names[static_cast<int>(v)]);
}

MeshPatch region_image_patch(const CanonicalFrame& frame,
                             const BaseTriangle& canon,
                             const SpecialRegion& region, int n, int m,
                             double& max_residual) {
  MeshPatch patch;
  const char* names[3] = {"SpecialRegionImage_A", "SpecialRegionImage_B",
                          "SpecialRegionImage_C"};
  patch.name = names[static_cast<int>(region.vertex)];

  for (int j = 0; j < m; ++j) {
    const double phi =
        region.phi_lo + (j + 0.5) * (region.phi_hi - region.phi_lo) / m;
    const double top = region.z_max(phi);
    for (int i = 0; i <= n; ++i) {
      const double r = top * double(i) / double(n);
      const CylinderPoint cp{phi, r};
      const AngleCosTriple f = fc_point(frame, cp);
      patch.vertices.push_back(f.vec());
      const ApexPoint embedded{std::cos(phi), std::sin(phi), r};
      const AngleCosTriple direct = face_cosines(canon, embedded);
      max_residual = std::max(
          max_residual, (f.vec() - direct.vec()).cwiseAbs().maxCoeff());
    }
  }
  auto idx = [n](int j, int i) { return j * (n + 1) + i; };
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 0; i < n; ++i) {
      patch.triangles.push_back({idx(j, i), idx(j + 1, i), idx(j + 1, i + 1)});
      patch.triangles.push_back({idx(j, i), idx(j + 1, i + 1), idx(j, i + 1)});
    }
  }
  return patch;
}

}  // namespace

BoundaryMesh build_boundary_mesh(const BaseTriangle& base, int resolution,
                                 double mesh_tol) {
  const int n = std::max(2, resolution);
  const int m = std::max(8, n);
  const CanonicalFrame frame = canonicalize(base);
  const BaseTriangle& canon = frame.canonical_base();
  const double skip_band = base.tol().tol_dedup;

  BoundaryMesh mesh;
  double planar_residual = 0.0;
  mesh.patches.push_back(planar_image_patch(canon, frame.theta_b(),
                                            frame.theta_c(), n, m, false,
                                            skip_band, planar_residual));
  mesh.patches.push_back(planar_image_patch(canon, frame.theta_b(),
                                            frame.theta_c(), n, m, true,
                                            skip_band, planar_residual));

  double form_excess = 0.0;
  for (VertexId v : {VertexId::A, VertexId::B, VertexId::C})
    mesh.patches.push_back(ellipse_cap_patch(base, v, n, m, form_excess));

  double region_residual = 0.0;
  for (const SpecialRegion& region : special_regions_all(base))
    mesh.patches.push_back(
        region_image_patch(frame, canon, region, n, m, region_residual));

  if (planar_residual > mesh_tol || form_excess > mesh_tol ||
      region_residual > mesh_tol)
    throw MeshToleranceUnreachable(
        "mesh vertices miss their defining equations at the requested "
        "tolerance");
  return mesh;
}

SigmaMembership sigma_membership(const BaseTriangle& base,
                                 const AngleCosTriple& target) {
  const P3PSolution sol = preimages(base, target);
  bool planar_fiber = false;
  for (const P3PCandidate& cand : sol.solutions) {
    if (!cand.planar) return SigmaMembership::InSigma;
    planar_fiber = true;
  }
  if (sol.polish_failures > 0)
    throw SolverNonConvergence(
        "inverse solver lost candidates; a negative answer would be "
        "unreliable");

  const double tol = base.tol().tol_predicate;
  if (planar_fiber) return SigmaMembership::OnClosureBoundaryOnly;
  if (1.0 - std::min({target.c_alpha, target.c_beta, target.c_gamma}) <= tol)
    return SigmaMembership::OnClosureBoundaryOnly;
  for (VertexId v : {VertexId::A, VertexId::B, VertexId::C})
    if (limit_solid_ellipse(base, v).contains(target, tol))
      return SigmaMembership::OnClosureBoundaryOnly;
  return SigmaMembership::Outside;
}

}  // namespace tetra
