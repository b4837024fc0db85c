#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

struct MeshPatch {
  std::string name;
  std::vector<Eigen::Vector3d> vertices;       // angle-cosine space
  std::vector<std::array<int, 3>> triangles;   // indices into vertices
};

struct BoundaryMesh {
  std::vector<MeshPatch> patches;

  const MeshPatch* find(const std::string& name) const {
    for (const auto& p : patches)
      if (p.name == name) return &p;
    return nullptr;
  }
  std::size_t total_vertices() const {
    std::size_t n = 0;
    for (const auto& p : patches) n += p.vertices.size();
    return n;
  }
};

// Triangulated approximation of the boundary of the image closure:
//   F_Bminus            image of the planar disc inside the circumcircle
//   F_Bplus             image of the planar exterior, compactified so the
//                       point at infinity becomes the vertex (1, 1, 1)
//   EllipseCap_A/B/C    the parts of the limit solid ellipses that seat
//                       into the boundary (trimmed by inverse-solver
//                       probes)
//   SpecialRegionImage_A/B/C
//                       images of the cylinder special regions (present
//                       per base classification)
// Vertices of the first two patches satisfy the pillowcase equation up to
// mesh_tol; cap vertices satisfy their plane equation exactly.
BoundaryMesh build_boundary_mesh(const BaseTriangle& base, int resolution,
                                 double mesh_tol = 1e-8);

enum class SigmaMembership { InSigma, OnClosureBoundaryOnly, Outside };

// Decision procedure for membership in the attainable set: attained iff
// some preimage has genuinely positive height; points reachable only in a
// limit (planar fibers, the limit ellipses, the point (1,1,1)) are
// classified as boundary-of-closure only.
SigmaMembership sigma_membership(const BaseTriangle& base,
                                 const AngleCosTriple& target);

}  // namespace tetra
