#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace tetra {

// Relative tolerances shared across the library. All geometric predicates
// normalize lengths by the circumradius before comparing against these, so
// the same config works for bases of any scale.
struct ToleranceConfig {
  double tol_area = 1e-12;       // degeneracy cutoff for twice the signed area
  double tol_predicate = 1e-9;   // on/off bands of sign predicates
  double tol_root = 1e-12;       // root acceptance after polishing
  double tol_dedup = 1e-7;       // merge radius for nearby solutions
  std::uint64_t rng_seed = 0;
};

// Candidate apex D = (p, q, r). The base triangle lives in the plane r = 0
// and we only ever need r >= 0 because the configuration is mirror symmetric
// in that plane.
struct ApexPoint {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  Eigen::Vector3d vec() const { return {p, q, r}; }
};

// Distances from the apex to the three base vertices, in the fixed order
// x = |DC|, y = |DB|, z = |DA|. They determine the apex up to the mirror
// symmetry in the base plane.
struct DistanceTriple {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// A point (cos(angle BDC), cos(angle ADC), cos(angle ADB)) of the apex
// angle-cosine space, the codomain of the forward map.
struct AngleCosTriple {
  double c_alpha = 0.0;
  double c_beta = 0.0;
  double c_gamma = 0.0;

  Eigen::Vector3d vec() const { return {c_alpha, c_beta, c_gamma}; }
  static AngleCosTriple from_vec(const Eigen::Vector3d& v) {
    return {v.x(), v.y(), v.z()};
  }
  double component(int axis) const {
    return axis == 0 ? c_alpha : (axis == 1 ? c_beta : c_gamma);
  }
};

enum class VertexId { A, B, C };
enum class SideId { BC, AC, AB };

// The side opposite a vertex and the two sides incident to it.
inline SideId opposite_side(VertexId v) {
  switch (v) {
    case VertexId::A: return SideId::BC;
    case VertexId::B: return SideId::AC;
    default: return SideId::AB;
  }
}
inline VertexId opposite_vertex(SideId s) {
  switch (s) {
    case SideId::BC: return VertexId::A;
    case SideId::AC: return VertexId::B;
    default: return VertexId::C;
  }
}

}  // namespace tetra
