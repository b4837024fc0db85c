#pragma once

#include <iosfwd>
#include <string>

#include "tetra/base_triangle.hpp"
#include "tetra/boundary.hpp"
#include "tetra/types.hpp"

namespace tetra {

// Shortest-stable decimal form used by every writer: 15 significant digits.
std::string format_double(double v);

// Parses a base description, either
//   {"A":[ax,ay],"B":[bx,by],"C":[cx,cy]}
// or
//   {"angles":[a1,a2,a3],"circumradius":R}
// from a JSON document given inline or by file path.
BaseTriangle load_base(const std::string& path_or_inline,
                       const ToleranceConfig& tol = {});
BaseTriangle base_from_json_text(const std::string& text,
                                 const ToleranceConfig& tol = {});

// Wavefront OBJ: one group per patch, vertices to 15 significant digits,
// 1-indexed faces.
void write_obj(const BoundaryMesh& mesh, std::ostream& out);

// ASCII PLY with a per-vertex integer patch id.
void write_ply(const BoundaryMesh& mesh, std::ostream& out);

// Writes through a temporary file in the same directory and renames, so a
// failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tetra
