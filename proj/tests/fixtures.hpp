#pragma once

#include <cmath>

#include "tetra/base_triangle.hpp"
#include "tetra/verify.hpp"

// Two extra poses the curve tests want beside the shared fixtures: the
// equilateral base traversed clockwise (B at 4pi/3, C at 2pi/3 in the
// canonical frame) and the 3-4-5 base inscribed with AB as a diameter.
inline tetra::BaseTriangle reflected_equilateral() {
  const double h = std::sqrt(3.0) / 2.0;
  return tetra::BaseTriangle({1.0, 0.0}, {-0.5, -h}, {-0.5, h});
}

inline tetra::BaseTriangle diameter_345() {
  return tetra::BaseTriangle({2.5, 0.0}, {-2.5, 0.0},
                             {2.5 * 7.0 / 25.0, 2.5 * 24.0 / 25.0});
}
