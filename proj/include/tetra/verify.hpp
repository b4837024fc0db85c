#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

// One checked statement inside a suite.
struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckLine> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int samples = 10000;
  std::uint64_t seed = 0;
  int mesh_resolution = 24;
  // Voxel component count of the pillow minus the image closure. Costly, so
  // opt-in; meaningful at resolution 64 on the equilateral base.
  bool flood_fill = false;
  int flood_fill_resolution = 64;
};

// Property suites, each aggregating the checks of one theorem cluster
// against the given base. Names accepted by run_suite:
//   pillow volume jacobian gradients nonsmooth curvature eta overlap p3p
//   witness limits markers mesh bounds
std::vector<std::string> verify_suite_names();
SuiteResult run_suite(const std::string& name, const BaseTriangle& base,
                      const VerifyOptions& opt);

SuiteResult verify_pillow(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_volume(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_jacobian(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_gradients(const BaseTriangle& base,
                             const VerifyOptions& opt);
SuiteResult verify_nonsmooth(const BaseTriangle& base,
                             const VerifyOptions& opt);
SuiteResult verify_curvature(const BaseTriangle& base,
                             const VerifyOptions& opt);
SuiteResult verify_eta(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_overlap(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_p3p(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_witness(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_limits(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_markers(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_mesh(const BaseTriangle& base, const VerifyOptions& opt);
SuiteResult verify_bounds(const BaseTriangle& base, const VerifyOptions& opt);

// The three reference bases used by the acceptance run: equilateral with
// circumradius 1, the 3-4-5 right triangle, and the obtuse triangle with
// angles (pi/6, pi/4, 7 pi/12).
BaseTriangle fixture_equilateral();
BaseTriangle fixture_right345();
BaseTriangle fixture_obtuse();

}  // namespace tetra
