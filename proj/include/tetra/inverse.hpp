#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tetra/base_triangle.hpp"
#include "tetra/types.hpp"

namespace tetra {

struct P3PCandidate {
  ApexPoint apex;
  double residual = 0.0;      // max |F(apex) - target| over components
  bool near_cylinder = false; // within the degenerate-fiber warning band
  bool planar = false;        // height collapsed to the base plane
};

struct P3PSolution {
  std::vector<P3PCandidate> solutions;  // at most four, sorted, deduplicated
  int polish_failures = 0;              // candidates dropped by Newton
  std::string note;
};

// All apexes with r >= 0 mapping to the target cosine triple. The three
// law-of-cosines constraints reduce to a quartic in one distance ratio;
// real roots are lifted to distances, trilaterated to an apex, polished,
// and deduplicated. Targets that violate the solid angle inequalities (or
// leave the unit cube) return an empty result.
P3PSolution preimages(const BaseTriangle& base, const AngleCosTriple& target);

struct CountProfile {
  std::array<std::uint64_t, 5> counts{};  // solution count 0..4
  std::uint64_t overflow = 0;             // more than four (never expected)
  std::uint64_t nonconverged = 0;
};

// Histogram of preimage counts over random targets drawn uniformly from the
// pillow.
CountProfile preimage_count_profile(const BaseTriangle& base, int samples,
                                    std::uint64_t seed);

struct RoundtripReport {
  bool recovered = false;
  double best_distance = 0.0;  // distance from the nearest returned apex
  bool near_cylinder = false;
  int count = 0;
};

// Checks that the apex is rediscovered among the preimages of its own
// image. Near the cylinder the fiber collapses quadratically, so the
// acceptance radius there is relaxed.
RoundtripReport roundtrip_check(const BaseTriangle& base,
                                const ApexPoint& apex);

}  // namespace tetra
