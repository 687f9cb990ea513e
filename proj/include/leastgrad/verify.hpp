#pragma once

#include <cstdint>

#include "leastgrad/cantor.hpp"
#include "leastgrad/lab.hpp"
#include "leastgrad/regions.hpp"
#include "leastgrad/report.hpp"

namespace lg {

struct VerifyConfig {
  int depth = 8;               // deepest level for the Lipschitz and radius checks
  int contractionDepth = 12;   // levels 0..contractionDepth for chord statistics
  int separationDepth = 10;    // levels 1..separationDepth for triangles
  int chordSamples = 1000;
  std::int64_t lipschitzSamples = 10000;
  int firstTrendLevel = 2;     // first level of the Lipschitz and radius trends
  double radResolution = 0.0;  // 0 selects min_chord(depth) / 8
  double maxRadSlope = -0.8;
  std::uint64_t seed = 1;
  bool modelSuite = true;
  SquareSuiteConfig square;
};

// Every child chord is strictly shorter than 2/3 of its parent, and
// mu_N <= (2/3)^N mu_0.
CheckResult check_chord_contraction(const CantorTree& tree, int depth);
// Exact rational comparison of chord sums: c_{N+1} >= c_N (1 - (2/3)^N) and
// c_D >= c_1 prod_{k<D} (1 - (2/3)^k) > 0.
CheckResult check_fatness(const CantorTree& tree, int depth);
// Hypotenuses shorter than half the parent chord and same-level triangles
// pairwise disjoint, levels 1..depth.
CheckResult check_triangle_separation(const RegionDecomposition& regions, int depth);
// Random sub-chords: chord <= arc <= chord (1 + w s2 (2 s1 + s2 w)) and the
// sagitta bound.
CheckResult check_chord_arc(const ConcaveArc& arc, int samples, std::uint64_t seed);
CheckResult check_sagitta(const ConcaveArc& arc, int samples, std::uint64_t seed);
// Per-level sampled ratio below 1 + c_N, non-increasing in N.
CheckResult check_lipschitz(const RegionDecomposition& regions, int firstLevel, int lastLevel,
                            std::int64_t samples, std::uint64_t seed);
// Monotone decrease and log2 slope of rad(B_N) at a common resolution.
CheckResult check_rad_decay(const RegionDecomposition& regions, int firstLevel, int lastLevel,
                            double resolution, double maxSlope);

// Full verification of one curve. When the curve hypotheses fail only those
// checks are reported, together with a failed placeholder for the rest.
VerificationReport run_verification(const ConcaveArc& arc, const VerifyConfig& config);

}  // namespace lg
