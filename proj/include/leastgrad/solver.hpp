#pragma once

#include <cstdint>
#include <vector>

#include "leastgrad/grid.hpp"

namespace lg {

struct SolverConfig {
  std::int64_t maxIter = 20000;
  double tolerance = 1e-4;  // stop when gap < tolerance * (1 + tv)
  std::int64_t checkpointEvery = 50;
  TvNorm norm = TvNorm::Isotropic;
  // Optional starting values for all cells (same layout as GridField::value).
  std::vector<double> initial;
};

struct Checkpoint {
  std::int64_t iteration = 0;
  double energy = 0.0;  // best primal energy so far
  double gap = 0.0;
};

struct SolveReport {
  double tv = 0.0;
  // L1 norm over the closed grid: interior cells weigh h^2, boundary cells
  // h^2 / 2. A thin boundary layer carrying the trace keeps mass O(h).
  double l1Norm = 0.0;
  double l1Interior = 0.0;  // interior cells only
  std::int64_t iterations = 0;
  double primalDualGap = 0.0;
  bool converged = false;
  std::vector<Checkpoint> checkpoints;
};

struct SolveResult {
  GridField field;
  SolveReport report;
};

// Minimizes tv(field) over interior values with ghost and cut values fixed,
// by the over-relaxed primal-dual method (tau = sigma = 0.99 / sqrt(8) on
// unscaled differences, theta = 1). Values are kept in the range of the
// boundary values, which never raises TV and bounds the dual. Returns the
// iterate with the lowest energy among checkpoints.
SolveResult least_gradient_solve(const GridField& problem, const SolverConfig& config);

}  // namespace lg
