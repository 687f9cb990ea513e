#pragma once

#include <cstdint>
#include <vector>

#include "leastgrad/giusti.hpp"
#include "leastgrad/regions.hpp"
#include "leastgrad/report.hpp"
#include "leastgrad/solver.hpp"

namespace lg {

struct SquareSuiteConfig {
  int fields = 100;
  int n = 64;           // grid for the directional and Poincare checks
  int giustiN = 512;    // grid for the upper bound
  double epsilon = 0.1;
  std::uint64_t seed = 1;
};

// Discrete model-square checks on random piecewise-bilinear fields:
//  (i)   axis-2 TV >= sum h |trace(bottom) - trace(top)|;
//  (ii)  axis-1 TV <= sqrt(tau (tau + 2 tv2)) with tau = tv - tv2, which
//        forces axis-1 TV to zero with tau;
//  (iii) L1 <= axis-1 TV for fields vanishing on the left edge;
//  (iv)  the layered extension of 1_M on the bottom side has W^{1,1} norm
//        <= (1 + eps) |M| + 4 h.
VerificationReport model_square_suite(const SquareSuiteConfig& config = {});

// Random field sampled at every cell center (ghost ring included) from a
// bilinear interpolant of a coarse random lattice; points outside the unit
// square are clamped onto it, so traces are consistent with the interior.
GridField random_bilinear_field(int n, int lattice, std::uint64_t seed);

struct CoareaResult {
  double lhs = 0.0;  // sum over cells of B_N of h^2 |grad w . V_N|
  double rhs = 0.0;  // arcSum(N) / (1 + c_N)
  double arcSum = 0.0;
  double cN = 0.0;
  std::int64_t cells = 0;      // cells of B_N counted
  std::int64_t undefined = 0;  // cells on region boundaries, skipped
};

// Central differences of w (one-sided next to Exterior cells), V_N from
// v_field, compensated summation. Throws VerificationError with both numbers
// when lhs < (1 - tolerance) rhs; DomainError when w has no boundary mass.
CoareaResult coarea_lower_check(const GridField& w, const RegionDecomposition& regions, int N,
                                double tolerance = 0.1);

// Window grid around the arc of a circular tree, deep enough to hold the
// layer of the extension.
GridField arc_window_grid(const RegionDecomposition& regions, double depth, double h);

struct ProbeRow {
  int n = 0;  // cells across (square) or 0 for window grids
  double h = 0.0;
  double tv = 0.0;
  double l1Norm = 0.0;
  double l1Interior = 0.0;
  double datumL1 = 0.0;
  double gap = 0.0;  // tv - datumL1
  std::int64_t iterations = 0;
  bool converged = false;
};

// Model square with datum 1 on [lo, hi] x {0}.
std::vector<ProbeRow> nonattainment_probe_square(const std::vector<int>& sizes, double lo,
                                                 double hi, const SolverConfig& config);
// Disc continuing a circular tree, datum 1_{K_N}, on window grids with zero
// values on the artificial window edges.
std::vector<ProbeRow> nonattainment_probe_disc(const RegionDecomposition& regions, int N,
                                               const std::vector<double>& cellSizes,
                                               const SolverConfig& config);

struct OracleCase {
  std::vector<double> traces;  // 16 values around the 4 x 4 block, counter-clockwise
  double solverTv = 0.0;
  double oracleTv = 0.0;       // minimum over all +-1 interior fields
  bool converged = false;
};

// 4 x 4 interior cells with a 16-cell ring of +-1 traces (6 x 6 with corners
// unused). The oracle enumerates all 2^16 binary interiors and measures them
// with config.norm. Thresholding is exact only for the anisotropic norm; the
// isotropic minimum can lie strictly below the binary one.
OracleCase solve_oracle_case(const std::vector<double>& traces, const SolverConfig& config);
std::vector<std::vector<double>> random_oracle_traces(int count, std::uint64_t seed);

}  // namespace lg
