#pragma once

#include "leastgrad/grid.hpp"

namespace lg {

struct GiustiResult {
  GridField field;
  double w11Norm = 0.0;    // sum h^2 |u| + tv(u)
  double tvPart = 0.0;
  double massPart = 0.0;
  double datumL1 = 0.0;    // L1 norm of the mollified datum
  double t0 = 0.0;         // outer layer depth
  double t1 = 0.0;         // depth below which u equals the datum
  double rampWidth = 0.0;
};

// Layered extension of boundary data: u(x) = h(param(project x)) * ramp(d(x))
// with ramp = 1 for d <= t1 and 0 for d >= t0, where h is the datum mollified
// over 4 cells, t0 = min(band, eps^2) / 2 and
// t1 = min(t0 / 2, t0 |h|_1 / (2 (1 + |h'|_inf))). Ghost cells carry the
// mollified datum, cut cells the formula itself.
// DomainError unless 0 < eps < 1/2; RefusedError when t0 < 2 h_grid.
GiustiResult giusti_extension(const Domain& domain, const BoundaryDatum& datum, double epsilon,
                              const GridField& grid);

}  // namespace lg
