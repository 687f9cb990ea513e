#include "leastgrad/giusti.hpp"

#include <algorithm>
#include <string>

#include "leastgrad/errors.hpp"

namespace lg {

GiustiResult giusti_extension(const Domain& domain, const BoundaryDatum& datum, double epsilon,
                              const GridField& grid) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("giusti_extension: epsilon must lie in (0, 1/2)");
  }
  GiustiResult r;
  r.t0 = 0.5 * std::min(domain.band(), epsilon * epsilon);
  if (r.t0 < 2.0 * grid.h) {
    throw RefusedError("giusti_extension: cell size " + std::to_string(grid.h) +
                       " too coarse; need h <= " + std::to_string(0.5 * r.t0));
  }
  r.rampWidth = 4.0 * grid.h;
  const BoundaryDatum smooth = datum.mollified(r.rampWidth);
  r.datumL1 = smooth.l1_norm();
  r.t1 = std::min(0.5 * r.t0, r.t0 * r.datumL1 / (2.0 * (1.0 + smooth.max_slope())));
  r.field = grid;

  for (int j = 0; j < grid.ny + 2; ++j) {
    for (int i = 0; i < grid.nx + 2; ++i) {
      const std::size_t idx = grid.index(i, j);
      const CellKind kind = grid.kind[idx];
      if (kind == CellKind::Exterior) continue;
      const Point c = grid.center(i, j);
      const double trace = smooth.empty() ? 0.0 : smooth.value(domain.param(domain.project(c)));
      if (kind == CellKind::Ghost) {
        r.field.value[idx] = trace;
        continue;
      }
      const double d = domain.inner_distance(c);
      const double ramp = std::clamp((r.t0 - d) / (r.t0 - r.t1), 0.0, 1.0);
      r.field.value[idx] = ramp > 0.0 ? trace * ramp : 0.0;
    }
  }
  r.massPart = r.field.l1_norm();
  r.tvPart = tv(r.field);
  r.w11Norm = r.massPart + r.tvPart;
  return r;
}

}  // namespace lg
