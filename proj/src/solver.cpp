#include "leastgrad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leastgrad/errors.hpp"
#include "leastgrad/numeric.hpp"

namespace lg {

namespace {

struct Stencil {
  std::vector<std::uint8_t> counted, right, up;
  std::vector<std::size_t> terms;     // counted cells
  std::vector<std::size_t> interior;  // free cells
};

Stencil make_stencil(const GridField& f) {
  Stencil s;
  const std::size_t total = f.value.size();
  const int W = f.stride();
  s.counted.assign(total, 0);
  s.right.assign(total, 0);
  s.up.assign(total, 0);
  for (int j = 0; j < f.ny + 2; ++j) {
    for (int i = 0; i < W; ++i) {
      const std::size_t p = f.index(i, j);
      if (!f.active(p)) continue;
      if (f.interior(p)) s.interior.push_back(p);
      const bool r = i + 1 < W && f.active(p + 1);
      const bool u = j + 1 < f.ny + 2 && f.active(p + W);
      if (f.interior(p) || (r && f.interior(p + 1)) || (u && f.interior(p + W))) {
        s.counted[p] = 1;
        s.right[p] = r;
        s.up[p] = u;
        s.terms.push_back(p);
      }
    }
  }
  return s;
}

}  // namespace

SolveResult least_gradient_solve(const GridField& problem, const SolverConfig& config) {
  if (config.maxIter < 1 || !(config.tolerance > 0.0) || config.checkpointEvery < 1) {
    throw DomainError("least_gradient_solve: invalid solver configuration");
  }
  const Stencil st = make_stencil(problem);
  const std::size_t total = problem.value.size();
  const std::size_t W = static_cast<std::size_t>(problem.stride());

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t p = 0; p < total; ++p) {
    if (problem.active(p) && !problem.interior(p)) {
      lo = std::min(lo, problem.value[p]);
      hi = std::max(hi, problem.value[p]);
    }
  }
  if (lo > hi) lo = hi = 0.0;

  std::vector<double> u = problem.value;
  if (!config.initial.empty()) {
    if (config.initial.size() != total) throw DomainError("least_gradient_solve: initial size mismatch");
    for (std::size_t q : st.interior) u[q] = std::clamp(config.initial[q], lo, hi);
  } else {
    for (std::size_t q : st.interior) u[q] = std::clamp(0.0, lo, hi);
  }
  std::vector<double> ubar = u, px(total, 0.0), py(total, 0.0), w(total, 0.0);
  const double tau = 0.99 / std::sqrt(8.0), sigma = tau;
  const double h = problem.h;
  const bool aniso = config.norm == TvNorm::Anisotropic;

  const auto energy = [&](const std::vector<double>& v) {
    CompensatedSum s;
    for (std::size_t p : st.terms) {
      const double d1 = st.right[p] ? v[p + 1] - v[p] : 0.0;
      const double d2 = st.up[p] ? v[p + W] - v[p] : 0.0;
      s.add(aniso ? std::abs(d1) + std::abs(d2) : std::hypot(d1, d2));
    }
    return h * s.value();
  };
  const auto adjoint = [&]() {
    for (std::size_t q : st.interior) w[q] = px[q - 1] + py[q - W] - px[q] - py[q];
  };
  // Dual value h [<p, K 0 + b> + sum_q min(lo w_q, hi w_q)].
  const auto dual_value = [&]() {
    std::vector<double> v0 = problem.value;
    for (std::size_t q : st.interior) v0[q] = 0.0;
    CompensatedSum s;
    for (std::size_t p : st.terms) {
      const double d1 = st.right[p] ? v0[p + 1] - v0[p] : 0.0;
      const double d2 = st.up[p] ? v0[p + W] - v0[p] : 0.0;
      s.add(px[p] * d1 + py[p] * d2);
    }
    adjoint();
    for (std::size_t q : st.interior) s.add(std::min(lo * w[q], hi * w[q]));
    return h * s.value();
  };

  SolveResult out;
  SolveReport& rep = out.report;
  std::vector<double> best = u;
  double bestE = energy(u);
  double bestD = -std::numeric_limits<double>::infinity();
  std::int64_t it = 0;
  while (it < config.maxIter) {
    for (std::size_t p : st.terms) {
      const double d1 = st.right[p] ? ubar[p + 1] - ubar[p] : 0.0;
      const double d2 = st.up[p] ? ubar[p + W] - ubar[p] : 0.0;
      const double a = px[p] + sigma * d1, b = py[p] + sigma * d2;
      // Projection onto the dual unit ball: the disc, or the square for l1.
      if (aniso) {
        px[p] = std::clamp(a, -1.0, 1.0);
        py[p] = std::clamp(b, -1.0, 1.0);
      } else {
        const double n = std::max(1.0, std::hypot(a, b));
        px[p] = a / n;
        py[p] = b / n;
      }
    }
    adjoint();
    for (std::size_t q : st.interior) {
      const double next = std::clamp(u[q] - tau * w[q], lo, hi);
      ubar[q] = 2.0 * next - u[q];
      u[q] = next;
    }
    ++it;
    if (it % config.checkpointEvery == 0 || it == config.maxIter) {
      const double E = energy(u);
      if (E < bestE) {
        bestE = E;
        best = u;
      }
      bestD = std::max(bestD, dual_value());
      const double gap = std::max(0.0, bestE - bestD);
      rep.checkpoints.push_back({it, bestE, gap});
      if (gap < config.tolerance * (1.0 + bestE)) {
        rep.converged = true;
        break;
      }
    }
  }
  out.field = problem;
  out.field.value = best;
  rep.iterations = it;
  rep.tv = bestE;
  rep.l1Interior = out.field.l1_norm();
  CompensatedSum boundaryMass;
  for (std::size_t p = 0; p < total; ++p) {
    if (problem.active(p) && !problem.interior(p)) boundaryMass.add(std::abs(problem.value[p]));
  }
  rep.l1Norm = rep.l1Interior + 0.5 * h * h * boundaryMass.value();
  rep.primalDualGap = rep.checkpoints.empty() ? 0.0 : rep.checkpoints.back().gap;
  return out;
}

}  // namespace lg
