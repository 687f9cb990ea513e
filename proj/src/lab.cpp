#include "leastgrad/lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "leastgrad/errors.hpp"
#include "leastgrad/numeric.hpp"
#include "leastgrad/parallel.hpp"

namespace lg {

namespace {

double sum_abs_trace_difference(const GridField& f) {
  CompensatedSum s;
  for (int i = 1; i <= f.nx; ++i) s.add(std::abs(f.value[f.index(i, 0)] - f.value[f.index(i, f.ny + 1)]));
  return s.value() * f.h;
}

CheckResult make_check(std::string name, std::string anchor, double worstMargin, int cases,
                       NamedValues measured, NamedValues bounds, std::string note = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.measured = std::move(measured);
  c.measured.emplace_back("cases", cases);
  c.bounds = std::move(bounds);
  c.margin = worstMargin;
  c.pass = worstMargin >= 0.0;
  c.note = std::move(note);
  return c;
}

}  // namespace

GridField random_bilinear_field(int n, int lattice, std::uint64_t seed) {
  if (n < 1 || lattice < 1) throw DomainError("random_bilinear_field: sizes must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> nodes(static_cast<std::size_t>(lattice + 1) * (lattice + 1));
  for (auto& v : nodes) v = U(rng);
  const auto node = [&](int a, int b) { return nodes[static_cast<std::size_t>(b) * (lattice + 1) + a]; };
  SquareDomain sq;
  GridField f = make_grid(sq, n);
  for (int j = 0; j < n + 2; ++j) {
    for (int i = 0; i < n + 2; ++i) {
      const std::size_t idx = f.index(i, j);
      if (!f.active(idx)) continue;
      const Point c = f.center(i, j);
      const double x = std::clamp(c.x, 0.0, 1.0) * lattice, y = std::clamp(c.y, 0.0, 1.0) * lattice;
      const int a = std::min(static_cast<int>(x), lattice - 1), b = std::min(static_cast<int>(y), lattice - 1);
      const double s = x - a, t = y - b;
      f.value[idx] = (1 - s) * (1 - t) * node(a, b) + s * (1 - t) * node(a + 1, b) +
                     (1 - s) * t * node(a, b + 1) + s * t * node(a + 1, b + 1);
    }
  }
  return f;
}

VerificationReport model_square_suite(const SquareSuiteConfig& cfg) {
  if (cfg.fields < 1 || cfg.n < 2) throw DomainError("model_square_suite: invalid configuration");
  VerificationReport rep;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> lattice(1, 8);
  std::uniform_real_distribution<double> U(0.0, 1.0);

  // (i) axis-2 variation dominates the bottom/top trace difference.
  {
    double worst = INFINITY;
    for (int k = 0; k < cfg.fields; ++k) {
      const GridField f = random_bilinear_field(cfg.n, lattice(rng), rng());
      worst = std::min(worst, tv_directional(f, 2) - sum_abs_trace_difference(f));
    }
    rep.checks.push_back(make_check("model.directional-trace", "model-directional-trace-bound",
                                    worst + 1e-12, cfg.fields, {{"worstSlack", worst}},
                                    {{"slackAtLeast", 0.0}}));
  }
  // (ii) tau = tv - tv2 controls tv1. Fields mix a vertical profile with a
  // perturbation of random size so tau spans several decades.
  {
    double worst = INFINITY, smallestTau = INFINITY, tv1AtSmallestTau = 0.0;
    int literal = 0;
    for (int k = 0; k < cfg.fields; ++k) {
      GridField base = random_bilinear_field(cfg.n, lattice(rng), rng());
      const GridField noise = random_bilinear_field(cfg.n, lattice(rng), rng());
      const double delta = std::pow(10.0, -4.0 + 4.0 * U(rng));
      for (int j = 0; j < cfg.n + 2; ++j) {
        const double profile = base.value[base.index(1, j)];
        for (int i = 0; i < cfg.n + 2; ++i) {
          const std::size_t idx = base.index(i, j);
          if (base.active(idx)) base.value[idx] = profile + delta * noise.value[idx];
        }
      }
      const double t = tv(base), t1 = tv_directional(base, 1), t2 = tv_directional(base, 2);
      const double tau = std::max(0.0, t - t2);
      const double bound = std::sqrt(tau * (tau + 2.0 * t2));
      worst = std::min(worst, bound * (1.0 + 1e-12) - t1);
      if (t1 <= 3.0 * tau) ++literal;
      if (tau < smallestTau) {
        smallestTau = tau;
        tv1AtSmallestTau = t1;
      }
    }
    rep.checks.push_back(make_check(
        "model.directional-vanishing", "model-directional-vanishing", worst, cfg.fields,
        {{"worstSlack", worst}, {"smallestTau", smallestTau}, {"tv1AtSmallestTau", tv1AtSmallestTau},
         {"casesWithTv1AtMost3Tau", literal}},
        {{"tv1AtMostSqrtTauTauPlus2Tv2", 0.0}},
        "tv1 <= 3 tau fails when the horizontal part is small relative to the vertical one"));
  }
  // (iii) Poincare inequality for fields vanishing on the left edge.
  {
    double worst = INFINITY;
    int used = 0;
    for (int k = 0; k < cfg.fields; ++k) {
      GridField f = random_bilinear_field(cfg.n, lattice(rng), rng());
      for (int j = 0; j < cfg.n + 2; ++j)
        for (int i = 0; i < cfg.n + 2; ++i) {
          const std::size_t idx = f.index(i, j);
          if (f.active(idx)) f.value[idx] *= std::clamp(f.center(i, j).x, 0.0, 1.0);
        }
      bool vanishes = true;
      for (int j = 1; j <= cfg.n; ++j) vanishes = vanishes && f.value[f.index(0, j)] == 0.0;
      if (!vanishes) continue;
      ++used;
      worst = std::min(worst, tv_directional(f, 1) - f.l1_norm());
    }
    rep.checks.push_back(make_check("model.poincare", "model-poincare", worst, used,
                                    {{"worstSlack", worst}}, {{"slackAtLeast", 0.0}}));
  }
  // (iv) Layered extension of 1_M meets (1 + eps) H^1(M) up to 4 cells.
  {
    SquareDomain sq;
    const GridField grid = make_grid(sq, cfg.giustiN);
    double worst = INFINITY, worstRatio = 0.0;
    for (int k = 0; k < cfg.fields; ++k) {
      const double len = 0.2 + 0.6 * U(rng);
      const double lo = 0.05 + (0.9 - len) * U(rng);
      const BoundaryDatum M{{{lo, lo + len}}, 0.0};
      const GiustiResult g = giusti_extension(sq, M, cfg.epsilon, grid);
      worst = std::min(worst, (1.0 + cfg.epsilon) * len + 4.0 * grid.h - g.w11Norm);
      worstRatio = std::max(worstRatio, g.w11Norm / len);
    }
    rep.checks.push_back(make_check("model.upper-bound", "model-extension-upper-bound", worst,
                                    cfg.fields, {{"worstSlack", worst}, {"worstRatio", worstRatio}},
                                    {{"onePlusEpsilon", 1.0 + cfg.epsilon}, {"slackCells", 4.0}}));
  }
  return rep;
}

GridField arc_window_grid(const RegionDecomposition& regions, double depth, double h) {
  const ConcaveArc& arc = regions.tree().curve();
  const DiscDomain disc = disc_of(arc);
  const double pad = std::max(20.0 * h, 0.02 * arc.eta);
  return make_window_grid(disc, {-pad, -depth - pad, arc.eta + pad, arc.height() + pad}, h);
}

CoareaResult coarea_lower_check(const GridField& w, const RegionDecomposition& regions, int N,
                                double tolerance) {
  bool hasTrace = false;
  for (std::size_t i = 0; i < w.value.size() && !hasTrace; ++i)
    hasTrace = w.kind[i] == CellKind::Ghost && w.value[i] != 0.0;
  if (!hasTrace) throw DomainError("coarea_lower_check: w carries no boundary trace");

  const int rows = w.ny;
  struct Partial {
    CompensatedSum sum;
    std::int64_t cells = 0, undefined = 0;
  };
  std::vector<Partial> parts(static_cast<std::size_t>(rows));
  const auto grad = [&](int i, int j, int di, int dj) {
    const std::size_t f = w.index(i + di, j + dj), b = w.index(i - di, j - dj), c = w.index(i, j);
    const bool fa = w.active(f), ba = w.active(b);
    if (fa && ba) return (w.value[f] - w.value[b]) / (2.0 * w.h);
    if (fa) return (w.value[f] - w.value[c]) / w.h;
    if (ba) return (w.value[c] - w.value[b]) / w.h;
    return 0.0;
  };
  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t b, std::size_t e) {
    for (std::size_t r = b; r < e; ++r) {
      const int j = static_cast<int>(r) + 1;
      Partial& p = parts[r];
      for (int i = 1; i <= w.nx; ++i) {
        if (!w.interior(w.index(i, j))) continue;
        const Point c = w.center(i, j);
        if (regions.classify(c, N).tag == RegionTag::Outside) continue;
        const FieldValue v = regions.v_field(c, N);
        if (!v.defined) {
          ++p.undefined;
          continue;
        }
        ++p.cells;
        p.sum.add(std::abs(grad(i, j, 1, 0) * v.v.x + grad(i, j, 0, 1) * v.v.y));
      }
    }
  });
  CoareaResult res;
  CompensatedSum total;
  for (const auto& p : parts) {
    total.add(p.sum.value());
    res.cells += p.cells;
    res.undefined += p.undefined;
  }
  res.lhs = total.value() * w.h * w.h;
  res.arcSum = measure_bounds(regions.tree(), N).arcSum;
  res.cN = lipschitz_recipe(regions, N).cN;
  res.rhs = res.arcSum / (1.0 + res.cN);
  if (res.lhs < (1.0 - tolerance) * res.rhs) {
    throw VerificationError("coarea lower bound violated",
                            {{"lhs", res.lhs}, {"rhs", res.rhs}, {"tolerance", tolerance}});
  }
  return res;
}

namespace {

ProbeRow row_from(const SolveResult& s, int n, double datumL1) {
  ProbeRow r;
  r.n = n;
  r.h = s.field.h;
  r.tv = s.report.tv;
  r.l1Norm = s.report.l1Norm;
  r.l1Interior = s.report.l1Interior;
  r.datumL1 = datumL1;
  r.gap = r.tv - datumL1;
  r.iterations = s.report.iterations;
  r.converged = s.report.converged;
  return r;
}

}  // namespace

std::vector<ProbeRow> nonattainment_probe_square(const std::vector<int>& sizes, double lo,
                                                 double hi, const SolverConfig& config) {
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) throw DomainError("probe: need 0 <= lo <= hi <= 1");
  SquareDomain sq;
  const BoundaryDatum M = lo < hi ? BoundaryDatum{{{lo, hi}}, 0.0} : BoundaryDatum{};
  std::vector<ProbeRow> rows;
  for (int n : sizes) {
    GridField g = make_grid(sq, n);
    apply_trace(g, sq, M);
    rows.push_back(row_from(least_gradient_solve(g, config), n, M.l1_norm()));
  }
  return rows;
}

std::vector<ProbeRow> nonattainment_probe_disc(const RegionDecomposition& regions, int N,
                                               const std::vector<double>& cellSizes,
                                               const SolverConfig& config) {
  const DiscDomain disc = disc_of(regions.tree().curve());
  const BoundaryDatum K = cantor_datum(regions.tree(), N, disc);
  std::vector<ProbeRow> rows;
  for (double h : cellSizes) {
    GridField g = arc_window_grid(regions, std::max(1e-3, 20.0 * h), h);
    apply_trace(g, disc, K, 0.0);
    rows.push_back(row_from(least_gradient_solve(g, config), 0, K.l1_norm()));
  }
  return rows;
}

namespace {

std::vector<std::size_t> ring_order(const GridField& g) {
  std::vector<std::size_t> ring;
  for (int i = 1; i <= 4; ++i) ring.push_back(g.index(i, 0));
  for (int j = 1; j <= 4; ++j) ring.push_back(g.index(5, j));
  for (int i = 4; i >= 1; --i) ring.push_back(g.index(i, 5));
  for (int j = 4; j >= 1; --j) ring.push_back(g.index(0, j));
  return ring;
}

}  // namespace

OracleCase solve_oracle_case(const std::vector<double>& traces, const SolverConfig& config) {
  if (traces.size() != 16) throw DomainError("solve_oracle_case: need 16 traces");
  SquareDomain sq;
  GridField g = make_grid(sq, 4);
  const auto ring = ring_order(g);
  for (std::size_t k = 0; k < 16; ++k) {
    if (std::abs(traces[k]) != 1.0) throw DomainError("solve_oracle_case: traces must be +-1");
    g.value[ring[k]] = traces[k];
  }
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < g.value.size(); ++i)
    if (g.interior(i)) inner.push_back(i);

  OracleCase out;
  out.traces = traces;
  GridField f = g;
  double best = INFINITY;
  for (std::uint32_t m = 0; m < (1u << 16); ++m) {
    for (std::size_t k = 0; k < inner.size(); ++k) f.value[inner[k]] = (m >> k & 1u) ? 1.0 : -1.0;
    best = std::min(best, tv(f, config.norm));
  }
  out.oracleTv = best;
  const SolveResult s = least_gradient_solve(g, config);
  out.solverTv = s.report.tv;
  out.converged = s.report.converged;
  return out;
}

std::vector<std::vector<double>> random_oracle_traces(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(std::max(count, 0)));
  for (auto& t : out) {
    t.resize(16);
    for (auto& v : t) v = (rng() & 1u) ? 1.0 : -1.0;
  }
  return out;
}

}  // namespace lg
