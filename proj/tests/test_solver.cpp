#include <doctest.h>

#include <cmath>
#include <random>

#include "leastgrad/errors.hpp"
#include "leastgrad/giusti.hpp"
#include "leastgrad/lab.hpp"
#include "leastgrad/solver.hpp"

using namespace lg;

TEST_CASE("zero datum gives the zero minimizer") {
  GridField g = make_grid(SquareDomain(), 16);
  apply_trace(g, SquareDomain(), {}, 0.0);
  const SolveResult r = least_gradient_solve(g, {});
  CHECK(r.report.tv == 0.0);
  CHECK(r.report.converged);
}

TEST_CASE("constant datum is reproduced") {
  GridField g = make_grid(SquareDomain(), 16);
  apply_trace(g, SquareDomain(), BoundaryDatum{{{0.0, 4.0}}, 0.0}, 0.0);
  const SolveResult r = least_gradient_solve(g, {});
  CHECK(r.report.tv < 1e-6);
  for (std::size_t i = 0; i < g.value.size(); ++i)
    if (g.interior(i)) CHECK(r.field.value[i] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("solver beats random feasible competitors") {
  GridField g = make_grid(SquareDomain(), 12);
  apply_trace(g, SquareDomain(), BoundaryDatum{{{0.3, 1.6}}, 0.0}, 0.0);
  SolverConfig cfg;
  cfg.tolerance = 1e-6;
  cfg.maxIter = 50000;
  const SolveResult r = least_gradient_solve(g, cfg);
  CHECK(r.report.converged);
  // Boundary values are kept and interior values stay in their range.
  for (std::size_t i = 0; i < g.value.size(); ++i) {
    if (g.kind[i] == CellKind::Ghost) CHECK(r.field.value[i] == g.value[i]);
    if (g.interior(i)) {
      CHECK(r.field.value[i] >= 0.0);
      CHECK(r.field.value[i] <= 1.0);
    }
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    GridField c = r.field;
    for (std::size_t i = 0; i < c.value.size(); ++i)
      if (c.interior(i)) c.value[i] = trial % 2 ? std::round(u(rng)) : u(rng);
    CHECK(tv(c) >= r.report.tv - 1e-5);
    GridField p = r.field;
    for (std::size_t i = 0; i < p.value.size(); ++i)
      if (p.interior(i)) p.value[i] = std::clamp(p.value[i] + 0.05 * (u(rng) - 0.5), 0.0, 1.0);
    CHECK(tv(p) >= r.report.tv - 1e-5);
  }
}

TEST_CASE("energy checkpoints never increase") {
  GridField g = make_grid(DiscDomain({0, 0}, 1.0), 48);
  apply_trace(g, DiscDomain({0, 0}, 1.0), disc_arc_datum(0.6), 0.0);
  SolverConfig cfg;
  cfg.checkpointEvery = 10;
  cfg.maxIter = 2000;
  const SolveResult r = least_gradient_solve(g, cfg);
  REQUIRE(r.report.checkpoints.size() > 2);
  for (std::size_t i = 1; i < r.report.checkpoints.size(); ++i)
    CHECK(r.report.checkpoints[i].energy <= r.report.checkpoints[i - 1].energy);
  // Coarse disc: the chord length 2 y0 within grid error.
  CHECK(r.report.tv == doctest::Approx(1.2).epsilon(0.08));
}

TEST_CASE("anisotropic tv is the sum of the directional parts") {
  GridField g = make_grid(DiscDomain({0, 0}, 1.0), 30);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  for (auto& v : g.value) v = nd(rng);
  CHECK(tv(g, TvNorm::Anisotropic) ==
        doctest::Approx(tv_directional(g, 1) + tv_directional(g, 2)).epsilon(1e-12));
  CHECK(tv(g) <= tv(g, TvNorm::Anisotropic));
}

TEST_CASE("anisotropic oracle cases: thresholding is exact") {
  SolverConfig cfg;
  cfg.tolerance = 1e-8;
  cfg.maxIter = 200000;
  cfg.norm = TvNorm::Anisotropic;
  for (const auto& traces : random_oracle_traces(20, 8)) {
    const OracleCase c = solve_oracle_case(traces, cfg);
    CHECK(c.converged);
    CHECK(c.solverTv == doctest::Approx(c.oracleTv).epsilon(1e-6));
  }
}

TEST_CASE("isotropic oracle cases: continuous minimum never exceeds the binary one") {
  SolverConfig cfg;
  cfg.tolerance = 1e-7;
  cfg.maxIter = 100000;
  for (const auto& traces : random_oracle_traces(20, 4)) {
    const OracleCase c = solve_oracle_case(traces, cfg);
    CHECK(c.converged);
    CHECK(c.solverTv <= c.oracleTv + 1e-6);
  }
  // A straight interface is already optimal among binary fields.
  std::vector<double> split(16, -1.0);
  for (int k = 0; k < 16; ++k) split[k] = (k < 2 || k >= 10) ? 1.0 : -1.0;
  const OracleCase s = solve_oracle_case(split, cfg);
  CHECK(s.solverTv == doctest::Approx(s.oracleTv).epsilon(1e-6));
}

TEST_CASE("extension argument checks") {
  const DiscDomain d({0, 0}, 1.0);
  GridField g = make_grid(d, 64);
  CHECK_THROWS_AS(giusti_extension(d, disc_arc_datum(0.6), 0.0, g), DomainError);
  CHECK_THROWS_AS(giusti_extension(d, disc_arc_datum(0.6), 0.5, g), DomainError);
  CHECK_THROWS_AS(giusti_extension(d, disc_arc_datum(0.6), 0.1, g), RefusedError);
}

TEST_CASE("extension carries the trace and respects the norm bound") {
  const DiscDomain d({0, 0}, 1.0);
  GridField g = make_grid(d, 512);
  const GiustiResult r = giusti_extension(d, disc_arc_datum(0.6), 0.2, g);
  CHECK(r.w11Norm <= 1.25 * r.datumL1);
  CHECK(r.w11Norm >= 0.95 * r.datumL1);
  CHECK(r.t1 < r.t0);
  for (std::size_t i = 0; i < r.field.value.size(); ++i) {
    CHECK(r.field.value[i] >= 0.0);
    CHECK(r.field.value[i] <= 1.0);
  }
}
