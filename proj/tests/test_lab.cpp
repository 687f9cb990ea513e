#include <doctest.h>

#include <cmath>

#include "leastgrad/errors.hpp"
#include "leastgrad/giusti.hpp"
#include "leastgrad/lab.hpp"

using namespace lg;

TEST_CASE("model suite on a reduced configuration") {
  SquareSuiteConfig cfg;
  cfg.fields = 10;
  cfg.n = 32;
  const VerificationReport r = model_square_suite(cfg);
  CHECK(r.checks.size() == 4);
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.pass);
    CHECK_FALSE(c.anchor.empty());
  }
}

TEST_CASE("random fields are reproducible") {
  const GridField a = random_bilinear_field(32, 4, 17);
  const GridField b = random_bilinear_field(32, 4, 17);
  const GridField c = random_bilinear_field(32, 4, 18);
  CHECK(a.value == b.value);
  CHECK(a.value != c.value);
}

TEST_CASE("coarea check needs a trace") {
  const RegionDecomposition regions(build_tree(make_circle_arc(0.05), 4));
  GridField w = arc_window_grid(regions, 1e-3, 2e-4);
  CHECK_THROWS_AS(coarea_lower_check(w, regions, 4), DomainError);
}

TEST_CASE("window grid covers the arc") {
  const RegionDecomposition regions(build_tree(make_circle_arc(0.05), 3));
  const GridField w = arc_window_grid(regions, 1e-3, 1e-4);
  CHECK(w.box.x0 < 0.0);
  CHECK(w.box.x1 > 0.05);
  CHECK(w.box.y1 > regions.tree().curve().height());
  CHECK(w.count(CellKind::Ghost) > 0);
  CHECK(w.count(CellKind::Cut) > 0);
}

TEST_CASE("square probe rows are ordered by size") {
  SolverConfig cfg;
  cfg.tolerance = 1e-4;
  const auto rows = nonattainment_probe_square({16, 32}, 0.25, 0.75, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 16);
  CHECK(rows[1].h == doctest::Approx(1.0 / 32));
  CHECK(rows[1].tv < rows[0].tv);
  CHECK(rows[1].l1Norm < rows[0].l1Norm);
  CHECK(rows[0].datumL1 == doctest::Approx(0.5));
}

TEST_CASE("coarea sum is positively homogeneous and extension of zero is zero") {
  const ConcaveArc arc = make_circle_arc(0.05);
  const RegionDecomposition regions(build_tree(arc, 3));
  const DiscDomain disc = disc_of(arc);
  const double eps = 0.05;
  const GridField g = arc_window_grid(regions, 0.25 * eps * eps, 4e-5);
  const GiustiResult w = giusti_extension(disc, cantor_datum(regions.tree(), 3, disc), eps, g);
  GridField w2 = w.field;
  for (auto& v : w2.value) v *= 2.0;
  const CoareaResult a = coarea_lower_check(w.field, regions, 3, 0.5);
  const CoareaResult b = coarea_lower_check(w2, regions, 3, 0.5);
  CHECK(b.lhs == doctest::Approx(2.0 * a.lhs).epsilon(1e-12));
  CHECK(b.rhs == a.rhs);
  CHECK(a.cells > 0);

  const GiustiResult z = giusti_extension(disc, BoundaryDatum{}, eps, g);
  for (double v : z.field.value) CHECK(v == 0.0);
  CHECK(z.w11Norm == 0.0);
}
