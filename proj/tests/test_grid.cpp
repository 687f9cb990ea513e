#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "leastgrad/errors.hpp"
#include "leastgrad/grid.hpp"

using namespace lg;

namespace {

void fill_linear(GridField& g, double a, double b) {
  for (int j = 0; j < g.ny + 2; ++j)
    for (int i = 0; i < g.nx + 2; ++i) {
      const std::size_t idx = g.index(i, j);
      if (g.active(idx)) g.value[idx] = a * g.center(i, j).x + b * g.center(i, j).y;
    }
}

}  // namespace

TEST_CASE("square grid layout") {
  const GridField g = make_grid(SquareDomain(), 16);
  CHECK(g.count(CellKind::Interior) == 256);
  CHECK(g.count(CellKind::Ghost) == 64);
  CHECK(g.count(CellKind::Cut) == 0);
  CHECK(g.h == doctest::Approx(1.0 / 16));
}

TEST_CASE("tv of a linear ramp on the square") {
  // Interior cells give |grad| exactly; the left and bottom ghost rows add
  // (2n - 1) h^2 for u = x since corner cells are inactive.
  for (int n : {4, 16, 64}) {
    GridField g = make_grid(SquareDomain(), n);
    fill_linear(g, 1.0, 0.0);
    const double expect = 1.0 + (2.0 * n - 1.0) / (static_cast<double>(n) * n);
    CHECK(tv(g) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(tv_directional(g, 1) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(tv_directional(g, 2) == doctest::Approx(0.0));
    fill_linear(g, 0.0, 1.0);
    CHECK(tv(g) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("tv is a seminorm") {
  GridField g = make_grid(DiscDomain({0, 0}, 1.0), 40);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (auto& v : g.value) v = nd(rng);
  GridField h2 = g, c = g;
  for (std::size_t i = 0; i < g.value.size(); ++i) {
    h2.value[i] = -3.0 * g.value[i];
    c.value[i] = g.value[i] + 7.0;
  }
  CHECK(tv(h2) == doctest::Approx(3.0 * tv(g)).epsilon(1e-12));
  CHECK(tv(c) == doctest::Approx(tv(g)).epsilon(1e-10));
  CHECK_THROWS_AS(tv_directional(g, 3), DomainError);
}

TEST_CASE("disc boundary parametrization") {
  const DiscDomain d({0.5, -0.2}, 2.0);
  const Point q = d.project({3.0, 5.0});
  CHECK(std::hypot(q.x - 0.5, q.y + 0.2) == doctest::Approx(2.0));
  const double s = d.param(d.project({0.5, 10.0}));
  CHECK(s == doctest::Approx(2.0 * M_PI / 2.0));
  CHECK(d.inner_distance({0.5, -0.2}) == doctest::Approx(2.0));
  CHECK(d.contains({0.5, 1.7}));
  CHECK_FALSE(d.contains({0.5, 1.9}));
}

TEST_CASE("square boundary parametrization runs counter-clockwise") {
  const SquareDomain s;
  CHECK(s.param({0.25, 0.0}) == doctest::Approx(0.25));
  CHECK(s.param({1.0, 0.5}) == doctest::Approx(1.5));
  CHECK(s.param({0.5, 1.0}) == doctest::Approx(2.5));
  CHECK(s.param({0.0, 0.5}) == doctest::Approx(3.5));
}

TEST_CASE("boundary datum values and norm") {
  const BoundaryDatum d = disc_arc_datum(0.6);
  CHECK(d.l1_norm() == doctest::Approx(2.0 * std::asin(0.6)));
  CHECK(d.value(0.0) == 1.0);
  CHECK(d.value(1.0) == 0.0);
  const BoundaryDatum m = d.mollified(0.1);
  CHECK(m.value(std::asin(0.6)) == doctest::Approx(0.5));
  CHECK(m.max_slope() == doctest::Approx(10.0));
  BoundaryDatum two{{{0.0, 1.0}, {0.5, 2.0}}, 0.0};
  CHECK(two.value(0.75) == 1.0);  // overlaps clamp at one
}

TEST_CASE("field binary round trip") {
  GridField g = make_grid(DiscDomain({0, 0}, 1.0), 21);
  apply_trace(g, DiscDomain({0, 0}, 1.0), disc_arc_datum(0.5), 0.0);
  const auto path = std::filesystem::temp_directory_path() / "leastgrad_field_test.lgf";
  write_field_binary(g, path.string());
  const GridField back = read_field_binary(path.string());
  std::filesystem::remove(path);
  CHECK(back.nx == g.nx);
  CHECK(back.h == g.h);
  CHECK(back.kind == g.kind);
  CHECK(back.value == g.value);
}
