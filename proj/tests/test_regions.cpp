#include <doctest.h>

#include <cmath>
#include <random>

#include "leastgrad/regions.hpp"

using namespace lg;

namespace {

const RegionDecomposition& regions8() {
  static const RegionDecomposition r(build_tree(make_circle_arc(0.05), 8));
  return r;
}

Triangle make_tri(Point a, Point b, Point c) {
  Triangle t;
  t.ccw = {a, b, c};
  t.rightAngle = a;
  t.outer = b;
  t.foot = c;
  return t;
}

}  // namespace

TEST_CASE("triangles are right and short") {
  const RegionDecomposition& r = regions8();
  for (int N = 1; N <= 6; ++N) {
    const auto& tris = r.triangles(N);
    CHECK(tris.size() == (std::size_t{1} << N));
    for (const Triangle& t : tris) {
      const Vec2 u = t.outer - t.rightAngle, v = t.foot - t.rightAngle;
      CHECK(std::abs(dot(u, v)) / (norm(u) * norm(v)) < 1e-9);
      CHECK(t.hypLen() < t.parentLen / 2.0);
    }
    CHECK(check_disjoint(tris).disjoint);
  }
}

TEST_CASE("exact disjointness on touching and separated triangles") {
  const Triangle s = make_tri({0, 0}, {1, 0}, {0, 1});
  CHECK_FALSE(triangles_disjoint(s, make_tri({1, 0}, {2, 0}, {1, 1})));      // shared vertex
  CHECK_FALSE(triangles_disjoint(s, make_tri({0.5, 0.5}, {1, 1}, {0, 1})));  // shared edge point
  CHECK(triangles_disjoint(s, make_tri({0.5 + 1e-15, 0.5 + 1e-15}, {2, 2}, {0.6, 2})));
  CHECK_FALSE(triangles_disjoint(s, make_tri({0.1, 0.1}, {0.2, 0.1}, {0.1, 0.2})));  // nested
}

TEST_CASE("classification of simple points") {
  const RegionDecomposition& r = regions8();
  const CantorTree& tree = r.tree();
  // Just below the middle of each leaf arc lies inside its cap.
  for (int N : {1, 4, 8}) {
    for (const ChordNode& n : tree.level(N)) {
      const double x = 0.5 * (n.a + n.b);
      const Point p{x, tree.curve().f(x) - 1e-12};
      const Classification c = r.classify(p, N);
      CHECK(c.tag == RegionTag::Cap);
      CHECK(c.component == n.index);
    }
  }
  // Above the arc is outside; so is a point beyond the endpoints.
  CHECK(r.classify({0.025, 0.01}, 3).tag == RegionTag::Outside);
  CHECK(r.classify({-0.01, -0.001}, 3).tag == RegionTag::Outside);
  // Level zero: the cap of the root plus the strip below it.
  CHECK(r.classify({0.025, -0.01}, 0).tag == RegionTag::Strip);
}

TEST_CASE("psi lands on the leaf arc and projection field is unit") {
  const RegionDecomposition& r = regions8();
  const int N = 5;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(0.0, 0.05), uy(-0.003, 0.0003);
  int hits = 0;
  for (int s = 0; s < 4000; ++s) {
    const Point p{ux(rng), uy(rng)};
    const Classification c = r.classify(p, N);
    if (c.tag == RegionTag::Outside) continue;
    const FieldValue v = r.v_field(p, N);
    if (v.defined) CHECK(std::abs(norm(v.v) - 1.0) < 1e-12);
    if (c.tag != RegionTag::Triangle && c.tag != RegionTag::Strip) continue;
    ++hits;
    const Point q = r.psi(p, N);
    const ChordNode& n = r.tree().node(N, c.component);
    CHECK(std::abs(q.y - r.tree().curve().f(q.x)) < 1e-14);
    CHECK(q.x >= n.a - 1e-15);
    CHECK(q.x <= n.b + 1e-15);
    const double s_arc = r.pi_arc_coordinate(p, N);
    CHECK(s_arc >= arc_length(r.tree().curve(), 0.0, n.a) - 1e-12);
    CHECK(s_arc <= arc_length(r.tree().curve(), 0.0, n.b) + 1e-12);
  }
  CHECK(hits > 100);
}

TEST_CASE("Lipschitz probe stays within the recipe constant") {
  const RegionDecomposition& r = regions8();
  double prev = INFINITY;
  for (int N = 2; N <= 5; ++N) {
    const LipschitzProbe p = lipschitz_probe(r, N, 2000, 11);
    CHECK(p.maxRatio <= 1.0 + p.recipe.cN);
    CHECK(p.maxRatio >= 1.0 - 1e-9);
    CHECK(p.maxRatio <= prev);
    prev = p.maxRatio;
  }
}
