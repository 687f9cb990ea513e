#include <doctest.h>

#include <cmath>

#include "leastgrad/cantor.hpp"
#include "leastgrad/errors.hpp"

using namespace lg;

TEST_CASE("level sizes and nesting") {
  const CantorTree tree = build_tree(make_circle_arc(0.05), 6);
  CHECK(tree.depth() == 6);
  for (int N = 0; N <= 6; ++N) CHECK(tree.level(N).size() == (std::size_t{1} << N));
  for (int N = 0; N < 6; ++N) {
    for (const ChordNode& p : tree.level(N)) {
      const auto kids = tree.children(p);
      REQUIRE(kids.has_value());
      const ChordNode& l = *kids->first;
      const ChordNode& r = *kids->second;
      CHECK(l.a == p.a);
      CHECK(r.b == p.b);
      CHECK(l.a < l.b);
      CHECK(l.b < r.a);
      CHECK(r.a < r.b);
      CHECK(tree.parent(l) == &p);
      // Per-node contraction.
      CHECK(l.chord.len <= 2.0 / 3.0 * p.chord.len);
      CHECK(r.chord.len <= 2.0 / 3.0 * p.chord.len);
    }
  }
  CHECK_FALSE(tree.children(tree.level(6).front()).has_value());
}

TEST_CASE("depth zero is the root chord only") {
  const CantorTree tree = build_tree(make_circle_arc(0.05), 0);
  CHECK(tree.depth() == 0);
  CHECK(tree.root().chord.len == doctest::Approx(0.05));
  CHECK(tree.stats(0).c == tree.stats(0).mu);
}

TEST_CASE("fatness product") {
  double p = 1.0;
  for (int k = 1; k <= 11; ++k) p *= 1.0 - std::pow(2.0 / 3.0, k);
  CHECK(fatness_product(12) == doctest::Approx(p).epsilon(1e-14));
  CHECK(fatness_product(1) == 1.0);
  CHECK(fatness_product(40) > 0.0);
}

TEST_CASE("measured sums respect the level bounds") {
  const CantorTree tree = build_tree(make_circle_arc(0.05), 10);
  for (int N = 0; N < 10; ++N) {
    const LevelStats& s = tree.stats(N);
    const LevelStats& t = tree.stats(N + 1);
    CHECK(t.mu <= std::pow(2.0 / 3.0, N + 1) * tree.stats(0).mu * (1.0 + 1e-12));
    CHECK(t.c >= s.c * (1.0 - std::pow(2.0 / 3.0, N)));
    CHECK(t.c < s.c);
    const MeasureBounds m = measure_bounds(tree, N);
    CHECK(m.arcSum >= s.c);
  }
}

TEST_CASE("export round trip is byte identical") {
  const CantorTree tree = build_tree(make_circle_arc(0.05), 5);
  const std::string text = export_tree(tree);
  const CantorTree back = import_tree(text);
  CHECK(export_tree(back) == text);
  CHECK(back.depth() == 5);
  CHECK(back.level(5)[7].a == tree.level(5)[7].a);
}

TEST_CASE("import rejects malformed input") {
  CHECK_THROWS(import_tree(""));
  CHECK_THROWS(import_tree("not a tree\n"));
  const std::string text = export_tree(build_tree(make_circle_arc(0.05), 2));
  // Drop the last node line.
  std::string truncated = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  CHECK_THROWS(import_tree(truncated));
}

TEST_CASE("construction refusals") {
  CHECK_THROWS_AS(build_tree(make_circle_arc(0.05), -1), RefusedError);
  CHECK_THROWS_AS(build_tree(make_circle_arc(0.05), kMaxDepth + 1), RefusedError);
  CHECK_THROWS_AS(build_tree(make_parabola_arc(0.05, 1.0), 2), RefusedError);
}

TEST_CASE("a shallow parabola satisfies the hypotheses and builds") {
  // The separation threshold needs eta below about 0.0045 when f'' = -2.
  const ConcaveArc arc = make_parabola_arc(0.002, 1.0);
  REQUIRE(hypotheses_hold(arc));
  const CantorTree tree = build_tree(arc, 8);
  for (int N = 0; N < 8; ++N)
    for (const ChordNode& p : tree.level(N)) {
      const auto kids = tree.children(p);
      CHECK(kids->first->chord.len <= 2.0 / 3.0 * p.chord.len);
      CHECK(kids->second->chord.len <= 2.0 / 3.0 * p.chord.len);
    }
  CHECK(tree.stats(8).c > tree.stats(1).c * fatness_product(8));
}
