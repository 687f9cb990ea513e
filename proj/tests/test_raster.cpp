#include <doctest.h>

#include <cmath>
#include <random>

#include "leastgrad/raster.hpp"

using namespace lg;

namespace {

RasterMask random_mask(int w, int h, double fill, std::uint64_t seed) {
  RasterMask m;
  m.width = w;
  m.height = h;
  m.resolution = 0.5;
  m.box = {0.0, 0.0, w * 0.5, h * 0.5};
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution in(fill);
  m.tags.resize(static_cast<std::size_t>(w) * h);
  for (auto& t : m.tags) t = static_cast<std::uint8_t>(in(rng) ? RegionTag::Strip : RegionTag::Outside);
  return m;
}

// Brute force: distance from each inside pixel center to the nearest outside
// pixel center, the window border counting as outside.
double brute(const RasterMask& m, int i, int j) {
  if (!m.inside(i, j)) return 0.0;
  double best = INFINITY;
  for (int b = -1; b <= m.height; ++b)
    for (int a = -1; a <= m.width; ++a) {
      const bool out = a < 0 || b < 0 || a >= m.width || b >= m.height || !m.inside(a, b);
      if (out) best = std::min(best, std::hypot(a - i, b - j));
    }
  return best * m.resolution;
}

}  // namespace

TEST_CASE("distance transform matches brute force") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const RasterMask m = random_mask(23, 17, 0.85, seed);
    const std::vector<double> d = distance_to_outside(m);
    for (int j = 0; j < m.height; ++j)
      for (int i = 0; i < m.width; ++i)
        CHECK(d[static_cast<std::size_t>(j) * m.width + i] == doctest::Approx(brute(m, i, j)).epsilon(1e-12));
  }
}

TEST_CASE("full square mask: distance peaks at the center") {
  RasterMask m = random_mask(9, 9, 1.0, 1);
  const std::vector<double> d = distance_to_outside(m);
  CHECK(d[4 * 9 + 4] == doctest::Approx(5 * 0.5));
  CHECK(d[0] == doctest::Approx(0.5));
}

TEST_CASE("mask text encoding round trip") {
  const RegionDecomposition regions(build_tree(make_circle_arc(0.05), 4));
  const double res = min_chord(regions.tree(), 4) / 4.0;
  const RasterMask m = rasterize(regions, 4, res, rad_window(regions, 4, res));
  CHECK(m.count(RegionTag::Strip) > 0);
  const std::string text = encode_mask(m);
  const RasterMask back = decode_mask(text);
  CHECK(back.tags == m.tags);
  CHECK(back.width == m.width);
  CHECK(encode_mask(back) == text);
  CHECK_THROWS(decode_mask("garbage"));
}

TEST_CASE("inscribed radius shrinks with the level") {
  const RegionDecomposition regions(build_tree(make_circle_arc(0.05), 5));
  const double res = min_chord(regions.tree(), 5) / 8.0;
  double prev = INFINITY;
  for (int N = 2; N <= 5; ++N) {
    const RadEstimate e = rad_estimate(regions, N, res);
    CHECK(e.rad > 0.0);
    CHECK(e.rad < prev);
    CHECK(e.errorBound == doctest::Approx(std::sqrt(2.0) * res));
    prev = e.rad;
  }
}
