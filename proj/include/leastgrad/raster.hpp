#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leastgrad/regions.hpp"

namespace lg {

struct BoundingBox {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

// Region tags sampled at pixel centers. Row 0 is the bottom row; pixel (i, j)
// has center (x0 + (i + 1/2) res, y0 + (j + 1/2) res).
struct RasterMask {
  int level = 0;
  double resolution = 0.0;
  BoundingBox box;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> tags;  // RegionTag values, row-major

  RegionTag at(int i, int j) const {
    return static_cast<RegionTag>(tags[static_cast<std::size_t>(j) * width + i]);
  }
  bool inside(int i, int j) const { return at(i, j) != RegionTag::Outside; }
  Point center(int i, int j) const {
    return {box.x0 + (i + 0.5) * resolution, box.y0 + (j + 0.5) * resolution};
  }
  std::int64_t count(RegionTag tag) const;
};

// Window that holds every inscribed disc of B_N: the arc with a margin, and
// strips cut at twice the widest root interval. Deeper strip parts are
// narrower than the cut depth and cannot hold a larger disc.
BoundingBox rad_window(const RegionDecomposition& regions, int N, double resolution);

RasterMask rasterize(const RegionDecomposition& regions, int N, double resolution,
                     const BoundingBox& box);

// Window around component B_k^N (cap, triangle, and strip cut as above).
BoundingBox component_window(const RegionDecomposition& regions, int N, std::int64_t k,
                             double resolution);
// Raster of B_k^N alone; pixels of other components are tagged Outside.
RasterMask rasterize_component(const RegionDecomposition& regions, int N, std::int64_t k,
                               double resolution);

// Euclidean distance from each pixel center to the nearest Outside pixel
// center (exact squared-distance transform).
std::vector<double> distance_to_outside(const RasterMask& mask);

struct RadEstimate {
  int level = 0;
  double resolution = 0.0;
  double rad = 0.0;        // inscribed radius of B_N
  double radStrip = 0.0;   // largest disc centered in a strip pixel
  double radBounded = 0.0; // largest disc centered in a cap or triangle pixel
  double errorBound = 0.0; // |rad - true rad| <= errorBound
  int width = 0;
  int height = 0;
};

// Smallest chord length at level N.
double min_chord(const CantorTree& tree, int N);

// Components are closed and pairwise at positive distance, so an open disc in
// B_N lies in a single B_k^N; each component is rastered on its own, which
// keeps sub-pixel gaps between neighbouring strips. Refuses when
// resolution > min_chord(N) / 8.
RadEstimate rad_estimate(const RegionDecomposition& regions, int N, double resolution);

// Text snapshot: header (level, resolution, bounding box, size) then one line
// of runs "tag*length" per row.
std::string encode_mask(const RasterMask& mask);
RasterMask decode_mask(const std::string& text);

}  // namespace lg
