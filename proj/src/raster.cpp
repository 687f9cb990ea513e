#include "leastgrad/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "leastgrad/errors.hpp"
#include "leastgrad/parallel.hpp"

namespace lg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One-dimensional squared distance transform of sampled function f
// (lower envelope of parabolas).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
            std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    if (f[v[k]] == kInf) {
      v[k] = q;
      continue;
    }
    double s;
    while (true) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
      if (s <= z[k] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const int p = v[k];
    d[q] = f[p] == kInf ? kInf : (double(q) - p) * (double(q) - p) + f[p];
  }
}

}  // namespace

std::int64_t RasterMask::count(RegionTag tag) const {
  return std::count(tags.begin(), tags.end(), static_cast<std::uint8_t>(tag));
}

BoundingBox rad_window(const RegionDecomposition& regions, int N, double resolution) {
  const ConcaveArc& arc = regions.tree().curve();
  double widest = 0.0;
  for (const auto& n : regions.tree().level(N)) {
    widest = std::max(widest, regions.root_interval(N, n.index).length());
  }
  const double pad = 8.0 * resolution;
  return {-pad, -(2.0 * widest + pad), arc.eta + pad, arc.height() + pad};
}

namespace {

RasterMask raster_with(const RegionDecomposition& regions, int N, double resolution,
                       const BoundingBox& box, std::int64_t component) {
  if (!(resolution > 0.0)) throw DomainError("rasterize: resolution must be positive");
  RasterMask m;
  m.level = N;
  m.resolution = resolution;
  m.box = box;
  m.width = static_cast<int>(std::ceil((box.x1 - box.x0) / resolution));
  m.height = static_cast<int>(std::ceil((box.y1 - box.y0) / resolution));
  m.box.x1 = box.x0 + m.width * resolution;
  m.box.y1 = box.y0 + m.height * resolution;
  m.tags.assign(static_cast<std::size_t>(m.width) * m.height,
                static_cast<std::uint8_t>(RegionTag::Outside));
  const auto fill_rows = [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      for (int i = 0; i < m.width; ++i) {
        const auto c = regions.classify(m.center(i, static_cast<int>(j)), N);
        if (component == 0 || c.component == component) {
          m.tags[j * m.width + i] = static_cast<std::uint8_t>(c.tag);
        }
      }
    }
  };
  if (component == 0) {
    parallel_for(static_cast<std::size_t>(m.height), fill_rows);
  } else {
    fill_rows(0, static_cast<std::size_t>(m.height));
  }
  return m;
}

}  // namespace

RasterMask rasterize(const RegionDecomposition& regions, int N, double resolution,
                     const BoundingBox& box) {
  return raster_with(regions, N, resolution, box, 0);
}

BoundingBox component_window(const RegionDecomposition& regions, int N, std::int64_t k,
                             double resolution) {
  const ChordNode& n = regions.tree().node(N, k);
  const Interval J = regions.root_interval(N, k);
  double x0 = std::min(J.lo, n.a), x1 = std::max(J.hi, n.b);
  if (N >= 1) {
    for (const auto& p : regions.triangles(N)[static_cast<std::size_t>(k - 1)].ccw) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
    }
  }
  const double pad = 8.0 * resolution;
  return {x0 - pad, -(2.0 * J.length() + pad), x1 + pad,
          regions.tree().curve().height() + pad};
}

RasterMask rasterize_component(const RegionDecomposition& regions, int N, std::int64_t k,
                               double resolution) {
  return raster_with(regions, N, resolution, component_window(regions, N, k, resolution), k);
}

std::vector<double> distance_to_outside(const RasterMask& mask) {
  // A ring of Outside pixels surrounds the window.
  const int W = mask.width + 2, H = mask.height + 2;
  std::vector<double> g(static_cast<std::size_t>(W) * H, 0.0);
  for (int j = 0; j < mask.height; ++j)
    for (int i = 0; i < mask.width; ++i)
      if (mask.inside(i, j)) g[static_cast<std::size_t>(j + 1) * W + i + 1] = kInf;

  parallel_for(static_cast<std::size_t>(W), [&](std::size_t b, std::size_t e) {
    std::vector<double> f(H), d(H), z(H + 1);
    std::vector<int> v(H);
    for (std::size_t i = b; i < e; ++i) {
      for (int j = 0; j < H; ++j) f[j] = g[static_cast<std::size_t>(j) * W + i];
      edt_1d(f, d, v, z);
      for (int j = 0; j < H; ++j) g[static_cast<std::size_t>(j) * W + i] = d[j];
    }
  });
  parallel_for(static_cast<std::size_t>(H), [&](std::size_t b, std::size_t e) {
    std::vector<double> f(W), d(W), z(W + 1);
    std::vector<int> v(W);
    for (std::size_t j = b; j < e; ++j) {
      for (int i = 0; i < W; ++i) f[i] = g[j * W + i];
      edt_1d(f, d, v, z);
      for (int i = 0; i < W; ++i) g[j * W + i] = d[i];
    }
  });

  std::vector<double> out(static_cast<std::size_t>(mask.width) * mask.height);
  for (int j = 0; j < mask.height; ++j)
    for (int i = 0; i < mask.width; ++i)
      out[static_cast<std::size_t>(j) * mask.width + i] =
          std::sqrt(g[static_cast<std::size_t>(j + 1) * W + i + 1]) * mask.resolution;
  return out;
}

double min_chord(const CantorTree& tree, int N) {
  double best = kInf;
  for (const auto& n : tree.level(N)) best = std::min(best, n.chord.len);
  return best;
}

RadEstimate rad_estimate(const RegionDecomposition& regions, int N, double resolution) {
  const double limit = min_chord(regions.tree(), N) / 8.0;
  if (!(resolution > 0.0) || resolution > limit) {
    throw RefusedError("rad_estimate: resolution " + std::to_string(resolution) +
                       " coarser than min chord / 8 = " + std::to_string(limit));
  }
  const auto& nodes = regions.tree().level(N);
  struct Partial {
    double best = 0.0, strip = 0.0, bounded = 0.0;
    int width = 0, height = 0;
  };
  std::vector<Partial> parts(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const RasterMask mask = rasterize_component(regions, N, nodes[c].index, resolution);
      const std::vector<double> d = distance_to_outside(mask);
      Partial& p = parts[c];
      p.width = mask.width;
      p.height = mask.height;
      for (std::size_t idx = 0; idx < d.size(); ++idx) {
        const auto tag = static_cast<RegionTag>(mask.tags[idx]);
        if (tag == RegionTag::Outside) continue;
        p.best = std::max(p.best, d[idx]);
        if (tag == RegionTag::Strip) p.strip = std::max(p.strip, d[idx]);
        else p.bounded = std::max(p.bounded, d[idx]);
      }
    }
  });
  RadEstimate r;
  r.level = N;
  r.resolution = resolution;
  double best = 0.0, strip = 0.0, bounded = 0.0;
  for (const auto& p : parts) {
    best = std::max(best, p.best);
    strip = std::max(strip, p.strip);
    bounded = std::max(bounded, p.bounded);
    r.width = std::max(r.width, p.width);
    r.height = std::max(r.height, p.height);
  }
  // Pixel-center distances overestimate the distance to the continuous
  // complement by at most half a pixel on average.
  const auto shrink = [&](double v) { return std::max(0.0, v - 0.5 * resolution); };
  r.rad = shrink(best);
  r.radStrip = shrink(strip);
  r.radBounded = shrink(bounded);
  r.errorBound = std::sqrt(2.0) * resolution;
  return r;
}

std::string encode_mask(const RasterMask& m) {
  std::ostringstream os;
  os.precision(17);
  os << "leastgrad-mask 1\n"
     << "level " << m.level << "\n"
     << "resolution " << m.resolution << "\n"
     << "bbox " << m.box.x0 << ' ' << m.box.y0 << ' ' << m.box.x1 << ' ' << m.box.y1 << "\n"
     << "size " << m.width << ' ' << m.height << "\n";
  for (int j = 0; j < m.height; ++j) {
    int i = 0;
    bool first = true;
    while (i < m.width) {
      const auto tag = m.tags[static_cast<std::size_t>(j) * m.width + i];
      int run = 1;
      while (i + run < m.width && m.tags[static_cast<std::size_t>(j) * m.width + i + run] == tag) ++run;
      os << (first ? "" : " ") << int(tag) << '*' << run;
      first = false;
      i += run;
    }
    os << '\n';
  }
  return os.str();
}

RasterMask decode_mask(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int version = 0;
  RasterMask m;
  const auto expect = [&](const char* key) {
    if (!(is >> word) || word != key) throw DomainError(std::string("decode_mask: expected ") + key);
  };
  expect("leastgrad-mask");
  is >> version;
  if (version != 1) throw DomainError("decode_mask: unsupported version");
  expect("level");
  is >> m.level;
  expect("resolution");
  is >> m.resolution;
  expect("bbox");
  is >> m.box.x0 >> m.box.y0 >> m.box.x1 >> m.box.y1;
  expect("size");
  is >> m.width >> m.height;
  if (!is || m.width < 0 || m.height < 0) throw DomainError("decode_mask: bad header");
  m.tags.reserve(static_cast<std::size_t>(m.width) * m.height);
  std::string line;
  std::getline(is, line);
  for (int j = 0; j < m.height; ++j) {
    if (!std::getline(is, line)) throw DomainError("decode_mask: missing rows");
    std::istringstream row(line);
    int filled = 0, tag = 0, run = 0;
    char star = 0;
    while (row >> tag >> star >> run) {
      if (star != '*' || tag < 0 || tag > 3 || run <= 0) throw DomainError("decode_mask: bad run");
      m.tags.insert(m.tags.end(), static_cast<std::size_t>(run), static_cast<std::uint8_t>(tag));
      filled += run;
    }
    if (filled != m.width) throw DomainError("decode_mask: row length mismatch");
  }
  return m;
}

}  // namespace lg
