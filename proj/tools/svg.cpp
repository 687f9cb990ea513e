#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lgcli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double x0, yTop, scale, exaggeration, margin;
  double X(double x) const { return margin + (x - x0) * scale; }
  double Y(double y) const { return margin + (yTop - y) * scale * exaggeration; }
};

std::string arc_path(const lg::ConcaveArc& arc, const View& v, double a, double b, int samples) {
  std::ostringstream os;
  for (int i = 0; i <= samples; ++i) {
    const double x = a + (b - a) * i / samples;
    os << (i ? " L" : "M") << fmt(v.X(x)) << ' ' << fmt(v.Y(arc.f(x)));
  }
  return os.str();
}

std::string line(const View& v, lg::Point p, lg::Point q, const char* cls) {
  return "<line class=\"" + std::string(cls) + "\" x1=\"" + fmt(v.X(p.x)) + "\" y1=\"" +
         fmt(v.Y(p.y)) + "\" x2=\"" + fmt(v.X(q.x)) + "\" y2=\"" + fmt(v.Y(q.y)) + "\"/>\n";
}

}  // namespace

std::string tree_svg(const lg::RegionDecomposition& regions) {
  const lg::CantorTree& tree = regions.tree();
  const lg::ConcaveArc& arc = tree.curve();
  const double width = 900.0, margin = 30.0;
  const double scale = width / arc.eta;
  const double height = arc.height() > 0.0 ? arc.height() : arc.eta;
  const double exaggeration = std::max(1.0, 0.35 * arc.eta / height);
  const View v{0.0, height, scale, exaggeration, margin};
  const double svgH = 2 * margin + height * scale * exaggeration + 20.0;
  const int D = tree.depth();

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width + 2 * margin)
     << "\" height=\"" << fmt(svgH) << "\">\n"
     << "<title>depth " << D << ", vertical scale x" << fmt(exaggeration) << "</title>\n"
     << "<style>.arc{fill:none;stroke:#999;stroke-width:1}"
        ".leaf-arc{fill:none;stroke:#c0392b;stroke-width:3}"
        ".chord{stroke:#2c3e50;stroke-width:0.8}"
        ".middle{stroke:#2c3e50;stroke-width:0.8;stroke-dasharray:4 3}"
        ".triangle{fill:#3498db;fill-opacity:0.35;stroke:#2980b9;stroke-width:0.8}</style>\n";
  os << "<path class=\"arc\" d=\"" << arc_path(arc, v, 0.0, arc.eta, 400) << "\"/>\n";
  for (int N = 0; N <= D; ++N) {
    for (const auto& n : tree.level(N)) os << line(v, n.chord.pa, n.chord.pb, "chord");
  }
  for (int N = 0; N < D; ++N) {
    for (const auto& n : tree.level(N)) {
      const auto kids = tree.children(n);
      os << line(v, kids->first->chord.pb, kids->second->chord.pa, "middle");
    }
  }
  if (D >= 1) {
    for (const auto& n : tree.level(D)) {
      os << "<path class=\"leaf-arc\" d=\"" << arc_path(arc, v, n.a, n.b, 40) << "\"/>\n";
    }
    for (const auto& t : regions.triangles(D)) {
      os << "<polygon class=\"triangle\" points=\"";
      for (std::size_t i = 0; i < t.ccw.size(); ++i) {
        os << (i ? " " : "") << fmt(v.X(t.ccw[i].x)) << ',' << fmt(v.Y(t.ccw[i].y));
      }
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string field_svg(const lg::GridField& f, int bands) {
  bands = std::max(bands, 2);
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < f.value.size(); ++i) {
    if (!f.interior(i)) continue;
    lo = std::min(lo, f.value[i]);
    hi = std::max(hi, f.value[i]);
  }
  if (!(lo <= hi)) lo = hi = 0.0;
  const double span = hi > lo ? hi - lo : 1.0;
  const double px = std::clamp(800.0 / std::max(f.nx, f.ny), 0.05, 8.0);
  // Viridis-like ramp.
  static const std::array<std::array<int, 3>, 5> stops{{{68, 1, 84}, {59, 82, 139}, {33, 145, 140},
                                                         {94, 201, 98}, {253, 231, 37}}};
  const auto color = [&](int band) {
    const double t = static_cast<double>(band) / (bands - 1) * (stops.size() - 1);
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
    const double s = t - k;
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[k][0] * (1 - s) + stops[k + 1][0] * s)),
                  static_cast<int>(std::lround(stops[k][1] * (1 - s) + stops[k + 1][1] * s)),
                  static_cast<int>(std::lround(stops[k][2] * (1 - s) + stops[k + 1][2] * s)));
    return std::string(buf);
  };
  const auto band_of = [&](double x) {
    return std::clamp(static_cast<int>((x - lo) / span * bands), 0, bands - 1);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(f.nx * px) << "\" height=\""
     << fmt(f.ny * px) << "\" shape-rendering=\"crispEdges\">\n"
     << "<title>range [" << lo << ", " << hi << "], " << bands << " bands</title>\n";
  for (int j = 1; j <= f.ny; ++j) {
    int i = 1;
    while (i <= f.nx) {
      const std::size_t idx = f.index(i, j);
      if (!f.interior(idx)) {
        ++i;
        continue;
      }
      const int band = band_of(f.value[idx]);
      int run = 1;
      while (i + run <= f.nx && f.interior(f.index(i + run, j)) &&
             band_of(f.value[f.index(i + run, j)]) == band)
        ++run;
      os << "<rect x=\"" << fmt((i - 1) * px) << "\" y=\"" << fmt((f.ny - j) * px) << "\" width=\""
         << fmt(run * px) << "\" height=\"" << fmt(px) << "\" fill=\"" << color(band) << "\"/>\n";
      i += run;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lgcli
