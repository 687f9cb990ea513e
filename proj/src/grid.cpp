#include "leastgrad/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "leastgrad/errors.hpp"
#include "leastgrad/numeric.hpp"

namespace lg {

DiscDomain::DiscDomain(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0)) throw DomainError("DiscDomain: radius must be positive");
}

bool DiscDomain::contains(Point p) const { return dist(p, center_) < radius_; }

Point DiscDomain::project(Point p) const {
  const Vec2 d = p - center_;
  const double r = norm(d);
  if (r == 0.0) throw DomainError("DiscDomain: projection undefined at the center");
  return center_ + d * (radius_ / r);
}

double DiscDomain::param(Point q) const {
  const Vec2 d = q - center_;
  return radius_ * std::atan2(d.y, d.x);
}

double DiscDomain::inner_distance(Point p) const { return radius_ - dist(p, center_); }

BoundingBox DiscDomain::box() const {
  return {center_.x - radius_, center_.y - radius_, center_.x + radius_, center_.y + radius_};
}

bool SquareDomain::contains(Point p) const {
  return p.x > 0.0 && p.x < 1.0 && p.y > 0.0 && p.y < 1.0;
}

Point SquareDomain::project(Point p) const {
  if (!contains(p)) return {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, 0.0, 1.0)};
  const double d[4] = {p.y, 1.0 - p.x, 1.0 - p.y, p.x};
  const int side = static_cast<int>(std::min_element(d, d + 4) - d);
  switch (side) {
    case 0: return {p.x, 0.0};
    case 1: return {1.0, p.y};
    case 2: return {p.x, 1.0};
    default: return {0.0, p.y};
  }
}

double SquareDomain::param(Point q) const {
  if (q.y == 0.0) return q.x;
  if (q.x == 1.0) return 1.0 + q.y;
  if (q.y == 1.0) return 3.0 - q.x;
  return 4.0 - q.y;
}

double SquareDomain::inner_distance(Point p) const {
  if (contains(p)) return std::min({p.x, p.y, 1.0 - p.x, 1.0 - p.y});
  return -dist(p, project(p));
}

double BoundaryDatum::value(double s) const {
  double v = 0.0;
  for (const auto& iv : intervals) {
    if (rampWidth > 0.0) {
      const double up = std::clamp((s - iv.lo) / rampWidth + 0.5, 0.0, 1.0);
      const double down = std::clamp((iv.hi - s) / rampWidth + 0.5, 0.0, 1.0);
      v += std::min(up, down);
    } else if (s >= iv.lo && s <= iv.hi) {
      v += 1.0;
    }
  }
  return std::min(v, 1.0);
}

double BoundaryDatum::l1_norm() const {
  CompensatedSum sum;
  for (const auto& iv : intervals) sum.add(iv.hi - iv.lo);
  return sum.value();
}

double BoundaryDatum::max_slope() const {
  if (intervals.empty()) return 0.0;
  return rampWidth > 0.0 ? 1.0 / rampWidth : std::numeric_limits<double>::infinity();
}

BoundaryDatum disc_arc_datum(double y0) {
  if (!(y0 > 0.0 && y0 < 1.0)) throw DomainError("disc_arc_datum: y0 must lie in (0, 1)");
  const double theta = std::asin(y0);
  return {{{-theta, theta}}, 0.0};
}

DiscDomain disc_of(const ConcaveArc& arc) {
  if (arc.kind != ArcKind::Circle) throw DomainError("disc_of: curve is not a circular arc");
  const double R = arc.param;
  return DiscDomain({0.5 * arc.eta, -std::sqrt(R * R - 0.25 * arc.eta * arc.eta)}, R);
}

BoundaryDatum cantor_datum(const CantorTree& tree, int N, const DiscDomain& disc) {
  BoundaryDatum d;
  for (const auto& n : tree.level(N)) {
    // Parameter decreases with the abscissa on the upper arc.
    d.intervals.push_back({disc.param(tree.curve().point(n.b)), disc.param(tree.curve().point(n.a))});
  }
  std::sort(d.intervals.begin(), d.intervals.end(),
            [](const ParamInterval& a, const ParamInterval& b) { return a.lo < b.lo; });
  return d;
}

std::int64_t GridField::count(CellKind k) const { return std::count(kind.begin(), kind.end(), k); }

double GridField::l1_norm() const {
  CompensatedSum sum;
  for (std::size_t i = 0; i < value.size(); ++i)
    if (kind[i] == CellKind::Interior) sum.add(std::abs(value[i]));
  return sum.value() * h * h;
}

namespace {

GridField build_grid(const Domain& domain, int nx, int ny, double h, const BoundingBox& box) {
  if (nx < 1 || ny < 1 || !(h > 0.0)) throw DomainError("grid: need positive size and spacing");
  GridField g;
  g.nx = nx;
  g.ny = ny;
  g.h = h;
  g.box = {box.x0, box.y0, box.x0 + nx * h, box.y0 + ny * h};
  const std::size_t total = static_cast<std::size_t>(nx + 2) * static_cast<std::size_t>(ny + 2);
  g.kind.assign(total, CellKind::Exterior);
  g.value.assign(total, 0.0);
  for (int j = 1; j <= ny; ++j)
    for (int i = 1; i <= nx; ++i)
      if (domain.contains(g.center(i, j))) g.kind[g.index(i, j)] = CellKind::Interior;
  const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
  for (int j = 0; j < ny + 2; ++j) {
    for (int i = 0; i < nx + 2; ++i) {
      const std::size_t idx = g.index(i, j);
      if (g.kind[idx] == CellKind::Interior) continue;
      bool touches = false;
      for (int d = 0; d < 4 && !touches; ++d) {
        const int a = i + dx[d], b = j + dy[d];
        touches = a >= 0 && b >= 0 && a < nx + 2 && b < ny + 2 &&
                  g.kind[g.index(a, b)] == CellKind::Interior;
      }
      if (touches) {
        g.kind[idx] = domain.contains(g.center(i, j)) ? CellKind::Cut : CellKind::Ghost;
      }
    }
  }
  return g;
}

}  // namespace

GridField make_grid(const Domain& domain, int n) {
  const BoundingBox b = domain.box();
  const double h = std::max(b.x1 - b.x0, b.y1 - b.y0) / n;
  return build_grid(domain, n, n, h, b);
}

GridField make_window_grid(const Domain& domain, const BoundingBox& box, double h) {
  const int nx = static_cast<int>(std::ceil((box.x1 - box.x0) / h - 1e-9));
  const int ny = static_cast<int>(std::ceil((box.y1 - box.y0) / h - 1e-9));
  return build_grid(domain, nx, ny, h, box);
}

void apply_trace(GridField& f, const Domain& domain, const BoundaryDatum& datum, double cutValue) {
  for (int j = 0; j < f.ny + 2; ++j) {
    for (int i = 0; i < f.nx + 2; ++i) {
      const std::size_t idx = f.index(i, j);
      if (f.kind[idx] == CellKind::Ghost) {
        f.value[idx] = datum.value(domain.param(domain.project(f.center(i, j))));
      } else if (f.kind[idx] == CellKind::Cut) {
        f.value[idx] = cutValue;
      }
    }
  }
}

namespace {

template <typename Term>
double stencil_sum(const GridField& f, Term term) {
  CompensatedSum sum;
  const int W = f.stride();
  for (int j = 0; j < f.ny + 2; ++j) {
    for (int i = 0; i < f.nx + 2; ++i) {
      const std::size_t p = f.index(i, j);
      if (!f.active(p)) continue;
      const bool right = i + 1 < W && f.active(p + 1);
      const bool up = j + 1 < f.ny + 2 && f.active(p + W);
      const bool counted = f.interior(p) || (right && f.interior(p + 1)) ||
                           (up && f.interior(p + W));
      if (!counted) continue;
      const double d1 = right ? f.value[p + 1] - f.value[p] : 0.0;
      const double d2 = up ? f.value[p + W] - f.value[p] : 0.0;
      sum.add(term(d1, d2));
    }
  }
  return sum.value() * f.h;
}

}  // namespace

double tv(const GridField& f, TvNorm norm) {
  if (norm == TvNorm::Anisotropic)
    return stencil_sum(f, [](double a, double b) { return std::abs(a) + std::abs(b); });
  return stencil_sum(f, [](double a, double b) { return std::hypot(a, b); });
}

double tv_directional(const GridField& f, int axis) {
  if (axis != 1 && axis != 2) throw DomainError("tv_directional: axis must be 1 or 2");
  return axis == 1 ? stencil_sum(f, [](double a, double) { return std::abs(a); })
                   : stencil_sum(f, [](double, double b) { return std::abs(b); });
}

void write_field_binary(const GridField& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot write " + path);
  std::ostringstream header;
  header << std::setprecision(17) << "LGFIELD 1\n"
         << f.nx << ' ' << f.ny << ' ' << f.h << '\n'
         << f.box.x0 << ' ' << f.box.y0 << ' ' << f.box.x1 << ' ' << f.box.y1 << '\n';
  os << header.str();
  os.write(reinterpret_cast<const char*>(f.kind.data()), static_cast<std::streamsize>(f.kind.size()));
  os.write(reinterpret_cast<const char*>(f.value.data()),
           static_cast<std::streamsize>(f.value.size() * sizeof(double)));
}

GridField read_field_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DomainError("cannot read " + path);
  std::string magic;
  int version = 0;
  GridField f;
  is >> magic >> version >> f.nx >> f.ny >> f.h >> f.box.x0 >> f.box.y0 >> f.box.x1 >> f.box.y1;
  if (!is || magic != "LGFIELD" || version != 1 || f.nx < 1 || f.ny < 1) {
    throw DomainError("read_field_binary: bad header in " + path);
  }
  is.get();
  const std::size_t total = static_cast<std::size_t>(f.nx + 2) * static_cast<std::size_t>(f.ny + 2);
  f.kind.resize(total);
  f.value.resize(total);
  is.read(reinterpret_cast<char*>(f.kind.data()), static_cast<std::streamsize>(total));
  is.read(reinterpret_cast<char*>(f.value.data()), static_cast<std::streamsize>(total * sizeof(double)));
  if (!is) throw DomainError("read_field_binary: truncated data in " + path);
  return f;
}

void write_field_csv(const GridField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw DomainError("cannot write " + path);
  os << std::setprecision(17) << "x,y,kind,value\n";
  for (int j = 0; j < f.ny + 2; ++j) {
    for (int i = 0; i < f.nx + 2; ++i) {
      const std::size_t idx = f.index(i, j);
      if (!f.active(idx)) continue;
      const Point c = f.center(i, j);
      os << c.x << ',' << c.y << ',' << static_cast<int>(f.kind[idx]) << ',' << f.value[idx] << '\n';
    }
  }
}

}  // namespace lg
