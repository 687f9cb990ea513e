#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "leastgrad/cantor.hpp"
#include "leastgrad/raster.hpp"
#include "leastgrad/vec.hpp"

namespace lg {

// Planar domain with a boundary parametrized by arc length.
class Domain {
 public:
  virtual ~Domain() = default;
  virtual std::string name() const = 0;
  virtual bool contains(Point p) const = 0;
  virtual Point project(Point p) const = 0;
  // Arc-length parameter of a boundary point.
  virtual double param(Point boundaryPoint) const = 0;
  // Distance to the boundary, positive inside.
  virtual double inner_distance(Point p) const = 0;
  // Largest distance on which the boundary projection stays smooth.
  virtual double band() const = 0;
  virtual BoundingBox box() const = 0;
};

// Disc; parameter s = R * theta with theta in [-pi, pi) measured at the center.
class DiscDomain final : public Domain {
 public:
  DiscDomain(Point center, double radius);
  std::string name() const override { return "disc"; }
  bool contains(Point p) const override;
  Point project(Point p) const override;
  double param(Point boundaryPoint) const override;
  double inner_distance(Point p) const override;
  double band() const override { return radius_; }
  BoundingBox box() const override;
  Point center() const { return center_; }
  double radius() const { return radius_; }

 private:
  Point center_;
  double radius_;
};

// Unit square; parameter runs counter-clockwise from (0, 0): bottom [0, 1],
// right [1, 2], top [2, 3], left [3, 4].
class SquareDomain final : public Domain {
 public:
  std::string name() const override { return "square"; }
  bool contains(Point p) const override;
  Point project(Point p) const override;
  double param(Point boundaryPoint) const override;
  double inner_distance(Point p) const override;
  double band() const override { return 0.5; }
  BoundingBox box() const override { return {0.0, 0.0, 1.0, 1.0}; }
};

struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Indicator of a union of disjoint parameter intervals, optionally mollified
// by a linear ramp of the given width centered at each jump.
struct BoundaryDatum {
  std::vector<ParamInterval> intervals;
  double rampWidth = 0.0;

  double value(double s) const;
  // Exact for a centered ramp whenever neighbouring ramps do not overlap.
  double l1_norm() const;
  // Lipschitz constant of value(); infinite for a sharp indicator.
  double max_slope() const;
  bool empty() const { return intervals.empty(); }
  BoundaryDatum mollified(double width) const { return {intervals, width}; }
};

// Arc of the unit disc between (x0, -y0) and (x0, y0) with x0 > 0.
BoundaryDatum disc_arc_datum(double y0);
// Level-N arcs of a tree on the disc that continues its (circular) curve.
BoundaryDatum cantor_datum(const CantorTree& tree, int N, const DiscDomain& disc);
// The disc whose boundary contains a circular arc of the tree.
DiscDomain disc_of(const ConcaveArc& arc);

enum class CellKind : std::uint8_t { Exterior = 0, Interior = 1, Ghost = 2, Cut = 3 };

// Cell-centered grid of nx x ny cells over `box` plus a one-cell ring.
// Interior cells have centers inside the domain and the box. Ghost cells are
// outside the domain and 4-adjacent to an interior cell; they carry the
// trace. Cut cells are inside the domain but outside the box (window grids);
// they carry an artificial boundary value.
struct GridField {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  BoundingBox box;
  std::vector<CellKind> kind;
  std::vector<double> value;

  int stride() const { return nx + 2; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx + 2) + static_cast<std::size_t>(i);
  }
  // i, j range over [0, nx + 2) x [0, ny + 2); (1, 1) is the first box cell.
  Point center(int i, int j) const {
    return {box.x0 + (i - 0.5) * h, box.y0 + (j - 0.5) * h};
  }
  bool active(std::size_t idx) const { return kind[idx] != CellKind::Exterior; }
  bool interior(std::size_t idx) const { return kind[idx] == CellKind::Interior; }
  std::int64_t count(CellKind k) const;
  double l1_norm() const;  // sum of h^2 |u| over interior cells
};

// n x n grid over the domain's bounding box.
GridField make_grid(const Domain& domain, int n);
// Window grid: square cells of size h over `box`.
GridField make_window_grid(const Domain& domain, const BoundingBox& box, double h);

// Ghost cells get datum(param(project(center))); cut cells get `cutValue`.
void apply_trace(GridField& field, const Domain& domain, const BoundaryDatum& datum,
                 double cutValue = 0.0);

// Per-cell gradient norm: Euclidean, or the l1 norm for which the discrete
// coarea formula holds exactly.
enum class TvNorm { Isotropic, Anisotropic };

// Forward-difference TV over cells that are interior or have an interior
// forward neighbour; a difference toward an Exterior cell is zero.
double tv(const GridField& field, TvNorm norm = TvNorm::Isotropic);
// Same stencil, one axis (1 = x, 2 = y).
double tv_directional(const GridField& field, int axis);

// Flat binary export: text header "LGFIELD 1" with dimensions, h and box,
// then (nx+2)(ny+2) cell-kind bytes and as many native doubles, row 0 first.
void write_field_binary(const GridField& field, const std::string& path);
GridField read_field_binary(const std::string& path);
void write_field_csv(const GridField& field, const std::string& path);

}  // namespace lg
