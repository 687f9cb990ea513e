#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "leastgrad/vec.hpp"

namespace lg {

enum class ArcKind { Circle, Parabola, Custom };

// Graph of a concave function f on [0, eta] written in the arc frame, where
// A = (0, 0) and B = (eta, 0) are the endpoints of the arc.
struct ConcaveArc {
  using Fn = std::function<double(double)>;

  ArcKind kind = ArcKind::Custom;
  std::string name;
  double eta = 0.0;
  Fn f, fp, fpp;
  double supFp = 0.0;
  double supFpp = 0.0;
  // Analytic sup norms for presets; sampled estimates for user curves.
  bool certified = false;
  Frame frame;
  // Preset parameter: circle radius or parabola coefficient.
  double param = 0.0;

  Point point(double x) const { return {x, f(x)}; }
  // Largest height of the arc above its chord.
  double height() const;
  std::string certification() const {
    return certified ? "analytic" : "sampled, not certified";
  }
};

// f(x) = sqrt(R^2 - (x - eta/2)^2) - sqrt(R^2 - eta^2/4); the boundary of a
// disc of radius R whose center sits below the chord.
ConcaveArc make_circle_arc(double eta, double radius = 1.0);
// f(x) = c x (eta - x). c = 0 gives the flat segment.
ConcaveArc make_parabola_arc(double eta, double coefficient = 1.0);
// Sup norms estimated on 1e5 samples and inflated by 1.001.
ConcaveArc make_custom_arc(std::string name, double eta, ConcaveArc::Fn f,
                           ConcaveArc::Fn fp, ConcaveArc::Fn fpp);
// "circle" or "parabola"; param <= 0 selects the preset default.
ConcaveArc make_preset_arc(std::string_view preset, double eta, double param = 0.0);

// Boundary of the domain near the arc: orthogonal projection, outward normal,
// inner distance and the vertical extent of the domain below the chord. For
// the circle preset the domain is the disc and everything is exact; for other
// curves the domain is the subgraph and the projection is computed by Newton.
class DomainBoundary {
 public:
  explicit DomainBoundary(const ConcaveArc& arc);

  Point project(Point p) const;
  Vec2 normal(Point boundary_point) const;
  double distance(Point p) const;
  bool contains(Point p) const;
  // Lowest ordinate of the domain on the vertical through abscissa x.
  double floor_at(double x) const;
  // Width of the tubular neighbourhood where the projection is single valued.
  double band() const { return band_; }
  bool is_disc() const { return disc_; }
  Point center() const { return center_; }
  double radius() const { return radius_; }

 private:
  ConcaveArc arc_;
  bool disc_ = false;
  Point center_;
  double radius_ = 0.0;
  double band_ = 0.0;
};

}  // namespace lg
