#pragma once

#include "leastgrad/curve.hpp"
#include "leastgrad/report.hpp"
#include "leastgrad/vec.hpp"

namespace lg {

struct Chord {
  double a = 0.0;  // abscissas of the endpoints on the arc
  double b = 0.0;
  Point pa, pb;
  double len = 0.0;

  Vec2 dir() const { return (pb - pa) / len; }
  // Unit normal pointing to the side of the arc.
  Vec2 normal() const { return perp(dir()); }
  // Point at distance t from pa along the chord.
  Point at(double t) const { return pa + dir() * t; }
  // Signed distance from pa of the orthogonal projection of p.
  double param(Point p) const { return dot(p - pa, dir()); }
  Point project(Point p) const { return at(param(p)); }
};

Chord make_chord(const ConcaveArc& arc, double a, double b);

inline constexpr double kQuadratureTol = 1e-12;
inline constexpr long kQuadratureMaxIntervals = 1000000;

// Length of the graph over [a, b] by adaptive Simpson.
double arc_length(const ConcaveArc& arc, double a, double b,
                  double tol = kQuadratureTol);

// True when the smallness conditions that make orthogonal intersections
// unique hold; cheap arithmetic on the sup norms.
bool hypotheses_hold(const ConcaveArc& arc);

// Abscissa where the line through m orthogonal to the chord meets the arc.
// Refuses unless hypotheses_hold(arc).
double perpendicular_abscissa(const ConcaveArc& arc, const Chord& chord, Point m);
Point perpendicular_intersection(const ConcaveArc& arc, const Chord& chord, Point m);

struct ChordArcResult {
  double chordLen = 0.0;
  double arcLen = 0.0;
  double upperBound = 0.0;
};
// Throws VerificationError when chordLen <= arcLen <= upperBound fails by
// more than tol.
ChordArcResult chord_arc_check(const ConcaveArc& arc, double a, double b,
                               double tol = 1e-10);

struct SagittaResult {
  double maxHeight = 0.0;
  double bound = 0.0;
  // Absolute rounding allowance for heights computed from coordinates.
  double roundoff = 0.0;
};
SagittaResult sagitta_bound_check(const ConcaveArc& arc, const Chord& chord,
                                  int samples = 10000);

// Largest distance between two points of the region enclosed by the arc and
// its chord.
double cap_diameter(const ConcaveArc& arc);

VerificationReport validate_hypotheses(const ConcaveArc& arc, double capDiameter);
inline VerificationReport validate_hypotheses(const ConcaveArc& arc) {
  return validate_hypotheses(arc, cap_diameter(arc));
}

}  // namespace lg
