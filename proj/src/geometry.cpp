#include "leastgrad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "leastgrad/errors.hpp"

namespace lg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inv_or_inf(double x) { return x > 0.0 ? 1.0 / x : kInf; }

struct Simpson {
  const ConcaveArc& arc;
  long intervals = 0;

  double integrand(double x) const {
    const double s = arc.fp(x);
    return std::sqrt(1.0 + s * s);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = integrand(lm), frm = integrand(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
      if (++intervals > kQuadratureMaxIntervals) {
        throw InternalError("arc_length: interval cap exceeded");
      }
      return left + right + diff / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

// Shared by cap_diameter and the slope bound: sup |f'| <= 1 makes the chord
// the longest segment inside the cap.
double sampled_cap_diameter(const ConcaveArc& arc) {
  constexpr int kSamples = 400;
  std::vector<Point> pts;
  pts.reserve(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) pts.push_back(arc.point(arc.eta * i / kSamples));
  double best = arc.eta;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, dist(pts[i], pts[j]));
  return best;
}

struct Thresholds {
  double main;        // min{1/2, 1/(16 s2^2), 1/(2 s1 s2)}
  double separation;  // min{1/2, (4 s2^2)^-2, 1/(16 s2^2)}
  double capLimit;    // largest diameter allowed by 1 + 4 s2^2 d < 16/9
};

Thresholds thresholds(const ConcaveArc& arc) {
  const double s1 = arc.supFp, s2 = arc.supFpp;
  Thresholds t{};
  const double inv16 = inv_or_inf(16.0 * s2 * s2);
  t.main = std::min({0.5, inv16, inv_or_inf(2.0 * s1 * s2)});
  const double q = 4.0 * s2 * s2;
  t.separation = std::min({0.5, inv_or_inf(q * q), inv16});
  t.capLimit = (16.0 / 9.0 - 1.0) * inv_or_inf(4.0 * s2 * s2);
  return t;
}

}  // namespace

Chord make_chord(const ConcaveArc& arc, double a, double b) {
  Chord c;
  c.a = a;
  c.b = b;
  c.pa = arc.point(a);
  c.pb = arc.point(b);
  c.len = dist(c.pa, c.pb);
  return c;
}

double arc_length(const ConcaveArc& arc, double a, double b, double tol) {
  if (!(a >= 0.0) || !(b <= arc.eta) || !(a <= b)) {
    throw DomainError("arc_length: need 0 <= a <= b <= eta, got [" + std::to_string(a) +
                      ", " + std::to_string(b) + "]");
  }
  if (a == b) return 0.0;
  Simpson s{arc};
  const double fa = s.integrand(a), fb = s.integrand(b);
  const double m = 0.5 * (a + b), fm = s.integrand(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return s.refine(a, b, fa, fm, fb, whole, tol, 50);
}

double cap_diameter(const ConcaveArc& arc) {
  if (arc.supFp <= 1.0) return arc.eta;
  return sampled_cap_diameter(arc);
}

bool hypotheses_hold(const ConcaveArc& arc) {
  const Thresholds t = thresholds(arc);
  const double diam = arc.supFp <= 1.0 ? arc.eta : sampled_cap_diameter(arc);
  return arc.eta < t.main && arc.eta < t.separation && diam < t.capLimit;
}

double perpendicular_abscissa(const ConcaveArc& arc, const Chord& chord, Point m) {
  if (!hypotheses_hold(arc)) {
    throw RefusedError("perpendicular_intersection: curve hypotheses not validated");
  }
  const Vec2 u = chord.dir();
  const double t = dot(m - chord.pa, u);
  const double off = std::abs(cross(u, m - chord.pa));
  const double slack = 1e-12 * std::max(1.0, chord.len);
  if (off > slack || t < -slack || t > chord.len + slack) {
    throw DomainError("perpendicular_intersection: point is not on the chord");
  }
  if (t <= 0.0) return chord.a;
  if (t >= chord.len) return chord.b;

  const auto g = [&](double x) { return dot(arc.point(x) - m, u); };
  double lo = chord.a, hi = chord.b;
  const double glo = g(lo), ghi = g(hi);
  if (glo > slack || ghi < -slack) {
    throw InternalError("perpendicular_intersection: root not bracketed");
  }
  // Sign flips within rounding put the root at an endpoint.
  if (glo >= 0.0) return lo;
  if (ghi <= 0.0) return hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) hi = mid; else lo = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 2; ++i) {
    const double slope = u.x + arc.fp(x) * u.y;
    if (slope == 0.0) break;
    x = std::clamp(x - g(x) / slope, lo, hi);
  }
  return x;
}

Point perpendicular_intersection(const ConcaveArc& arc, const Chord& chord, Point m) {
  return arc.point(perpendicular_abscissa(arc, chord, m));
}

ChordArcResult chord_arc_check(const ConcaveArc& arc, double a, double b, double tol) {
  if (!(a >= 0.0) || !(b <= arc.eta) || !(a < b)) {
    throw DomainError("chord_arc_check: need 0 <= a < b <= eta");
  }
  ChordArcResult r;
  r.chordLen = dist(arc.point(a), arc.point(b));
  r.arcLen = arc_length(arc, a, b);
  const double w = b - a;
  r.upperBound =
      r.chordLen * (1.0 + w * arc.supFpp * (2.0 * arc.supFp + arc.supFpp * w));
  if (r.chordLen > r.arcLen + tol || r.arcLen > r.upperBound + tol) {
    throw VerificationError("chord-arc inequality violated",
                            {{"chordLen", r.chordLen},
                             {"arcLen", r.arcLen},
                             {"upperBound", r.upperBound}});
  }
  return r;
}

SagittaResult sagitta_bound_check(const ConcaveArc& arc, const Chord& chord, int samples) {
  if (samples < 2) throw DomainError("sagitta_bound_check: need at least two samples");
  SagittaResult r;
  const double w = chord.b - chord.a;
  r.bound = w * w * arc.supFpp / 8.0;
  for (int i = 0; i < samples; ++i) {
    const Point m = chord.at(chord.len * i / (samples - 1));
    const Point c = perpendicular_intersection(arc, chord, m);
    r.maxHeight = std::max(r.maxHeight, dist(m, c));
  }
  // The parabola attains the bound exactly; allow for rounding only.
  // Coordinates are of size eta at most.
  r.roundoff = 64.0 * std::numeric_limits<double>::epsilon() * arc.eta + 1e-12 * r.bound;
  if (r.maxHeight > r.bound + r.roundoff) {
    throw VerificationError("sagitta bound violated",
                            {{"maxHeight", r.maxHeight}, {"bound", r.bound}});
  }
  return r;
}

VerificationReport validate_hypotheses(const ConcaveArc& arc, double capDiameter) {
  const Thresholds t = thresholds(arc);
  const std::string cert = arc.certification();
  const double s1 = arc.supFp, s2 = arc.supFpp;
  VerificationReport rep;

  CheckResult main;
  main.name = "hypothesis.smallness";
  main.anchor = "localization-smallness";
  main.measured = {{"eta", arc.eta}, {"supFp", s1}, {"supFpp", s2}};
  main.bounds = {{"half", 0.5},
                 {"inv16SupFpp2", inv_or_inf(16.0 * s2 * s2)},
                 {"inv2SupFpSupFpp", inv_or_inf(2.0 * s1 * s2)}};
  main.margin = t.main - arc.eta;
  main.pass = arc.eta < t.main;
  main.note = "sup norms " + cert;
  rep.checks.push_back(main);

  CheckResult cap;
  cap.name = "hypothesis.cap-diameter";
  cap.anchor = "cap-diameter-curvature";
  const double lhs = 1.0 + 4.0 * s2 * s2 * capDiameter;
  cap.measured = {{"capDiameter", capDiameter}, {"lhs", lhs}};
  cap.bounds = {{"rhs", 16.0 / 9.0}};
  cap.margin = 16.0 / 9.0 - lhs;
  cap.pass = lhs < 16.0 / 9.0;
  cap.note = "sup norms " + cert;
  rep.checks.push_back(cap);

  CheckResult sep;
  sep.name = "hypothesis.triangle-separation";
  sep.anchor = "triangle-separation-smallness";
  const double q = 4.0 * s2 * s2;
  const double stated = std::min(0.5, inv_or_inf(q * q));
  const double used = std::min(0.5, inv_or_inf(16.0 * s2 * s2));
  sep.measured = {{"eta", arc.eta}};
  sep.bounds = {{"statedThreshold", stated}, {"usedInProofThreshold", used}};
  sep.margin = t.separation - arc.eta;
  sep.pass = arc.eta < t.separation;
  sep.note = "enforces the minimum of the stated and the in-proof thresholds; they "
             "differ unless sup|f''| = 1 (difference " +
             std::to_string(stated - used) + ")";
  rep.checks.push_back(sep);
  return rep;
}

}  // namespace lg
