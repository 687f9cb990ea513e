#include <doctest.h>

#include <cmath>
#include <random>

#include "leastgrad/errors.hpp"
#include "leastgrad/geometry.hpp"

using namespace lg;

namespace {

// Closed forms used as independent references for the quadrature.
double circle_arc_length(double chord, double R) { return 2.0 * R * std::asin(chord / (2.0 * R)); }

double parabola_length(double c, double eta) {
  const double u = c * eta;
  return (u * std::sqrt(1.0 + u * u) + std::asinh(u)) / (2.0 * c);
}

}  // namespace

TEST_CASE("circle preset geometry") {
  const ConcaveArc arc = make_circle_arc(0.05);
  CHECK(arc.f(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(arc.f(0.05)) < 1e-15);
  const double sagitta = 1.0 - std::sqrt(1.0 - 0.05 * 0.05 / 4.0);
  CHECK(arc.height() == doctest::Approx(sagitta).epsilon(1e-12));
  CHECK(arc.supFpp > 0.0);
  CHECK(arc.certified);
}

TEST_CASE("arc length matches closed forms") {
  const ConcaveArc circle = make_circle_arc(0.05);
  CHECK(std::abs(arc_length(circle, 0.0, 0.05) - circle_arc_length(0.05, 1.0)) < 1e-12);
  const ConcaveArc big = make_circle_arc(0.5, 2.0);
  CHECK(std::abs(arc_length(big, 0.0, 0.5) - circle_arc_length(0.5, 2.0)) < 1e-12);
  const ConcaveArc parabola = make_parabola_arc(0.3, 1.5);
  CHECK(std::abs(arc_length(parabola, 0.0, 0.3) - parabola_length(1.5, 0.3)) < 1e-12);
  // A flat parabola is its own chord.
  CHECK(arc_length(make_parabola_arc(0.3, 0.0), 0.0, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("sub-chords of the circle: arc length through the half-angle formula") {
  const ConcaveArc arc = make_circle_arc(0.05);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 0.05);
  for (int s = 0; s < 200; ++s) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-6) continue;
    const Chord c = make_chord(arc, a, b);
    CHECK(std::abs(arc_length(arc, a, b) - circle_arc_length(c.len, 1.0)) < 1e-12);
    const ChordArcResult r = chord_arc_check(arc, a, b);
    CHECK(r.chordLen <= r.arcLen + 1e-15);
    CHECK(r.arcLen <= r.upperBound + 1e-10);
  }
}

TEST_CASE("perpendicular intersection lies on the arc and on the normal line") {
  const ConcaveArc arc = make_circle_arc(0.05);
  const Chord c = make_chord(arc, 0.01, 0.04);
  for (double t : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    const Point m = c.at(t * c.len);
    const Point q = perpendicular_intersection(arc, c, m);
    CHECK(std::abs(q.y - arc.f(q.x)) < 1e-14);
    CHECK(std::abs(dot(q - m, c.dir())) < 1e-13);
  }
}

TEST_CASE("sagitta bound holds and is attained near the middle for circles") {
  const ConcaveArc arc = make_circle_arc(0.05);
  const Chord c = make_chord(arc, 0.0, 0.05);
  const SagittaResult s = sagitta_bound_check(arc, c, 2000);
  CHECK(s.maxHeight <= s.bound);
  CHECK(s.maxHeight == doctest::Approx(arc.height()).epsilon(1e-6));
}

TEST_CASE("hypotheses gate") {
  CHECK(hypotheses_hold(make_circle_arc(0.05)));
  // f'' = -2 everywhere for the unit parabola.
  const ConcaveArc parabola = make_parabola_arc(0.05, 1.0);
  CHECK(parabola.supFpp == doctest::Approx(2.0));
  CHECK_FALSE(hypotheses_hold(parabola));
  CHECK_FALSE(validate_hypotheses(parabola).all_pass());
  CHECK(validate_hypotheses(make_circle_arc(0.05)).all_pass());
  CHECK_THROWS_AS(perpendicular_abscissa(parabola, make_chord(parabola, 0.0, 0.05), {0.02, 0.0}),
                  RefusedError);
}

TEST_CASE("cap diameter of a shallow circular cap is the chord") {
  CHECK(cap_diameter(make_circle_arc(0.05)) == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("preset lookup") {
  CHECK(make_preset_arc("circle", 0.05).kind == ArcKind::Circle);
  CHECK(make_preset_arc("parabola", 0.05).kind == ArcKind::Parabola);
  CHECK_THROWS(make_preset_arc("spiral", 0.05));
}

TEST_CASE("sagitta check on a chord a few ulps above rounding") {
  const ConcaveArc arc = make_circle_arc(0.05);
  const Chord c = make_chord(arc, 0.0052863191180686263, 0.0052865168449897967);
  const SagittaResult s = sagitta_bound_check(arc, c, 2000);
  CHECK(s.maxHeight <= s.bound + s.roundoff);
  CHECK(s.roundoff < 1e-15);
}
