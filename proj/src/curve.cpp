#include "leastgrad/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "leastgrad/errors.hpp"

namespace lg {

double ConcaveArc::height() const {
  switch (kind) {
    case ArcKind::Circle:
      return param - std::sqrt(param * param - 0.25 * eta * eta);
    case ArcKind::Parabola:
      return param * eta * eta / 4.0;
    case ArcKind::Custom:
      break;
  }
  double best = 0.0;
  constexpr int kSamples = 100000;
  for (int i = 0; i <= kSamples; ++i) best = std::max(best, f(eta * i / kSamples));
  return best;
}

ConcaveArc make_circle_arc(double eta, double radius) {
  if (!(eta > 0.0) || !(radius > 0.0) || eta >= 2.0 * radius) {
    throw DomainError("circle arc needs 0 < eta < 2 * radius");
  }
  ConcaveArc arc;
  arc.kind = ArcKind::Circle;
  arc.name = "circle";
  arc.eta = eta;
  arc.param = radius;
  const double r2 = radius * radius;
  const double mid = 0.5 * eta;
  const double base = std::sqrt(r2 - mid * mid);
  arc.f = [=](double x) { return std::sqrt(r2 - (x - mid) * (x - mid)) - base; };
  arc.fp = [=](double x) {
    const double s = x - mid;
    return -s / std::sqrt(r2 - s * s);
  };
  arc.fpp = [=](double x) {
    const double s = x - mid;
    const double q = r2 - s * s;
    return -r2 / (q * std::sqrt(q));
  };
  // |f'| and |f''| both peak at the endpoints.
  arc.supFp = mid / base;
  arc.supFpp = r2 / (base * base * base);
  arc.certified = true;
  return arc;
}

ConcaveArc make_parabola_arc(double eta, double coefficient) {
  if (!(eta > 0.0) || coefficient < 0.0) {
    throw DomainError("parabola arc needs eta > 0 and a nonnegative coefficient");
  }
  ConcaveArc arc;
  arc.kind = ArcKind::Parabola;
  arc.name = "parabola";
  arc.eta = eta;
  arc.param = coefficient;
  const double c = coefficient;
  arc.f = [=](double x) { return c * x * (eta - x); };
  arc.fp = [=](double x) { return c * (eta - 2.0 * x); };
  arc.fpp = [=](double) { return -2.0 * c; };
  arc.supFp = c * eta;
  arc.supFpp = 2.0 * c;
  arc.certified = true;
  return arc;
}

ConcaveArc make_custom_arc(std::string name, double eta, ConcaveArc::Fn f,
                           ConcaveArc::Fn fp, ConcaveArc::Fn fpp) {
  if (!(eta > 0.0)) throw DomainError("custom arc needs eta > 0");
  ConcaveArc arc;
  arc.kind = ArcKind::Custom;
  arc.name = std::move(name);
  arc.eta = eta;
  arc.f = std::move(f);
  arc.fp = std::move(fp);
  arc.fpp = std::move(fpp);
  constexpr int kSamples = 100000;
  constexpr double kSafety = 1.001;
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = eta * i / kSamples;
    s1 = std::max(s1, std::abs(arc.fp(x)));
    s2 = std::max(s2, std::abs(arc.fpp(x)));
  }
  arc.supFp = s1 * kSafety;
  arc.supFpp = s2 * kSafety;
  arc.certified = false;
  return arc;
}

ConcaveArc make_preset_arc(std::string_view preset, double eta, double param) {
  if (preset == "circle") return make_circle_arc(eta, param > 0.0 ? param : 1.0);
  if (preset == "parabola") return make_parabola_arc(eta, param > 0.0 ? param : 1.0);
  throw DomainError("unknown curve preset '" + std::string(preset) + "'");
}

DomainBoundary::DomainBoundary(const ConcaveArc& arc) : arc_(arc) {
  if (arc.kind == ArcKind::Circle) {
    disc_ = true;
    radius_ = arc.param;
    const double mid = 0.5 * arc.eta;
    center_ = {mid, -std::sqrt(radius_ * radius_ - mid * mid)};
    band_ = radius_;
  } else {
    band_ = arc.supFpp > 0.0 ? 1.0 / arc.supFpp : 1.0;
  }
}

Point DomainBoundary::project(Point p) const {
  if (disc_) {
    const Vec2 d = p - center_;
    const double r = norm(d);
    if (r == 0.0) throw DomainError("projection undefined at the disc center");
    return center_ + d * (radius_ / r);
  }
  // Nearest point on the graph: root of g(x) = (x - px) + f'(x)(f(x) - py).
  const auto g = [&](double x) { return (x - p.x) + arc_.fp(x) * (arc_.f(x) - p.y); };
  double lo = 0.0, hi = arc_.eta;
  const double glo = g(lo), ghi = g(hi);
  if (glo >= 0.0) return arc_.point(lo);
  if (ghi <= 0.0) return arc_.point(hi);
  double x = std::clamp(p.x, lo, hi);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    const double gx = g(x);
    if (gx > 0.0) hi = x; else lo = x;
    const double fx = arc_.f(x), d1 = arc_.fp(x);
    const double dg = 1.0 + d1 * d1 + arc_.fpp(x) * (fx - p.y);
    double next = dg > 0.0 ? x - gx / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-16) { x = next; break; }
    x = next;
  }
  return arc_.point(x);
}

Vec2 DomainBoundary::normal(Point q) const {
  if (disc_) return normalized(q - center_);
  const double s = arc_.fp(std::clamp(q.x, 0.0, arc_.eta));
  return Vec2{-s, 1.0} / std::sqrt(1.0 + s * s);
}

double DomainBoundary::distance(Point p) const {
  if (disc_) return std::abs(radius_ - norm(p - center_));
  return dist(p, project(p));
}

bool DomainBoundary::contains(Point p) const {
  if (disc_) {
    const Vec2 d = p - center_;
    return dot(d, d) <= radius_ * radius_;
  }
  if (p.x < 0.0 || p.x > arc_.eta) return false;
  return p.y <= arc_.f(p.x) && p.y >= -band_;
}

double DomainBoundary::floor_at(double x) const {
  if (disc_) {
    const double s = x - center_.x;
    if (std::abs(s) > radius_) return std::numeric_limits<double>::quiet_NaN();
    return center_.y - std::sqrt(radius_ * radius_ - s * s);
  }
  return -band_;
}

}  // namespace lg
