#include "leastgrad/regions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "leastgrad/errors.hpp"
#include "leastgrad/geometry.hpp"

namespace lg {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int exact_orient(Point a, Point b, Point c) {
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const Rational d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Smallest signed distance from p to the edges of a counter-clockwise
// triangle; positive inside.
double inner_distance(const std::array<Point, 3>& t, Point p) {
  double best = INFINITY;
  for (int i = 0; i < 3; ++i) {
    const Point a = t[i], b = t[(i + 1) % 3];
    best = std::min(best, orient(a, b, p) / dist(a, b));
  }
  return best;
}

bool in_closed_triangle(const std::array<Point, 3>& t, Point p) {
  return orient(t[0], t[1], p) >= 0.0 && orient(t[1], t[2], p) >= 0.0 &&
         orient(t[2], t[0], p) >= 0.0;
}

struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const Triangle& t) {
  Box b{t.ccw[0].x, t.ccw[0].y, t.ccw[0].x, t.ccw[0].y};
  for (const auto& p : t.ccw) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// Distances below 1e-14 count as lying on a boundary when evaluating V.
constexpr double kBoundaryTol = 1e-14;

}  // namespace

const char* to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::Cap: return "cap";
    case RegionTag::Triangle: return "triangle";
    case RegionTag::Strip: return "strip";
    case RegionTag::Outside: return "outside";
  }
  return "?";
}

std::vector<Triangle> triangles_of_level(const CantorTree& tree, int N) {
  if (N < 1 || N > tree.depth()) {
    throw DomainError("triangles_of_level: level must lie in [1, depth]");
  }
  std::vector<Triangle> out;
  out.reserve(tree.level(N).size());
  for (const ChordNode& child : tree.level(N)) {
    const ChordNode& parent = *tree.parent(child);
    const Chord& pc = parent.chord;
    const double delta = pc.len;
    const Vec2 u = pc.dir(), n = pc.normal();
    const auto local = [&](Point q) { return Vec2{dot(q - pc.pa, u), dot(q - pc.pa, n)}; };

    Triangle t;
    t.level = N;
    t.index = child.index;
    t.parentLen = delta;
    Vec2 va, vb;  // legs from the right-angle vertex, in the parent frame
    if (child.index % 2 == 1) {
      const Vec2 q = local(child.chord.pb);
      const double slope = q.y / q.x;
      const double x4 = (1.0 + slope * slope) * q.x;
      t.rightAngle = child.chord.pb;
      t.outer = pc.pa;
      t.foot = pc.at(x4);
      t.hypStart = 0.0;
      t.hypEnd = x4;
      va = Vec2{0.0, 0.0} - q;
      vb = Vec2{x4, 0.0} - q;
    } else {
      const Vec2 q = local(child.chord.pa);
      const double slope = q.y / (q.x - delta);
      const double x5 = (1.0 + slope * slope) * q.x - slope * slope * delta;
      t.rightAngle = child.chord.pa;
      t.outer = pc.pb;
      t.foot = pc.at(x5);
      t.hypStart = x5;
      t.hypEnd = delta;
      va = Vec2{delta, 0.0} - q;
      vb = Vec2{x5, 0.0} - q;
    }
    const double angle = std::atan2(std::abs(cross(va, vb)), dot(va, vb));
    t.rightAngleError = std::abs(angle - 0.5 * std::numbers::pi);
    if (t.rightAngleError > 1e-9) {
      throw VerificationError("triangle right angle off",
                              {{"level", N},
                               {"index", static_cast<double>(t.index)},
                               {"angleError", t.rightAngleError}});
    }
    if (!(t.hypLen() < 0.5 * delta)) {
      throw VerificationError("hypotenuse not shorter than half the parent chord",
                              {{"level", N},
                               {"index", static_cast<double>(t.index)},
                               {"hypotenuse", t.hypLen()},
                               {"halfParent", 0.5 * delta}});
    }
    t.ccw = {t.rightAngle, t.outer, t.foot};
    if (orient(t.ccw[0], t.ccw[1], t.ccw[2]) < 0.0) std::swap(t.ccw[1], t.ccw[2]);
    out.push_back(t);
  }
  return out;
}

bool triangles_disjoint(const Triangle& s, const Triangle& t) {
  // Closed convex sets are disjoint iff the line through some edge leaves the
  // other set strictly on its outer side.
  const auto separates = [](const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
    const int orientation = exact_orient(a[0], a[1], a[2]) >= 0 ? 1 : -1;
    for (int i = 0; i < 3; ++i) {
      bool all_out = true;
      for (const auto& p : b) {
        if (exact_orient(a[i], a[(i + 1) % 3], p) * orientation >= 0) {
          all_out = false;
          break;
        }
      }
      if (all_out) return true;
    }
    return false;
  };
  return separates(s.ccw, t.ccw) || separates(t.ccw, s.ccw);
}

DisjointnessReport check_disjoint(const std::vector<Triangle>& tris) {
  DisjointnessReport r;
  r.minBoxGap = INFINITY;
  std::vector<Box> boxes;
  boxes.reserve(tris.size());
  for (const auto& t : tris) boxes.push_back(box_of(t));
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      ++r.pairs;
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      const double gap = std::max({b.x0 - a.x1, a.x0 - b.x1, b.y0 - a.y1, a.y0 - b.y1});
      // Vertices are the stored doubles, so a strictly positive box gap is an
      // exact certificate.
      if (gap > 0.0) {
        r.minBoxGap = std::min(r.minBoxGap, gap);
        continue;
      }
      ++r.exactTests;
      if (!triangles_disjoint(tris[i], tris[j])) r.disjoint = false;
    }
  }
  return r;
}

RegionDecomposition::RegionDecomposition(std::shared_ptr<const CantorTree> tree)
    : tree_(std::move(tree)), boundary_(tree_->curve()) {
  init();
}

RegionDecomposition::RegionDecomposition(CantorTree tree)
    : tree_(std::make_shared<const CantorTree>(std::move(tree))), boundary_(tree_->curve()) {
  init();
}

void RegionDecomposition::init() {
  const int D = tree_->depth();
  triangles_.resize(static_cast<std::size_t>(D) + 1);
  for (int N = 1; N <= D; ++N) triangles_[static_cast<std::size_t>(N)] = triangles_of_level(*tree_, N);

  // Affine map from root abscissa to chord parameter, and the root interval.
  struct Affine {
    double scale, shift;
  };
  rootIntervals_.resize(static_cast<std::size_t>(D) + 1);
  std::vector<Affine> maps{{1.0, 0.0}};
  rootIntervals_[0] = {Interval{0.0, tree_->curve().eta}};
  for (int N = 1; N <= D; ++N) {
    const auto& nodes = tree_->level(N);
    std::vector<Affine> next(nodes.size());
    auto& ivs = rootIntervals_[static_cast<std::size_t>(N)];
    ivs.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const ChordNode& child = nodes[i];
      const ChordNode& parent = *tree_->parent(child);
      const std::size_t pi = static_cast<std::size_t>(parent.index - 1);
      const Affine m = maps[pi];
      const Interval J = rootIntervals_[static_cast<std::size_t>(N - 1)][pi];
      const Triangle& t = triangles_[static_cast<std::size_t>(N)][i];
      Interval out{(t.hypStart - m.shift) / m.scale, (t.hypEnd - m.shift) / m.scale};
      out.lo = std::max(out.lo, J.lo);
      out.hi = std::min(out.hi, J.hi);
      ivs[i] = out;
      const double c = dot(parent.chord.dir(), child.chord.dir());
      const double s = dot(parent.chord.pa - child.chord.pa, child.chord.dir());
      next[i] = {c * m.scale, c * m.shift + s};
    }
    maps = std::move(next);
  }
}

const std::vector<Triangle>& RegionDecomposition::triangles(int N) const {
  if (N < 1 || N > depth()) throw DomainError("triangles: level must lie in [1, depth]");
  return triangles_[static_cast<std::size_t>(N)];
}

bool RegionDecomposition::in_cap(const ChordNode& n, Point p) const {
  if (p.x < n.a || p.x > n.b) return false;
  const Chord& c = n.chord;
  const double chordY = c.pa.y + (p.x - c.pa.x) * (c.pb.y - c.pa.y) / (c.pb.x - c.pa.x);
  return p.y >= chordY && p.y <= tree_->curve().f(p.x);
}

RegionDecomposition::Walk RegionDecomposition::walk(Point p, int N) const {
  if (N < 0 || N > depth()) throw DomainError("level outside [0, depth]");
  Walk w;
  w.chordPoint = p;

  // Deepest cap containing p; caps are nested along a single branch.
  std::array<const ChordNode*, kMaxDepth + 1> caps{};
  int capLevel = -1;
  if (in_cap(tree_->root(), p)) {
    caps[0] = &tree_->root();
    capLevel = 0;
    for (int m = 1; m <= N; ++m) {
      auto kids = tree_->children(*caps[static_cast<std::size_t>(m - 1)]);
      const ChordNode* next = nullptr;
      if (p.x <= kids->first->b) next = kids->first;
      else if (p.x >= kids->second->a) next = kids->second;
      if (!next || !in_cap(*next, p)) break;
      caps[static_cast<std::size_t>(m)] = next;
      capLevel = m;
    }
  }
  if (capLevel >= N) {
    w.cls = {RegionTag::Cap, caps[static_cast<std::size_t>(N)]->index};
    return w;
  }

  // Projection cascade: state is a point on the chord of node `at`.
  const ChordNode* at = nullptr;
  Point q;
  const double eta = tree_->curve().eta;
  if (p.x >= 0.0 && p.x <= eta && p.y <= 0.0 && boundary_.contains(p)) {
    at = &tree_->root();
    q = {p.x, 0.0};
  }
  if (N == 0) {
    if (at) w.cls = {RegionTag::Strip, 1};
    w.chordPoint = q;
    return w;
  }
  for (int m = 1; m <= N; ++m) {
    if (m <= capLevel) continue;  // still inside the cap of level m
    const Triangle* tri = nullptr;
    if (m - 1 == capLevel) {
      const ChordNode* parent = caps[static_cast<std::size_t>(m - 1)];
      const auto& tris = triangles_[static_cast<std::size_t>(m)];
      for (std::int64_t k = 2 * parent->index - 1; k <= 2 * parent->index; ++k) {
        const Triangle& t = tris[static_cast<std::size_t>(k - 1)];
        if (in_closed_triangle(t.ccw, p)) {
          tri = &t;
          break;
        }
      }
    }
    const ChordNode* next = nullptr;
    Point nq;
    bool viaTriangle = false;
    if (tri) {
      next = &tree_->node(m, tri->index);
      nq = next->chord.project(p);
      viaTriangle = true;
    } else if (at) {
      const double s = at->chord.param(q);
      const auto& tris = triangles_[static_cast<std::size_t>(m)];
      for (std::int64_t k = 2 * at->index - 1; k <= 2 * at->index; ++k) {
        const Triangle& t = tris[static_cast<std::size_t>(k - 1)];
        if (s >= t.hypStart && s <= t.hypEnd) {
          next = &tree_->node(m, k);
          nq = next->chord.project(q);
          break;
        }
      }
    }
    if (!next) return w;  // outside
    if (m == N) {
      w.cls = {viaTriangle ? RegionTag::Triangle : RegionTag::Strip, next->index};
      w.chordPoint = nq;
      return w;
    }
    at = next;
    q = nq;
  }
  return w;
}

Classification RegionDecomposition::classify(Point p, int N) const { return walk(p, N).cls; }

Point RegionDecomposition::psi(Point p, int N) const {
  const Walk w = walk(p, N);
  if (w.cls.tag == RegionTag::Outside) throw DomainError("psi: point outside B_N");
  return boundary_.project(w.cls.tag == RegionTag::Cap ? p : w.chordPoint);
}

double RegionDecomposition::pi_arc_coordinate(Point p, int N) const {
  const ConcaveArc& arc = tree_->curve();
  const double x = std::clamp(psi(p, N).x, 0.0, arc.eta);
  return arc_length(arc, 0.0, x);
}

FieldValue RegionDecomposition::v_field(Point p, int N) const {
  const Classification cls = classify(p, N);
  if (cls.tag == RegionTag::Outside) throw DomainError("v_field: point outside B_N");
  // The field is the chord normal of the triangle whose interior holds p, if
  // any; triangles of different levels have disjoint interiors.
  const ChordNode* cap = &tree_->root();
  bool inCap = in_cap(*cap, p);
  for (int m = 1; m <= N && inCap; ++m) {
    for (std::int64_t k = 2 * cap->index - 1; k <= 2 * cap->index; ++k) {
      const Triangle& t = triangles_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
      if (!in_closed_triangle(t.ccw, p)) continue;
      if (inner_distance(t.ccw, p) <= kBoundaryTol) return {};
      return {true, tree_->node(m, k).chord.normal()};
    }
    auto kids = tree_->children(*cap);
    const ChordNode* next = p.x <= kids->first->b ? kids->first
                            : p.x >= kids->second->a ? kids->second : nullptr;
    if (!next || !in_cap(*next, p)) break;
    cap = next;
  }
  if (std::abs(p.y) <= kBoundaryTol) return {};
  if (p.y > 0.0) return {true, boundary_.normal(boundary_.project(p))};
  return {true, Vec2{0.0, 1.0}};
}

VLimit RegionDecomposition::v_limit(Point p, int Nmax) const {
  VLimit r;
  FieldValue prev = v_field(p, 0);
  if (!prev.defined) {
    r.defined = false;
    return r;
  }
  int changes = 0;
  for (int N = 1; N <= Nmax; ++N) {
    const FieldValue cur = v_field(p, N);
    if (!cur.defined) {
      r.defined = false;
      return r;
    }
    if (cur.v.x != prev.v.x || cur.v.y != prev.v.y) {
      ++changes;
      r.stabilizationLevel = N;
    }
    prev = cur;
  }
  // Once inside a triangle interior a point never enters a later triangle,
  // so the field can switch at most once.
  r.stabilizes = changes <= 1;
  return r;
}

Interval RegionDecomposition::root_interval(int N, std::int64_t k) const {
  tree_->node(N, k);
  return rootIntervals_[static_cast<std::size_t>(N)][static_cast<std::size_t>(k - 1)];
}

double RegionDecomposition::cap_height(int N, std::int64_t k) const {
  const ChordNode& n = tree_->node(N, k);
  if (boundary_.is_disc()) {
    const double R = boundary_.radius();
    const double h = 0.5 * n.chord.len;
    return R - std::sqrt(R * R - h * h);
  }
  double best = 0.0;
  constexpr int kSamples = 256;
  const ConcaveArc& arc = tree_->curve();
  for (int i = 0; i <= kSamples; ++i) {
    const Point q = arc.point(n.a + (n.b - n.a) * i / kSamples);
    best = std::max(best, cross(n.chord.dir(), q - n.chord.pa));
  }
  return best;
}

LipschitzRecipe lipschitz_recipe(const RegionDecomposition& regions, int N) {
  const CantorTree& tree = regions.tree();
  const ConcaveArc& arc = tree.curve();
  LipschitzRecipe r;
  r.C = arc.supFpp * (2.0 * arc.supFp + arc.supFpp * arc.eta);
  const double mu = tree.stats(N).mu;
  r.aN = mu * (1.0 + r.C * mu);
  const double g = std::pow(2.0 / 3.0, N);
  r.aNNominal = g * (1.0 + r.C * g);
  const auto& nodes = tree.level(N);
  for (const auto& n : nodes) {
    const double d = regions.cap_height(N, n.index);
    const double factor = regions.boundary().is_disc()
                              ? d / (regions.boundary().radius() - d)
                              : d * arc.supFpp / (1.0 - d * arc.supFpp);
    r.bN = std::max(r.bN, factor);
  }
  r.aTilde = std::max(r.aN * (1.0 + r.C * r.aN), r.bN);
  r.cN = (1.0 + r.aTilde) * (1.0 + r.C * r.aTilde) - 1.0;
  return r;
}

LipschitzProbe lipschitz_probe(const RegionDecomposition& regions, int N,
                               std::int64_t samples, std::uint64_t seed) {
  if (N < 1 || N > regions.depth()) throw DomainError("lipschitz_probe: level out of range");
  const CantorTree& tree = regions.tree();
  const ConcaveArc& arc = tree.curve();
  const auto& nodes = tree.level(N);
  const auto& tris = regions.triangles(N);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);

  LipschitzProbe out;
  out.recipe = lipschitz_recipe(regions, N);
  const std::int64_t maxAttempts = 50 * samples + 1000;
  for (std::int64_t attempt = 0; attempt < maxAttempts && out.pairs < samples; ++attempt) {
    const std::size_t i = pick(rng);
    const ChordNode& n = nodes[i];
    Point x;
    const double piece = U(rng);
    if (piece < 1.0 / 3.0) {
      const double xa = n.a + U(rng) * (n.b - n.a);
      const double chordY =
          n.chord.pa.y + (xa - n.chord.pa.x) * (n.chord.pb.y - n.chord.pa.y) / (n.chord.pb.x - n.chord.pa.x);
      x = {xa, chordY + U(rng) * (arc.f(xa) - chordY)};
    } else if (piece < 2.0 / 3.0) {
      double r1 = U(rng), r2 = U(rng);
      if (r1 + r2 > 1.0) {
        r1 = 1.0 - r1;
        r2 = 1.0 - r2;
      }
      const auto& t = tris[i].ccw;
      x = t[0] + (t[1] - t[0]) * r1 + (t[2] - t[0]) * r2;
    } else {
      const Interval J = regions.root_interval(N, n.index);
      x = {J.lo + U(rng) * J.length(), -2.0 * J.length() * U(rng)};
    }
    // Expansion happens along the chord, so directions are drawn log-uniformly
    // close to it; uniform directions almost never hit the maximum.
    const double radius = n.chord.len * std::pow(10.0, -3.0 + 2.0 * U(rng));
    const Vec2 u = n.chord.dir();
    const double offset = std::numbers::pi * std::pow(10.0, -6.0 + 6.0 * U(rng));
    const double theta = std::atan2(u.y, u.x) + (U(rng) < 0.5 ? offset : -offset) +
                         (U(rng) < 0.5 ? 0.0 : std::numbers::pi);
    const Point y = x + Vec2{std::cos(theta), std::sin(theta)} * radius;
    const Classification cx = regions.classify(x, N);
    const Classification cy = regions.classify(y, N);
    if (cx.tag == RegionTag::Outside || cy.tag == RegionTag::Outside) continue;
    if (cx.component != n.index || cy.component != n.index) continue;
    const double ax = std::clamp(regions.psi(x, N).x, 0.0, arc.eta);
    const double ay = std::clamp(regions.psi(y, N).x, 0.0, arc.eta);
    const double num = arc_length(arc, std::min(ax, ay), std::max(ax, ay));
    const double den = dist(x, y);
    if (den <= 0.0) continue;
    out.maxRatio = std::max(out.maxRatio, num / den);
    ++out.pairs;
  }
  return out;
}

}  // namespace lg
