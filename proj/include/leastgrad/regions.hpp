#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "leastgrad/cantor.hpp"
#include "leastgrad/curve.hpp"
#include "leastgrad/vec.hpp"

namespace lg {

// Ordered by tie-break priority: a point on a shared boundary gets the
// smallest tag it qualifies for.
enum class RegionTag : int { Cap = 0, Triangle = 1, Strip = 2, Outside = 3 };

const char* to_string(RegionTag tag);

struct Classification {
  RegionTag tag = RegionTag::Outside;
  // Index k of the component B_k^N containing the point; 0 when outside.
  std::int64_t component = 0;
};

// Right triangle with the child chord as a leg and its hypotenuse on the
// parent chord. Vertices are stored counter-clockwise.
struct Triangle {
  int level = 0;
  std::int64_t index = 0;
  Point rightAngle;  // inner endpoint of the child chord
  Point outer;       // endpoint shared with the parent chord
  Point foot;        // other end of the hypotenuse
  // Hypotenuse as a parameter interval on the parent chord.
  double hypStart = 0.0;
  double hypEnd = 0.0;
  double parentLen = 0.0;
  double rightAngleError = 0.0;  // |angle at rightAngle - pi/2| in radians
  std::array<Point, 3> ccw;

  double hypLen() const { return hypEnd - hypStart; }
};

// Triangles of level N >= 1 built from the explicit x4/x5 formulas in each
// parent frame. Throws VerificationError when a right angle is off by more
// than 1e-9 rad or a hypotenuse reaches half of its parent chord.
std::vector<Triangle> triangles_of_level(const CantorTree& tree, int N);

// Exact separating-axis test on closed triangles (rational arithmetic).
bool triangles_disjoint(const Triangle& s, const Triangle& t);

struct DisjointnessReport {
  bool disjoint = true;
  std::int64_t pairs = 0;       // pairs examined
  std::int64_t exactTests = 0;  // pairs whose boxes overlapped
  double minBoxGap = 0.0;       // smallest box separation among box-separated pairs
};
DisjointnessReport check_disjoint(const std::vector<Triangle>& tris);

struct FieldValue {
  bool defined = false;  // false on region boundaries (a null set)
  Vec2 v;
};

struct VLimit {
  bool defined = true;
  bool stabilizes = false;
  int stabilizationLevel = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

class RegionDecomposition {
 public:
  explicit RegionDecomposition(std::shared_ptr<const CantorTree> tree);
  explicit RegionDecomposition(CantorTree tree);

  const CantorTree& tree() const { return *tree_; }
  const DomainBoundary& boundary() const { return boundary_; }
  int depth() const { return tree_->depth(); }
  const std::vector<Triangle>& triangles(int N) const;

  Classification classify(Point p, int N) const;
  // Boundary point reached by the projection cascade. DomainError outside B_N.
  Point psi(Point p, int N) const;
  // Arc length from A to psi(p, N).
  double pi_arc_coordinate(Point p, int N) const;
  FieldValue v_field(Point p, int N) const;
  VLimit v_limit(Point p, int Nmax) const;

  // Abscissas on the root chord whose vertical strip cascades into the
  // hypotenuse of node (N, k); for N = 0 this is the whole root chord.
  Interval root_interval(int N, std::int64_t k) const;
  // Largest distance between the arc and the chord of node (N, k).
  double cap_height(int N, std::int64_t k) const;
  // Whether p lies in the closed cap of node (N, k).
  bool in_cap(const ChordNode& n, Point p) const;

 private:
  struct Walk {
    Classification cls;
    Point chordPoint;  // image on a level-N chord (triangles and strips)
  };
  Walk walk(Point p, int N) const;
  void init();

  std::shared_ptr<const CantorTree> tree_;
  DomainBoundary boundary_;
  std::vector<std::vector<Triangle>> triangles_;  // index 0 unused
  std::vector<std::vector<Interval>> rootIntervals_;
};

struct LipschitzRecipe {
  double C = 0.0;       // sup|f''| (2 sup|f'| + sup|f''| eta)
  double aN = 0.0;      // from the measured longest chord
  double aNNominal = 0.0; // from (2/3)^N
  double bN = 0.0;      // projection factor on the caps
  double aTilde = 0.0;
  double cN = 0.0;      // 1 + cN = (1 + aTilde)(1 + C aTilde)
};
LipschitzRecipe lipschitz_recipe(const RegionDecomposition& regions, int N);

struct LipschitzProbe {
  double maxRatio = 0.0;
  std::int64_t pairs = 0;
  LipschitzRecipe recipe;
};
// Samples pairs inside one component B_k^N and returns the largest ratio
// |Pi(x) - Pi(y)| / |x - y|.
LipschitzProbe lipschitz_probe(const RegionDecomposition& regions, int N,
                               std::int64_t samples, std::uint64_t seed = 1);

}  // namespace lg
