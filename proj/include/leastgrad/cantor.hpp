#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leastgrad/curve.hpp"
#include "leastgrad/geometry.hpp"

namespace lg {

inline constexpr int kMaxDepth = 16;

struct ChordNode {
  int level = 0;
  std::int64_t index = 1;  // 1-based position within the level
  double a = 0.0;          // abscissas in the arc frame
  double b = 0.0;
  Chord chord;
  double arcLen = 0.0;
};

struct LevelStats {
  double mu = 0.0;  // longest chord of the level
  double c = 0.0;   // total chord length of the level
};

struct MeasureBounds {
  double arcSum = 0.0;
  double lowerBound = 0.0;
};

class CantorTree {
 public:
  CantorTree(ConcaveArc arc, std::vector<std::vector<ChordNode>> levels);

  const ConcaveArc& curve() const { return arc_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const ChordNode& root() const { return levels_.front().front(); }
  const std::vector<ChordNode>& level(int N) const;
  const ChordNode& node(int N, std::int64_t k) const;
  std::optional<std::pair<const ChordNode*, const ChordNode*>> children(
      const ChordNode& n) const;
  const ChordNode* parent(const ChordNode& n) const;
  const LevelStats& stats(int N) const;

 private:
  ConcaveArc arc_;
  std::vector<std::vector<ChordNode>> levels_;
  std::vector<LevelStats> stats_;
};

// Removes the centered middle of length len^2 from the node's chord and
// returns the two outer sub-arcs with their chords.
std::pair<ChordNode, ChordNode> subdivide(const ChordNode& node, const ConcaveArc& arc);

ChordNode root_node(const ConcaveArc& arc);

// Full binary tree to the given depth (at most kMaxDepth).
CantorTree build_tree(const ConcaveArc& arc, int depth);

LevelStats chord_stats(const CantorTree& tree, int N);

// prod_{k=1}^{N-1} (1 - (2/3)^k), the fatness factor.
double fatness_product(int N);

// Sum of arc lengths at level N and the lower bound c_1 * fatness_product(N).
// Throws VerificationError when the arc sum falls below the chord sum.
MeasureBounds measure_bounds(const CantorTree& tree, int N);

// Hierarchical text export with 17 significant digits; import_tree rebuilds
// the preset curve from the header and the nodes from the body.
std::string export_tree(const CantorTree& tree);
CantorTree import_tree(const std::string& text);

}  // namespace lg
