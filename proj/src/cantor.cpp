#include "leastgrad/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "leastgrad/errors.hpp"
#include "leastgrad/numeric.hpp"
#include "leastgrad/parallel.hpp"

namespace lg {

namespace {

ChordNode make_node(const ConcaveArc& arc, int level, std::int64_t index, double a,
                    double b) {
  ChordNode n;
  n.level = level;
  n.index = index;
  n.a = a;
  n.b = b;
  n.chord = make_chord(arc, a, b);
  n.arcLen = arc_length(arc, a, b);
  return n;
}

LevelStats compute_stats(const std::vector<ChordNode>& nodes) {
  LevelStats s;
  CompensatedSum c;
  for (const auto& n : nodes) {
    s.mu = std::max(s.mu, n.chord.len);
    c.add(n.chord.len);
  }
  s.c = c.value();
  return s;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CantorTree::CantorTree(ConcaveArc arc, std::vector<std::vector<ChordNode>> levels)
    : arc_(std::move(arc)), levels_(std::move(levels)) {
  if (levels_.empty() || levels_.front().size() != 1) {
    throw InternalError("CantorTree: level 0 must hold exactly the root");
  }
  for (std::size_t N = 0; N < levels_.size(); ++N) {
    if (levels_[N].size() != (std::size_t{1} << N)) {
      throw InternalError("CantorTree: level " + std::to_string(N) + " has wrong size");
    }
    stats_.push_back(compute_stats(levels_[N]));
  }
}

const std::vector<ChordNode>& CantorTree::level(int N) const {
  if (N < 0 || N > depth()) {
    throw DomainError("level " + std::to_string(N) + " outside [0, " +
                      std::to_string(depth()) + "]");
  }
  return levels_[static_cast<std::size_t>(N)];
}

const ChordNode& CantorTree::node(int N, std::int64_t k) const {
  const auto& lv = level(N);
  if (k < 1 || k > static_cast<std::int64_t>(lv.size())) {
    throw DomainError("node index out of range");
  }
  return lv[static_cast<std::size_t>(k - 1)];
}

std::optional<std::pair<const ChordNode*, const ChordNode*>> CantorTree::children(
    const ChordNode& n) const {
  if (n.level >= depth()) return std::nullopt;
  const auto& next = levels_[static_cast<std::size_t>(n.level + 1)];
  const auto i = static_cast<std::size_t>(2 * n.index - 2);
  return std::make_pair(&next[i], &next[i + 1]);
}

const ChordNode* CantorTree::parent(const ChordNode& n) const {
  if (n.level == 0) return nullptr;
  return &levels_[static_cast<std::size_t>(n.level - 1)]
                 [static_cast<std::size_t>((n.index + 1) / 2 - 1)];
}

const LevelStats& CantorTree::stats(int N) const {
  level(N);
  return stats_[static_cast<std::size_t>(N)];
}

ChordNode root_node(const ConcaveArc& arc) { return make_node(arc, 0, 1, 0.0, arc.eta); }

std::pair<ChordNode, ChordNode> subdivide(const ChordNode& node, const ConcaveArc& arc) {
  const double len = node.chord.len;
  if (!(len < 1.0)) throw RefusedError("subdivide: chord length must be below 1");
  const double t1 = 0.5 * (len - len * len);
  const double t2 = 0.5 * (len + len * len);
  double x1 = 0.0, x2 = 0.0;
  try {
    x1 = perpendicular_abscissa(arc, node.chord, node.chord.at(t1));
    x2 = perpendicular_abscissa(arc, node.chord, node.chord.at(t2));
  } catch (const InternalError& e) {
    throw ConstructionError(std::string("subdivide: ") + e.what());
  } catch (const DomainError& e) {
    throw ConstructionError(std::string("subdivide: ") + e.what());
  }
  if (!(node.a < x1 && x1 < x2 && x2 < node.b)) {
    throw ConstructionError("subdivide: children are not disjoint sub-intervals");
  }
  return {make_node(arc, node.level + 1, 2 * node.index - 1, node.a, x1),
          make_node(arc, node.level + 1, 2 * node.index, x2, node.b)};
}

CantorTree build_tree(const ConcaveArc& arc, int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw RefusedError("build: depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
  }
  if (!hypotheses_hold(arc)) throw RefusedError("build: curve hypotheses not validated");
  std::vector<std::vector<ChordNode>> levels;
  levels.push_back({root_node(arc)});
  for (int N = 0; N < depth; ++N) {
    const auto& parents = levels.back();
    std::vector<ChordNode> next(parents.size() * 2);
    parallel_for(parents.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        auto kids = subdivide(parents[i], arc);
        next[2 * i] = std::move(kids.first);
        next[2 * i + 1] = std::move(kids.second);
      }
    });
    levels.push_back(std::move(next));
  }
  return CantorTree(arc, std::move(levels));
}

LevelStats chord_stats(const CantorTree& tree, int N) { return tree.stats(N); }

double fatness_product(int N) {
  double p = 1.0;
  for (int k = 1; k <= N - 1; ++k) p *= 1.0 - std::pow(2.0 / 3.0, k);
  return p;
}

MeasureBounds measure_bounds(const CantorTree& tree, int N) {
  const auto& nodes = tree.level(N);
  CompensatedSum s;
  for (const auto& n : nodes) s.add(n.arcLen);
  MeasureBounds m;
  m.arcSum = s.value();
  m.lowerBound =
      N == 0 ? tree.stats(0).c : tree.stats(1).c * fatness_product(N);
  const double c = tree.stats(N).c;
  if (m.arcSum < c) {
    throw VerificationError("arc sum below chord sum",
                            {{"arcSum", m.arcSum}, {"c", c}, {"level", N}});
  }
  return m;
}

std::string export_tree(const CantorTree& tree) {
  const ConcaveArc& arc = tree.curve();
  std::string out;
  out += "leastgrad-cantor-tree 1\n";
  out += "curve " + arc.name + "\n";
  out += "eta " + fmt17(arc.eta) + "\n";
  out += "param " + fmt17(arc.param) + "\n";
  out += "depth " + std::to_string(tree.depth()) + "\n";
  for (int N = 0; N <= tree.depth(); ++N) {
    const auto& s = tree.stats(N);
    out += "level " + std::to_string(N) + " mu " + fmt17(s.mu) + " c " + fmt17(s.c) + "\n";
  }
  // Depth-first, children indented under their parent.
  std::vector<const ChordNode*> stack{&tree.root()};
  while (!stack.empty()) {
    const ChordNode* n = stack.back();
    stack.pop_back();
    out += std::string(static_cast<std::size_t>(2 * n->level), ' ');
    out += "node " + std::to_string(n->level) + " " + std::to_string(n->index) + " " +
           fmt17(n->a) + " " + fmt17(n->b) + " " + fmt17(n->chord.len) + " " +
           fmt17(n->arcLen) + "\n";
    if (auto kids = tree.children(*n)) {
      stack.push_back(kids->second);
      stack.push_back(kids->first);
    }
  }
  return out;
}

CantorTree import_tree(const std::string& text) {
  std::istringstream in(text);
  std::string word, curve;
  int version = 0, depth = -1;
  double eta = 0.0, param = 0.0;
  if (!(in >> word >> version) || word != "leastgrad-cantor-tree" || version != 1) {
    throw DomainError("import_tree: not a tree export");
  }
  if (!(in >> word >> curve) || word != "curve") throw DomainError("import_tree: missing curve");
  if (curve != "circle" && curve != "parabola") {
    throw DomainError("import_tree: only preset curves can be reloaded");
  }
  std::string tok;
  if (!(in >> word >> tok) || word != "eta") throw DomainError("import_tree: missing eta");
  eta = std::stod(tok);
  if (!(in >> word >> tok) || word != "param") throw DomainError("import_tree: missing param");
  param = std::stod(tok);
  if (!(in >> word >> depth) || word != "depth" || depth < 0 || depth > kMaxDepth) {
    throw DomainError("import_tree: bad depth");
  }
  ConcaveArc arc = make_preset_arc(curve, eta, param);
  std::vector<std::vector<ChordNode>> levels(static_cast<std::size_t>(depth) + 1);
  for (int N = 0; N <= depth; ++N) levels[static_cast<std::size_t>(N)].resize(std::size_t{1} << N);
  std::vector<std::vector<bool>> seen(levels.size());
  for (std::size_t N = 0; N < levels.size(); ++N) seen[N].assign(levels[N].size(), false);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> word)) continue;
    if (word == "level") continue;
    if (word != "node") throw DomainError("import_tree: unexpected line '" + line + "'");
    ChordNode n;
    std::string sa, sb, sl, sr;
    if (!(ls >> n.level >> n.index >> sa >> sb >> sl >> sr)) {
      throw DomainError("import_tree: malformed node line");
    }
    if (n.level < 0 || n.level > depth || n.index < 1 || n.index > (std::int64_t{1} << n.level)) {
      throw DomainError("import_tree: node out of range");
    }
    n.a = std::stod(sa);
    n.b = std::stod(sb);
    n.chord = make_chord(arc, n.a, n.b);
    n.chord.len = std::stod(sl);
    n.arcLen = std::stod(sr);
    const auto L = static_cast<std::size_t>(n.level), k = static_cast<std::size_t>(n.index - 1);
    if (seen[L][k]) throw DomainError("import_tree: duplicate node");
    seen[L][k] = true;
    levels[L][k] = n;
  }
  for (const auto& lvl : seen) {
    if (std::find(lvl.begin(), lvl.end(), false) != lvl.end()) {
      throw DomainError("import_tree: missing nodes");
    }
  }
  return CantorTree(std::move(arc), std::move(levels));
}

}  // namespace lg
