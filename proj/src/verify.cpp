#include "leastgrad/verify.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>
#include <string>

#include "leastgrad/errors.hpp"
#include "leastgrad/geometry.hpp"
#include "leastgrad/raster.hpp"

namespace lg {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::string level_key(const char* stem, int N) { return std::string(stem) + "." + std::to_string(N); }

Rational exact_chord_sum(const CantorTree& tree, int N) {
  Rational s = 0;
  for (const auto& n : tree.level(N)) s += Rational(n.chord.len);
  return s;
}

Rational one_minus_two_thirds_pow(int k) {
  Rational p(1);
  for (int i = 0; i < k; ++i) p *= Rational(2, 3);
  return Rational(1) - p;
}

}  // namespace

CheckResult check_chord_contraction(const CantorTree& tree, int depth) {
  CheckResult c;
  c.name = "tree.chord-contraction";
  c.anchor = "chord-contraction";
  double worstRatio = 0.0, worstLevelSlack = INFINITY;
  const double mu0 = tree.stats(0).mu;
  for (int N = 1; N <= depth; ++N) {
    for (const auto& n : tree.level(N)) {
      worstRatio = std::max(worstRatio, n.chord.len / tree.parent(n)->chord.len);
    }
    const double bound = std::pow(2.0 / 3.0, N) * mu0;
    worstLevelSlack = std::min(worstLevelSlack, (bound - tree.stats(N).mu) / bound);
  }
  const bool strict = worstRatio < 2.0 / 3.0;
  c.measured = {{"worstChildToParent", worstRatio}, {"levels", depth},
                {"mu." + std::to_string(depth), tree.stats(depth).mu}};
  c.bounds = {{"childToParentBelow", 2.0 / 3.0}, {"muBound", std::pow(2.0 / 3.0, depth) * mu0}};
  c.margin = std::min(2.0 / 3.0 - worstRatio, worstLevelSlack);
  c.pass = strict && worstLevelSlack >= 0.0;
  return c;
}

CheckResult check_fatness(const CantorTree& tree, int depth) {
  CheckResult c;
  c.name = "tree.fatness";
  c.anchor = "fatness-lower-bound";
  if (depth < 1) throw DomainError("check_fatness: depth must be at least 1");
  bool ok = true;
  double worst = INFINITY;
  std::vector<Rational> sums;
  for (int N = 0; N <= depth; ++N) sums.push_back(exact_chord_sum(tree, N));
  for (int N = 0; N < depth; ++N) {
    const Rational bound = sums[N] * one_minus_two_thirds_pow(N);
    if (!(sums[N + 1] >= bound)) ok = false;
    if (N >= 1) worst = std::min(worst, static_cast<double>((sums[N + 1] - bound) / sums[N]));
  }
  Rational product = 1;
  for (int k = 1; k < depth; ++k) product *= one_minus_two_thirds_pow(k);
  const Rational lower = sums[1] * product;
  const bool finalOk = sums[depth] >= lower && lower > 0;
  c.measured = {{"c.1", static_cast<double>(sums[1])},
                {"c." + std::to_string(depth), static_cast<double>(sums[depth])},
                {"worstRelativeStepSlack", worst}};
  c.bounds = {{"lowerBound." + std::to_string(depth), static_cast<double>(lower)}};
  c.margin = std::min(worst, static_cast<double>((sums[depth] - lower) / sums[1]));
  c.pass = ok && finalOk;
  c.note = "comparisons in exact rational arithmetic";
  return c;
}

CheckResult check_triangle_separation(const RegionDecomposition& regions, int depth) {
  CheckResult c;
  c.name = "regions.triangle-separation";
  c.anchor = "triangle-separation";
  double worstHyp = 0.0, worstAngle = 0.0;
  std::int64_t pairs = 0, exact = 0;
  bool disjoint = true;
  for (int N = 1; N <= depth; ++N) {
    const auto& tris = regions.triangles(N);
    for (const auto& t : tris) {
      worstHyp = std::max(worstHyp, t.hypLen() / (0.5 * t.parentLen));
      worstAngle = std::max(worstAngle, t.rightAngleError);
    }
    const DisjointnessReport d = check_disjoint(tris);
    pairs += d.pairs;
    exact += d.exactTests;
    disjoint = disjoint && d.disjoint;
  }
  c.measured = {{"worstHypotenuseOverHalfParent", worstHyp},
                {"worstRightAngleError", worstAngle},
                {"pairs", static_cast<double>(pairs)},
                {"exactTests", static_cast<double>(exact)},
                {"levels", depth}};
  c.bounds = {{"hypotenuseOverHalfParentBelow", 1.0}, {"rightAngleError", 1e-9}};
  c.margin = 1.0 - worstHyp;
  c.pass = disjoint && worstHyp < 1.0 && worstAngle <= 1e-9;
  return c;
}

namespace {

std::vector<std::pair<double, double>> random_subchords(const ConcaveArc& arc, int samples,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, arc.eta);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < samples) {
    double a = U(rng), b = U(rng);
    if (a > b) std::swap(a, b);
    if (b > a) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

CheckResult check_chord_arc(const ConcaveArc& arc, int samples, std::uint64_t seed) {
  CheckResult c;
  c.name = "geometry.chord-arc";
  c.anchor = "chord-arc-inequality";
  double worst = INFINITY;
  int failures = 0;
  for (const auto& [a, b] : random_subchords(arc, samples, seed)) {
    try {
      const ChordArcResult r = chord_arc_check(arc, a, b, 1e-10);
      worst = std::min({worst, r.arcLen - r.chordLen, r.upperBound - r.arcLen});
    } catch (const VerificationError&) {
      ++failures;
    }
  }
  c.measured = {{"samples", samples}, {"failures", failures}, {"worstSlack", worst}};
  c.bounds = {{"tolerance", 1e-10}};
  c.margin = failures ? -1.0 : worst + 1e-10;
  c.pass = failures == 0;
  return c;
}

CheckResult check_sagitta(const ConcaveArc& arc, int samples, std::uint64_t seed) {
  CheckResult c;
  c.name = "geometry.sagitta";
  c.anchor = "sagitta-bound";
  double worst = INFINITY, worstRatio = 0.0;
  for (const auto& [a, b] : random_subchords(arc, samples, seed + 1)) {
    const SagittaResult r = sagitta_bound_check(arc, make_chord(arc, a, b), 2000);
    worst = std::min(worst, r.bound + r.roundoff - r.maxHeight);
    if (r.bound > 0.0) worstRatio = std::max(worstRatio, r.maxHeight / r.bound);
  }
  c.measured = {{"samples", samples}, {"worstHeightOverBound", worstRatio}, {"worstSlack", worst}};
  c.bounds = {{"heightOverBoundAtMost", 1.0}};
  c.margin = worst;
  c.pass = worst >= 0.0;
  return c;
}

CheckResult check_lipschitz(const RegionDecomposition& regions, int firstLevel, int lastLevel,
                            std::int64_t samples, std::uint64_t seed) {
  CheckResult c;
  c.name = "regions.lipschitz";
  c.anchor = "projection-lipschitz";
  bool ok = true;
  double margin = INFINITY, previous = INFINITY;
  for (int N = firstLevel; N <= lastLevel; ++N) {
    const LipschitzProbe p = lipschitz_probe(regions, N, samples, seed + static_cast<std::uint64_t>(N));
    c.measured.emplace_back(level_key("maxRatio", N), p.maxRatio);
    c.measured.emplace_back(level_key("pairs", N), static_cast<double>(p.pairs));
    c.bounds.emplace_back(level_key("onePlusC", N), 1.0 + p.recipe.cN);
    margin = std::min(margin, 1.0 + p.recipe.cN - p.maxRatio);
    if (p.maxRatio > 1.0 + p.recipe.cN || p.pairs < samples) ok = false;
    if (p.maxRatio > previous) {
      ok = false;
      margin = std::min(margin, previous - p.maxRatio);
    }
    previous = p.maxRatio;
  }
  c.margin = margin;
  c.pass = ok;
  c.note = "per-level maximum must also be non-increasing";
  return c;
}

CheckResult check_rad_decay(const RegionDecomposition& regions, int firstLevel, int lastLevel,
                            double resolution, double maxSlope) {
  CheckResult c;
  c.name = "regions.rad-decay";
  c.anchor = "inscribed-radius-decay";
  if (lastLevel - firstLevel < 1) throw DomainError("check_rad_decay: need at least two levels");
  if (resolution <= 0.0) resolution = min_chord(regions.tree(), lastLevel) / 8.0;
  std::vector<double> xs, ys;
  bool monotone = true;
  double previous = INFINITY, errorBound = 0.0;
  for (int N = firstLevel; N <= lastLevel; ++N) {
    const RadEstimate r = rad_estimate(regions, N, resolution);
    c.measured.emplace_back(level_key("rad", N), r.rad);
    c.measured.emplace_back(level_key("radStrip", N), r.radStrip);
    c.measured.emplace_back(level_key("radCapOrTriangle", N), r.radBounded);
    if (!(r.rad < previous)) monotone = false;
    previous = r.rad;
    errorBound = r.errorBound;
    xs.push_back(N);
    ys.push_back(std::log2(std::max(r.rad, 1e-300)));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  c.measured.emplace_back("log2Slope", slope);
  c.measured.emplace_back("resolution", resolution);
  c.measured.emplace_back("errorBound", errorBound);
  c.bounds = {{"log2SlopeAtMost", maxSlope}};
  c.margin = maxSlope - slope;
  c.pass = monotone && slope <= maxSlope;
  c.note = "strips carry the inscribed disc at every level";
  return c;
}

VerificationReport run_verification(const ConcaveArc& arc, const VerifyConfig& cfg) {
  if (cfg.depth < cfg.firstTrendLevel + 1 || cfg.depth > kMaxDepth || cfg.contractionDepth < 1 ||
      cfg.contractionDepth > kMaxDepth || cfg.separationDepth < 1 ||
      cfg.separationDepth > kMaxDepth) {
    throw DomainError("run_verification: level settings out of range");
  }
  VerificationReport rep = validate_hypotheses(arc);
  if (!rep.all_pass()) {
    CheckResult skipped;
    skipped.name = "tree.construction";
    skipped.anchor = "construction-preconditions";
    skipped.pass = false;
    skipped.margin = -1.0;
    skipped.note = "curve hypotheses fail; tree, region and Lipschitz checks not run";
    rep.checks.push_back(skipped);
    return rep;
  }
  const int treeDepth = std::max({cfg.depth, cfg.contractionDepth, cfg.separationDepth});
  const auto tree = std::make_shared<const CantorTree>(build_tree(arc, treeDepth));
  const RegionDecomposition regions(tree);
  rep.checks.push_back(check_chord_contraction(*tree, cfg.contractionDepth));
  rep.checks.push_back(check_fatness(*tree, cfg.contractionDepth));
  rep.checks.push_back(check_triangle_separation(regions, cfg.separationDepth));
  rep.checks.push_back(check_chord_arc(arc, cfg.chordSamples, cfg.seed));
  rep.checks.push_back(check_sagitta(arc, cfg.chordSamples, cfg.seed));
  rep.checks.push_back(
      check_lipschitz(regions, cfg.firstTrendLevel, cfg.depth, cfg.lipschitzSamples, cfg.seed));
  rep.checks.push_back(
      check_rad_decay(regions, cfg.firstTrendLevel, cfg.depth, cfg.radResolution, cfg.maxRadSlope));
  if (cfg.modelSuite) rep.append(model_square_suite(cfg.square));
  return rep;
}

}  // namespace lg
