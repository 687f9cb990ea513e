#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "leastgrad/errors.hpp"
#include "leastgrad/geometry.hpp"
#include "leastgrad/lab.hpp"
#include "leastgrad/parallel.hpp"
#include "leastgrad/raster.hpp"
#include "leastgrad/verify.hpp"
#include "svg.hpp"

namespace lgcli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw lg::DomainError("cannot write " + path.string());
  os << text;
}

// Timestamps live apart from the report so identical configs give identical
// reports.
class Session {
 public:
  Session(std::string command, const RunOptions& o)
      : command_(std::move(command)), dir_(o.outDir), started_(utc_now()),
        t0_(std::chrono::steady_clock::now()) {
    fs::create_directories(dir_);
  }
  const fs::path& dir() const { return dir_; }
  void finish(int exitCode) const {
    Json m = Json::object();
    m["command"] = command_;
    m["started"] = started_;
    m["finished"] = utc_now();
    m["elapsedSeconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    m["threads"] = lg::worker_count();
    m["exitCode"] = exitCode;
    write_text(dir_ / "metadata.json", m.dump(2) + "\n");
  }

 private:
  std::string command_;
  fs::path dir_;
  std::string started_;
  std::chrono::steady_clock::time_point t0_;
};

lg::ConcaveArc make_curve(const RunConfig& c) {
  return lg::make_preset_arc(c.curve.preset, c.curve.eta, c.curve.param);
}

Json curve_json(const RunConfig& c) {
  Json j = Json::object();
  j["preset"] = c.curve.preset;
  j["eta"] = c.curve.eta;
  j["param"] = c.curve.param;
  return j;
}

void print_summary(const lg::VerificationReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.anchor << "] margin "
              << c.margin << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
  }
}

lg::CheckResult simple_check(std::string name, std::string anchor, bool pass, double margin,
                             lg::NamedValues measured, lg::NamedValues bounds = {},
                             std::string note = {}) {
  lg::CheckResult c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.pass = pass;
  c.margin = margin;
  c.measured = std::move(measured);
  c.bounds = std::move(bounds);
  c.note = std::move(note);
  return c;
}

}  // namespace

int cmd_build(const RunConfig& config, const RunOptions& options) {
  Session session("build", options);
  const lg::ConcaveArc arc = make_curve(config);
  lg::VerificationReport rep = lg::validate_hypotheses(arc);
  int code = kOk;
  if (rep.all_pass()) {
    const auto tree = std::make_shared<const lg::CantorTree>(lg::build_tree(arc, config.verify.depth));
    const lg::RegionDecomposition regions(tree);
    write_text(session.dir() / "tree.txt", lg::export_tree(*tree));
    write_text(session.dir() / "tree.svg", tree_svg(regions));
    if (tree->depth() >= 1) {
      rep.checks.push_back(lg::check_chord_contraction(*tree, tree->depth()));
      rep.checks.push_back(lg::check_fatness(*tree, tree->depth()));
    }
    std::cout << "built depth " << tree->depth() << " tree: " << tree->level(tree->depth()).size()
              << " leaf arcs, arc sum " << lg::measure_bounds(*tree, tree->depth()).arcSum << "\n";
  } else {
    std::cerr << "curve hypotheses fail; no tree built (reduce eta or the curvature)\n";
  }
  if (!rep.all_pass()) code = kCheckFailure;
  write_text(session.dir() / "report.json", rep.to_json());
  print_summary(rep);
  session.finish(code);
  return code;
}

int cmd_verify(const RunConfig& config, const RunOptions& options) {
  Session session("verify", options);
  const lg::ConcaveArc arc = make_curve(config);
  const lg::VerificationReport rep = lg::run_verification(arc, config.verify);
  write_text(session.dir() / "report.json", rep.to_json());
  if (lg::hypotheses_hold(arc)) {
    const int N = config.verify.depth;
    const lg::RegionDecomposition regions(lg::build_tree(arc, N));
    const double res = lg::min_chord(regions.tree(), N) / 8.0;
    const lg::RasterMask mask = lg::rasterize(regions, N, res, lg::rad_window(regions, N, res));
    write_text(session.dir() / ("regions_level" + std::to_string(N) + ".rle"), lg::encode_mask(mask));
  }
  print_summary(rep);
  const int code = rep.all_pass() ? kOk : kCheckFailure;
  session.finish(code);
  return code;
}

namespace {

struct Scenario {
  std::unique_ptr<lg::Domain> domain;
  lg::BoundaryDatum datum;
  lg::GridField grid;
  std::shared_ptr<const lg::RegionDecomposition> regions;
};

Scenario make_scenario(const RunConfig& c) {
  const SolveSettings& s = c.solve;
  Scenario sc;
  const bool zero = s.datum == "zero";
  if (s.domain == "disc") {
    if (!zero && s.datum != "arc") throw ConfigError("config: disc domain takes datum arc or zero");
    sc.domain = std::make_unique<lg::DiscDomain>(lg::Point{0.0, 0.0}, 1.0);
    if (!zero) sc.datum = lg::disc_arc_datum(s.y0);
    sc.grid = lg::make_grid(*sc.domain, s.n);
  } else if (s.domain == "square") {
    if (!zero && s.datum != "interval") throw ConfigError("config: square domain takes datum interval or zero");
    sc.domain = std::make_unique<lg::SquareDomain>();
    if (!zero && s.intervalLo < s.intervalHi) sc.datum = {{{s.intervalLo, s.intervalHi}}, 0.0};
    sc.grid = lg::make_grid(*sc.domain, s.n);
  } else {
    if (!zero && s.datum != "cantor") throw ConfigError("config: arc-window domain takes datum cantor or zero");
    if (c.curve.preset != "circle") throw ConfigError("config: arc-window needs the circle preset");
    const lg::ConcaveArc arc = make_curve(c);
    sc.regions = std::make_shared<const lg::RegionDecomposition>(lg::build_tree(arc, s.level));
    auto disc = std::make_unique<lg::DiscDomain>(lg::disc_of(arc));
    if (!zero) sc.datum = lg::cantor_datum(sc.regions->tree(), s.level, *disc);
    const double depth = std::max(0.25 * s.epsilon * s.epsilon, 20.0 * s.windowH);
    sc.grid = lg::arc_window_grid(*sc.regions, depth, s.windowH);
    sc.domain = std::move(disc);
  }
  lg::apply_trace(sc.grid, *sc.domain, sc.datum, 0.0);
  return sc;
}

Json probe_json(const std::vector<lg::ProbeRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j = Json::object();
    j["n"] = r.n;
    j["h"] = r.h;
    j["tv"] = r.tv;
    j["l1Norm"] = r.l1Norm;
    j["l1Interior"] = r.l1Interior;
    j["datumL1"] = r.datumL1;
    j["gap"] = r.gap;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string probe_csv(const std::vector<lg::ProbeRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "n,h,tv,l1_norm,l1_interior,datum_l1,gap,iterations,converged\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.h << ',' << r.tv << ',' << r.l1Norm << ',' << r.l1Interior << ','
       << r.datumL1 << ',' << r.gap << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace

int cmd_solve(const RunConfig& config, const RunOptions& options) {
  Session session("solve", options);
  const SolveSettings& s = config.solve;
  Scenario sc = make_scenario(config);
  lg::SolverConfig solver;
  solver.maxIter = s.maxIter;
  solver.tolerance = s.tolerance;
  solver.checkpointEvery = s.checkpointEvery;
  solver.norm = s.anisotropic ? lg::TvNorm::Anisotropic : lg::TvNorm::Isotropic;

  lg::VerificationReport rep;
  Json out = Json::object();
  out["command"] = "solve";
  Json scenario = Json::object();
  scenario["domain"] = s.domain;
  scenario["datum"] = s.datum;
  scenario["tvNorm"] = s.anisotropic ? "anisotropic" : "isotropic";
  scenario["cells"] = Json::array({sc.grid.nx, sc.grid.ny});
  scenario["h"] = sc.grid.h;
  scenario["datumL1"] = sc.datum.l1_norm();
  if (sc.regions) scenario["curve"] = curve_json(config);
  out["scenario"] = scenario;

  bool converged = true;
  std::optional<lg::SolveResult> result;
  if (s.minimize) {
    result = lg::least_gradient_solve(sc.grid, solver);
    const lg::SolveReport& sr = result->report;
    converged = sr.converged;
    rep.checks.push_back(simple_check("solve.convergence", "least-gradient-solve", sr.converged,
                                      s.tolerance * (1.0 + sr.tv) - sr.primalDualGap,
                                      {{"tv", sr.tv},
                                       {"l1Norm", sr.l1Norm},
                                       {"gap", sr.primalDualGap},
                                       {"iterations", static_cast<double>(sr.iterations)}},
                                      {{"gapBelow", s.tolerance * (1.0 + sr.tv)}}));
    if (sc.datum.empty()) {
      rep.checks.push_back(simple_check("solve.zero-datum", "zero-datum", sr.tv == 0.0, 0.0 - sr.tv,
                                        {{"tv", sr.tv}}, {{"tv", 0.0}}));
    } else if (s.domain == "disc") {
      const double target = 2.0 * s.y0, x0 = std::sqrt(1.0 - s.y0 * s.y0);
      std::int64_t agree = 0, total = 0;
      const lg::GridField& f = result->field;
      for (int j = 1; j <= f.ny; ++j)
        for (int i = 1; i <= f.nx; ++i) {
          const std::size_t idx = f.index(i, j);
          if (!f.interior(idx)) continue;
          ++total;
          const double indicator = f.center(i, j).x > x0 ? 1.0 : 0.0;
          if (std::abs(f.value[idx] - indicator) < 0.5) ++agree;
        }
      const double rel = std::abs(sr.tv - target) / target;
      const double frac = total ? static_cast<double>(agree) / total : 0.0;
      rep.checks.push_back(simple_check("solve.disc-chord", "disc-chord-minimizer",
                                        rel <= 0.02 && frac >= 0.99, std::min(0.02 - rel, frac - 0.99),
                                        {{"tv", sr.tv}, {"relativeError", rel}, {"agreement", frac}},
                                        {{"chordLength", target}, {"relativeErrorAtMost", 0.02},
                                         {"agreementAtLeast", 0.99}}));
    }
    Json solve = Json::object();
    solve["tv"] = sr.tv;
    solve["l1Norm"] = sr.l1Norm;
    solve["l1Interior"] = sr.l1Interior;
    solve["iterations"] = sr.iterations;
    solve["primalDualGap"] = sr.primalDualGap;
    solve["converged"] = sr.converged;
    Json cps = Json::array();
    for (const auto& cp : sr.checkpoints) cps.push_back(Json::array({cp.iteration, cp.energy, cp.gap}));
    solve["checkpoints"] = cps;
    out["solve"] = solve;
    lg::write_field_binary(result->field, (session.dir() / "field.lgf").string());
    lg::write_field_csv(result->field, (session.dir() / "field.csv").string());
    write_text(session.dir() / "field.svg", field_svg(result->field));
    std::cout << "tv " << sr.tv << ", gap " << sr.primalDualGap << ", iterations " << sr.iterations
              << "\n";
  }

  if (s.giusti || s.coarea) {
    const lg::GiustiResult g = lg::giusti_extension(*sc.domain, sc.datum, s.epsilon, sc.grid);
    Json ext = Json::object();
    ext["epsilon"] = s.epsilon;
    ext["w11Norm"] = g.w11Norm;
    ext["tvPart"] = g.tvPart;
    ext["massPart"] = g.massPart;
    ext["datumL1"] = g.datumL1;
    ext["t0"] = g.t0;
    ext["t1"] = g.t1;
    out["extension"] = ext;
    // The bound is asserted for data with two jumps; with many jumps the
    // lateral cost of the outer layer grows with their number.
    if (s.domain != "arc-window" && !sc.datum.empty()) {
      const double bound = (1.0 + s.epsilon + 0.05) * g.datumL1;
      rep.checks.push_back(simple_check(
          "extension.upper-bound", "extension-upper-bound", g.w11Norm <= bound, bound - g.w11Norm,
          {{"w11Norm", g.w11Norm}, {"datumL1", g.datumL1}, {"t0", g.t0}, {"t1", g.t1}},
          {{"onePlusEpsilonPlusSlack", 1.0 + s.epsilon + 0.05}}));
    }
    lg::write_field_binary(g.field, (session.dir() / "extension.lgf").string());
    write_text(session.dir() / "extension.svg", field_svg(g.field));
    if (s.coarea) {
      if (!sc.regions) throw ConfigError("config: coarea needs domain arc-window with datum cantor");
      try {
        const lg::CoareaResult cr = lg::coarea_lower_check(g.field, *sc.regions, s.level, s.coareaTolerance);
        rep.checks.push_back(simple_check(
            "coarea.lower-bound", "coarea-lower-bound", true, cr.lhs - (1.0 - s.coareaTolerance) * cr.rhs,
            {{"lhs", cr.lhs}, {"rhs", cr.rhs}, {"arcSum", cr.arcSum}, {"cN", cr.cN},
             {"cells", static_cast<double>(cr.cells)}},
            {{"tolerance", s.coareaTolerance}}));
      } catch (const lg::VerificationError& e) {
        lg::NamedValues vals(e.values().begin(), e.values().end());
        rep.checks.push_back(simple_check("coarea.lower-bound", "coarea-lower-bound", false, -1.0,
                                          vals, {{"tolerance", s.coareaTolerance}}, e.what()));
      }
    }
  }

  if (s.probe) {
    std::vector<lg::ProbeRow> rows;
    lg::CheckResult pc;
    if (s.domain == "square") {
      rows = lg::nonattainment_probe_square(s.probeSizes, sc.datum.empty() ? 0.0 : s.intervalLo,
                                            sc.datum.empty() ? 0.0 : s.intervalHi, solver);
      bool tvDown = true, massDown = true;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        tvDown = tvDown && rows[i].tv <= rows[i - 1].tv;
        massDown = massDown && rows[i].l1Norm <= 0.7 * rows[i - 1].l1Norm;
      }
      const double limit = rows.back().datumL1;
      const double gapRel = limit > 0 ? rows.back().gap / limit : rows.back().gap;
      pc = simple_check("probe.nonattainment", "nonattainment-trend",
                        tvDown && massDown && gapRel <= 0.03 && gapRel >= 0.0, 0.03 - gapRel,
                        {{"finalTv", rows.back().tv}, {"finalGapRelative", gapRel},
                         {"finalL1", rows.back().l1Norm}},
                        {{"gapRelativeAtMost", 0.03}, {"l1RatioPerDoublingAtMost", 0.7}},
                        "tv decreasing toward the datum norm while the minimizer mass vanishes");
    } else if (s.domain == "arc-window") {
      rows = lg::nonattainment_probe_disc(*sc.regions, s.level, s.probeCellSizes, solver);
      const lg::CantorTree& tree = sc.regions->tree();
      const double lower = tree.stats(s.level).c * (1.0 - s.probeTolerance);
      const double upper = lg::measure_bounds(tree, s.level).arcSum * (1.0 + s.probeTolerance);
      double margin = INFINITY;
      for (const auto& r : rows) margin = std::min({margin, r.tv - lower, upper - r.tv});
      pc = simple_check("probe.cantor-band", "nonattainment-cantor-band", margin >= 0.0, margin,
                        {{"finalTv", rows.back().tv}}, {{"lower", lower}, {"upper", upper}});
    } else {
      for (int n : s.probeSizes) {
        lg::GridField g = lg::make_grid(*sc.domain, n);
        lg::apply_trace(g, *sc.domain, sc.datum, 0.0);
        const lg::SolveResult r = lg::least_gradient_solve(g, solver);
        lg::ProbeRow row;
        row.n = n;
        row.h = g.h;
        row.tv = r.report.tv;
        row.l1Norm = r.report.l1Norm;
        row.l1Interior = r.report.l1Interior;
        row.datumL1 = sc.datum.l1_norm();
        row.gap = row.tv - row.datumL1;
        row.iterations = r.report.iterations;
        row.converged = r.report.converged;
        rows.push_back(row);
      }
      pc = simple_check("probe.table", "nonattainment-trend", true, 0.0,
                        {{"finalTv", rows.back().tv}}, {}, "table only");
    }
    for (const auto& r : rows) converged = converged && r.converged;
    rep.checks.push_back(pc);
    out["probe"] = probe_json(rows);
    write_text(session.dir() / "probe.csv", probe_csv(rows));
  }

  const Json report = Json::parse(rep.to_json());
  out["passed"] = report["passed"];
  out["checks"] = report["checks"];
  write_text(session.dir() / "report.json", out.dump(2) + "\n");

  print_summary(rep);
  int code = kOk;
  if (!converged && !options.allowNonconverged) {
    std::cerr << "solver did not converge; rerun with more iterations or --allow-nonconverged\n";
    code = kNonConvergence;
  } else {
    bool ok = true;
    for (const auto& c : rep.checks)
      if (c.name != "solve.convergence" && !c.pass) ok = false;
    if (!ok) code = kCheckFailure;
  }
  session.finish(code);
  return code;
}

int cmd_report(const RunConfig&, const RunOptions& options) {
  const fs::path path = fs::path(options.outDir) / "report.json";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "no report at " << path.string() << "\n";
    return kMisuse;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  lg::VerificationReport rep;
  try {
    rep = lg::VerificationReport::from_json(ss.str());
  } catch (const std::exception& e) {
    std::cerr << "malformed report " << path.string() << ": " << e.what() << "\n";
    return kMisuse;
  }
  std::string problem;
  if (!rep.self_validate(&problem)) {
    std::cerr << "report fails self-validation: " << problem << "\n";
    return kCheckFailure;
  }
  print_summary(rep);
  std::cout << rep.checks.size() << " checks, " << (rep.all_pass() ? "all pass" : "failures present")
            << "\n";
  return rep.all_pass() ? kOk : kCheckFailure;
}

}  // namespace lgcli
