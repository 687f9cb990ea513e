// One line per acceptance criterion: [PASS] or [FAIL], the measured values
// and the wall time against its budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "leastgrad/giusti.hpp"
#include "leastgrad/lab.hpp"
#include "leastgrad/verify.hpp"

using namespace lg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double value_of(const CheckResult& c, const std::string& key) {
  for (const auto& [k, v] : c.measured)
    if (k == key) return v;
  return NAN;
}

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool pass = o.pass && secs < budget;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs, budget);
  std::fflush(stdout);
}

Outcome from_check(const CheckResult& c, std::string detail) {
  return {c.pass, detail + fmt(", margin %.3g", c.margin)};
}

}  // namespace

int main() {
  const ConcaveArc arc = make_circle_arc(0.05);
  std::shared_ptr<const CantorTree> tree12;
  std::unique_ptr<RegionDecomposition> regions8;

  criterion(1, "chord contraction, depths 0-12", 5, [&] {
    tree12 = std::make_shared<const CantorTree>(build_tree(arc, 12));
    const CheckResult c = check_chord_contraction(*tree12, 12);
    return from_check(c, fmt("mu_12 / mu_0 = %.4g vs (2/3)^12 = %.4g", tree12->stats(12).mu / tree12->stats(0).mu,
                             std::pow(2.0 / 3.0, 12)));
  });

  criterion(2, "fatness, exact level sums", 5, [&] {
    const CheckResult c = check_fatness(*tree12, 12);
    return from_check(c, fmt("c_12 = %.6g, c_1 * prod = %.6g", tree12->stats(12).c,
                             tree12->stats(1).c * fatness_product(12)));
  });

  criterion(3, "triangle separation, levels 1-10", 30, [&] {
    const RegionDecomposition r(tree12);
    const CheckResult c = check_triangle_separation(r, 10);
    return from_check(c, "hypotenuse ratio and exact pairwise disjointness");
  });

  criterion(4, "chord-arc and sagitta, 1000 sub-chords", 10, [&] {
    const CheckResult a = check_chord_arc(arc, 1000, 1);
    const CheckResult s = check_sagitta(arc, 1000, 1);
    return Outcome{a.pass && s.pass, fmt("chord-arc margin %.3g, sagitta margin %.3g", a.margin, s.margin)};
  });

  regions8 = std::make_unique<RegionDecomposition>(build_tree(arc, 8));

  criterion(5, "Lipschitz trend, N = 2..8, 10^4 pairs", 60, [&] {
    const CheckResult c = check_lipschitz(*regions8, 2, 8, 10000, 1);
    return from_check(c, fmt("max ratio at N=2: %.8f, at N=8: %.10f", value_of(c, "maxRatio.2"),
                             value_of(c, "maxRatio.8")));
  });

  criterion(6, "inscribed radius decay, N = 2..8", 120, [&] {
    const CheckResult c = check_rad_decay(*regions8, 2, 8, 0.0, -0.8);
    return from_check(c, fmt("rad_2 = %.3e, rad_8 = %.3e, log2 slope %.3f", value_of(c, "rad.2"),
                             value_of(c, "rad.8"), value_of(c, "log2Slope")));
  });

  criterion(7, "model square suite, 100 fields", 30, [&] {
    const VerificationReport r = model_square_suite();
    std::string d;
    for (const auto& c : r.checks) d += (d.empty() ? "" : ", ") + c.name + (c.pass ? " ok" : " FAILED");
    return Outcome{r.all_pass() && r.checks.size() == 4, d};
  });

  criterion(8, "disc chord minimizer, n = 512, y0 = 0.6", 600, [&] {
    const DiscDomain disc({0.0, 0.0}, 1.0);
    GridField g = make_grid(disc, 512);
    apply_trace(g, disc, disc_arc_datum(0.6), 0.0);
    SolverConfig cfg;
    cfg.tolerance = 1e-4;
    cfg.maxIter = 40000;
    const SolveResult r = least_gradient_solve(g, cfg);
    const double x0 = 0.8;
    std::int64_t agree = 0, total = 0;
    for (int j = 1; j <= g.ny; ++j)
      for (int i = 1; i <= g.nx; ++i) {
        const std::size_t idx = g.index(i, j);
        if (!g.interior(idx)) continue;
        ++total;
        const double ind = g.center(i, j).x > x0 ? 1.0 : 0.0;
        if (std::abs(r.field.value[idx] - ind) < 0.5) ++agree;
      }
    const double rel = std::abs(r.report.tv - 1.2) / 1.2;
    const double frac = static_cast<double>(agree) / total;
    return Outcome{r.report.converged && rel <= 0.02 && frac >= 0.99,
                   fmt("tv %.6f (rel err %.4f), agreement %.5f, %ld iterations", r.report.tv, rel, frac,
                       static_cast<long>(r.report.iterations))};
  });

  criterion(9, "non-attainment signature on the square, n = 64,128,256", 600, [&] {
    SolverConfig cfg;
    cfg.tolerance = 1e-4;
    cfg.maxIter = 40000;
    const auto rows = nonattainment_probe_square({64, 128, 256}, 0.25, 0.75, cfg);
    bool ok = true;
    std::string d;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ok = ok && rows[i].converged;
      if (i > 0) ok = ok && rows[i].tv < rows[i - 1].tv && rows[i].l1Norm <= 0.7 * rows[i - 1].l1Norm;
      d += fmt("%sn=%d tv %.6f L1 %.3e", i ? "; " : "", rows[i].n, rows[i].tv, rows[i].l1Norm);
    }
    const double rel = std::abs(rows.back().tv - 0.5) / 0.5;
    ok = ok && rel <= 0.03;
    return Outcome{ok, d + fmt("; rel err at 256: %.4f", rel)};
  });

  criterion(10, "extension upper bound, eps = 0.1, n = 1024", 300, [&] {
    const DiscDomain disc({0.0, 0.0}, 1.0);
    const GridField g = make_grid(disc, 1024);
    const GiustiResult r = giusti_extension(disc, disc_arc_datum(0.6), 0.1, g);
    const double ratio = r.w11Norm / r.datumL1;
    return Outcome{ratio <= 1.15, fmt("W11 %.5f, datum L1 %.5f, ratio %.4f", r.w11Norm, r.datumL1, ratio)};
  });

  criterion(11, "coarea lower bound on K_4, eps = 0.05", 600, [&] {
    const RegionDecomposition r(build_tree(arc, 4));
    const DiscDomain disc = disc_of(arc);
    const double eps = 0.05;
    const GridField g = arc_window_grid(r, 0.25 * eps * eps, 1e-5);
    const GiustiResult w = giusti_extension(disc, cantor_datum(r.tree(), 4, disc), eps, g);
    const CoareaResult c = coarea_lower_check(w.field, r, 4, 0.1);
    return Outcome{c.lhs >= 0.9 * c.rhs,
                   fmt("sum %.6f, arcSum/(1+c4) %.6f, ratio %.4f", c.lhs, c.rhs, c.lhs / c.rhs)};
  });

  criterion(12, "solver vs binary oracle on 6x6 instances", 60, [&] {
    // 200 random rings plus every contiguous run of +1 traces.
    std::vector<std::vector<double>> cases = random_oracle_traces(200, 1);
    for (int start = 0; start < 16; ++start)
      for (int len = 1; len < 16; ++len) {
        std::vector<double> t(16, -1.0);
        for (int k = 0; k < len; ++k) t[(start + k) % 16] = 1.0;
        cases.push_back(t);
      }
    SolverConfig cfg;
    cfg.tolerance = 1e-8;
    cfg.maxIter = 200000;
    cfg.norm = TvNorm::Anisotropic;
    int matched = 0, total = 0;
    double worst = 0.0;
    for (const auto& traces : cases) {
      const OracleCase c = solve_oracle_case(traces, cfg);
      ++total;
      const double diff = std::abs(c.solverTv - c.oracleTv);
      if (c.converged && diff <= 1e-6) ++matched;
      worst = std::max(worst, diff);
    }
    // For reference: with the Euclidean norm thresholding is not exact.
    SolverConfig iso = cfg;
    iso.norm = TvNorm::Isotropic;
    int isoMatched = 0;
    for (const auto& traces : cases) {
      const OracleCase c = solve_oracle_case(traces, iso);
      if (std::abs(c.solverTv - c.oracleTv) <= 1e-6) ++isoMatched;
    }
    return Outcome{matched == total,
                   fmt("l1 gradient norm: %d of %d within 1e-6, worst difference %.2e "
                       "(Euclidean norm, not asserted: %d of %d)",
                       matched, total, worst, isoMatched, total)};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
