#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace lgcli {

namespace {

namespace pt = boost::property_tree;

template <typename T>
T parse_value(const std::string& key, const std::string& raw) {
  std::istringstream is(raw);
  T v{};
  if (!(is >> v) || !(is >> std::ws).eof()) {
    throw ConfigError("config: cannot parse '" + raw + "' for " + key);
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  if (raw == "true" || raw == "1" || raw == "yes" || raw == "on") return true;
  if (raw == "false" || raw == "0" || raw == "no" || raw == "off") return false;
  throw ConfigError("config: expected a boolean for " + key + ", got '" + raw + "'");
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& raw) {
  std::vector<T> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("config: empty list item in " + key);
    out.push_back(parse_value<T>(key, item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ConfigError("config: empty list for " + key);
  return out;
}

void require(bool ok, const std::string& key, const std::string& range) {
  if (!ok) throw ConfigError("config: " + key + " must be " + range);
}

using Setter = std::function<void(const std::string&, const std::string&)>;

}  // namespace

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream is(text);
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " at line " + std::to_string(e.line()));
  }
  RunConfig c;
  auto& v = c.verify;
  auto& s = c.solve;
  const std::map<std::string, std::map<std::string, Setter>> schema = {
      {"curve",
       {{"preset", [&](auto& k, auto& r) {
          require(r == "circle" || r == "parabola", k, "circle or parabola");
          c.curve.preset = r;
        }},
        {"eta", [&](auto& k, auto& r) {
          c.curve.eta = parse_value<double>(k, r);
          require(c.curve.eta > 0.0 && c.curve.eta < 1.0, k, "in (0, 1)");
        }},
        {"param", [&](auto& k, auto& r) {
          c.curve.param = parse_value<double>(k, r);
          require(c.curve.param >= 0.0, k, "non-negative");
        }}}},
      {"tree",
       {{"depth", [&](auto& k, auto& r) {
          v.depth = parse_value<int>(k, r);
          require(v.depth >= 0 && v.depth <= lg::kMaxDepth, k, "in [0, 16]");
        }}}},
      {"verify",
       {{"contraction_depth", [&](auto& k, auto& r) {
          v.contractionDepth = parse_value<int>(k, r);
          require(v.contractionDepth >= 1 && v.contractionDepth <= lg::kMaxDepth, k, "in [1, 16]");
        }},
        {"separation_depth", [&](auto& k, auto& r) {
          v.separationDepth = parse_value<int>(k, r);
          require(v.separationDepth >= 1 && v.separationDepth <= 12, k, "in [1, 12]");
        }},
        {"chord_samples", [&](auto& k, auto& r) {
          v.chordSamples = parse_value<int>(k, r);
          require(v.chordSamples >= 1, k, "positive");
        }},
        {"lipschitz_samples", [&](auto& k, auto& r) {
          v.lipschitzSamples = parse_value<std::int64_t>(k, r);
          require(v.lipschitzSamples >= 1, k, "positive");
        }},
        {"first_trend_level", [&](auto& k, auto& r) {
          v.firstTrendLevel = parse_value<int>(k, r);
          require(v.firstTrendLevel >= 1, k, "at least 1");
        }},
        {"rad_resolution", [&](auto& k, auto& r) {
          v.radResolution = parse_value<double>(k, r);
          require(v.radResolution >= 0.0, k, "non-negative (0 = automatic)");
        }},
        {"max_rad_slope", [&](auto& k, auto& r) { v.maxRadSlope = parse_value<double>(k, r); }},
        {"seed", [&](auto& k, auto& r) { v.seed = parse_value<std::uint64_t>(k, r); }},
        {"model_suite", [&](auto& k, auto& r) { v.modelSuite = parse_bool(k, r); }},
        {"square_fields", [&](auto& k, auto& r) {
          v.square.fields = parse_value<int>(k, r);
          require(v.square.fields >= 1, k, "positive");
        }},
        {"square_n", [&](auto& k, auto& r) {
          v.square.n = parse_value<int>(k, r);
          require(v.square.n >= 2, k, "at least 2");
        }},
        {"square_extension_n", [&](auto& k, auto& r) {
          v.square.giustiN = parse_value<int>(k, r);
          require(v.square.giustiN >= 8, k, "at least 8");
        }}}},
      {"solve",
       {{"domain", [&](auto& k, auto& r) {
          require(r == "disc" || r == "square" || r == "arc-window", k, "disc, square or arc-window");
          s.domain = r;
        }},
        {"datum", [&](auto& k, auto& r) {
          require(r == "arc" || r == "interval" || r == "cantor" || r == "zero", k,
                  "arc, interval, cantor or zero");
          s.datum = r;
        }},
        {"y0", [&](auto& k, auto& r) {
          s.y0 = parse_value<double>(k, r);
          require(s.y0 > 0.0 && s.y0 < 1.0, k, "in (0, 1)");
        }},
        {"interval_lo", [&](auto& k, auto& r) { s.intervalLo = parse_value<double>(k, r); }},
        {"interval_hi", [&](auto& k, auto& r) { s.intervalHi = parse_value<double>(k, r); }},
        {"n", [&](auto& k, auto& r) {
          s.n = parse_value<int>(k, r);
          require(s.n >= 2 && s.n <= 8192, k, "in [2, 8192]");
        }},
        {"level", [&](auto& k, auto& r) {
          s.level = parse_value<int>(k, r);
          require(s.level >= 0 && s.level <= lg::kMaxDepth, k, "in [0, 16]");
        }},
        {"window_h", [&](auto& k, auto& r) {
          s.windowH = parse_value<double>(k, r);
          require(s.windowH > 0.0, k, "positive");
        }},
        {"max_iter", [&](auto& k, auto& r) {
          s.maxIter = parse_value<std::int64_t>(k, r);
          require(s.maxIter >= 1, k, "positive");
        }},
        {"tolerance", [&](auto& k, auto& r) {
          s.tolerance = parse_value<double>(k, r);
          require(s.tolerance > 0.0, k, "positive");
        }},
        {"checkpoint_every", [&](auto& k, auto& r) {
          s.checkpointEvery = parse_value<std::int64_t>(k, r);
          require(s.checkpointEvery >= 1, k, "positive");
        }},
        {"giusti", [&](auto& k, auto& r) { s.giusti = parse_bool(k, r); }},
        {"epsilon", [&](auto& k, auto& r) {
          s.epsilon = parse_value<double>(k, r);
          require(s.epsilon > 0.0 && s.epsilon < 0.5, k, "in (0, 1/2)");
        }},
        {"coarea", [&](auto& k, auto& r) { s.coarea = parse_bool(k, r); }},
        {"coarea_tolerance", [&](auto& k, auto& r) {
          s.coareaTolerance = parse_value<double>(k, r);
          require(s.coareaTolerance >= 0.0 && s.coareaTolerance < 1.0, k, "in [0, 1)");
        }},
        {"minimize", [&](auto& k, auto& r) { s.minimize = parse_bool(k, r); }},
        {"tv_norm", [&](auto& k, auto& r) {
          require(r == "isotropic" || r == "anisotropic", k, "isotropic or anisotropic");
          s.anisotropic = r == "anisotropic";
        }},
        {"probe", [&](auto& k, auto& r) { s.probe = parse_bool(k, r); }},
        {"probe_sizes", [&](auto& k, auto& r) { s.probeSizes = parse_list<int>(k, r); }},
        {"probe_cell_sizes", [&](auto& k, auto& r) { s.probeCellSizes = parse_list<double>(k, r); }},
        {"probe_tolerance", [&](auto& k, auto& r) {
          s.probeTolerance = parse_value<double>(k, r);
          require(s.probeTolerance >= 0.0 && s.probeTolerance < 1.0, k, "in [0, 1)");
        }}}},
      {"output", {{"dir", [&](auto&, auto& r) { c.outDir = r; }}}},
  };

  for (const auto& [section, body] : tree) {
    const auto sec = schema.find(section);
    if (sec == schema.end()) {
      if (body.empty()) throw ConfigError("config: key '" + section + "' outside any section");
      throw ConfigError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      const auto setter = sec->second.find(key);
      if (setter == sec->second.end()) {
        throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
      }
      setter->second(section + "." + key, value.get_value<std::string>());
    }
  }
  require(s.intervalLo >= 0.0 && s.intervalLo <= s.intervalHi && s.intervalHi <= 1.0,
          "solve.interval_lo/interval_hi", "0 <= lo <= hi <= 1");
  for (int n : s.probeSizes) require(n >= 2 && n <= 8192, "solve.probe_sizes", "in [2, 8192]");
  for (double h : s.probeCellSizes) require(h > 0.0, "solve.probe_cell_sizes", "positive");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace lgcli
