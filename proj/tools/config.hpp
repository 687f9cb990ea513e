#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "leastgrad/verify.hpp"

namespace lgcli {

// Invalid or unknown configuration; reported as misuse.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurveSettings {
  std::string preset = "circle";
  double eta = 0.05;
  double param = 1.0;  // circle radius or parabola coefficient
};

struct SolveSettings {
  std::string domain = "disc";  // disc | square | arc-window
  std::string datum = "arc";    // arc | interval | cantor | zero
  double y0 = 0.6;
  double intervalLo = 0.25;
  double intervalHi = 0.75;
  int n = 256;
  int level = 4;                // Cantor level for the cantor datum and coarea check
  double windowH = 1e-5;        // cell size of arc-window grids
  std::int64_t maxIter = 20000;
  double tolerance = 1e-4;
  std::int64_t checkpointEvery = 50;
  bool minimize = true;         // false skips the least-gradient solve
  bool anisotropic = false;     // l1 gradient norm instead of Euclidean
  bool giusti = false;
  double epsilon = 0.1;
  bool coarea = false;
  double coareaTolerance = 0.1;
  bool probe = false;
  std::vector<int> probeSizes{64, 128, 256};
  std::vector<double> probeCellSizes{5e-5, 2.5e-5};
  double probeTolerance = 0.05;
};

struct RunConfig {
  CurveSettings curve;
  lg::VerifyConfig verify;
  SolveSettings solve;
  std::string outDir = "leastgrad-out";
};

// INI file with sections [curve], [tree], [verify], [solve], [output].
// Unknown sections or keys and out-of-range values raise ConfigError.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

}  // namespace lgcli
