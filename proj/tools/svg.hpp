#pragma once

#include <string>

#include "leastgrad/grid.hpp"
#include "leastgrad/regions.hpp"

namespace lgcli {

// Arc, chords of every level, middle segments joining sibling inner
// endpoints, leaf arcs and deepest-level triangles. Heights are exaggerated
// so that the arc fills a readable band; the factor is stated in the title.
std::string tree_svg(const lg::RegionDecomposition& regions);

// Filled contours: interior values quantized into `bands` levels, drawn as
// merged horizontal runs.
std::string field_svg(const lg::GridField& field, int bands = 10);

}  // namespace lgcli
