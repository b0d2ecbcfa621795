#pragma once

#include <string>
#include <string_view>

#include "terracini/terracini.hpp"

namespace terracini {

// {"points": [[[a, b, ...], [c, ...]], ...]}: points, then factors, then
// coordinates given as integers or "p/q" strings.
PointConfig read_points_json(std::string_view text);
std::string write_points_json(const PointConfig& s);

}  // namespace terracini
