#pragma once

#include <string>
#include <string_view>

#include "terracini/varieties.hpp"

namespace terracini {

// A TOML document with a [variety] table:
//   kind = "veronese" | "segre-veronese" | "rational-curve" | "del-pezzo" | "ideal"
//   n, d            integers (arrays for segre-veronese)
//   coefficients    rational-curve rows, integers or "p/q" strings
//   generators      ideal generators in canonical text over x_0_0 .. x_0_n
//   t               del-pezzo base point count
// Only the TOML needed for this is accepted: tables, integers, basic strings,
// (nested, multi-line) arrays and comments.
Variety parse_variety_spec(std::string_view text);
Variety load_variety_spec(const std::string& path);

}  // namespace terracini
