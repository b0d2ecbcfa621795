#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "terracini/ideal.hpp"

namespace terracini {

// Header lines, then one canonical polynomial per line:
//   field: fp:32003
//   blocks: z_0_0:3 z_1_0:3
//   order: degrevlex
//   generators: <count>
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

std::string write_ideal_file(const RingPtr& ring, const std::vector<Polynomial>& generators);
IdealFile read_ideal_file(std::string_view text);

}  // namespace terracini
