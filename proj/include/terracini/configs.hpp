#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/terracini.hpp"

namespace terracini {

// A variety family whose Terracini loci have a known classification.
struct OracleFamily {
  enum class Kind { veronese, segre_veronese, del_pezzo };
  Kind kind = Kind::veronese;
  std::vector<std::size_t> dims;
  std::vector<std::uint32_t> degrees;
  int t = 0;  // del Pezzo base points

  static OracleFamily of_veronese(std::size_t n, std::uint32_t d);
  static OracleFamily of_segre_veronese(std::vector<std::size_t> dims, std::vector<std::uint32_t> degrees);
  static OracleFamily of_del_pezzo(int t);

  ParamMap map() const;
};

// A configuration together with the classification's verdict on it.
struct OracleCase {
  PointConfig config;
  bool member = false;
};

// Names that have a known verdict at this r.
//   veronese: collinear, non-collinear, collinear-plus-free, no-r-1-collinear,
//             coplanar, non-coplanar, generic
//   segre_veronese: T_<i> (1-based factor), pair, generic
//   del_pezzo: Y_<i>, U, generic at r = 2; Y, B_12, B_13, B_23, generic at r = 3
std::vector<std::string> oracle_names(const OracleFamily& family, std::size_t r);

// Seeded configuration in the named family, built exactly. Throws
// PreconditionError for an unknown name or one without a verdict at r.
OracleCase oracle_config(const OracleFamily& family, std::string_view name, std::size_t r, std::uint64_t seed);

}  // namespace terracini
