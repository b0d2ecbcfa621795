#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terracini/saturation.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

// r points of a multiprojective source; points[i][f] holds the n_f + 1
// coordinates of factor f of point i.
struct PointConfig {
  std::vector<std::vector<std::vector<Rational>>> points;

  std::size_t r() const { return points.size(); }
};

// Nonzero factor vectors of the right sizes and pairwise distinct points.
void validate_config(const PointConfig& s, const std::vector<std::size_t>& dims);
bool same_projective_point(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct RRange {
  int lo = 2, hi = 1;
  bool empty() const { return hi < lo; }
  bool contains(int r) const { return r >= lo && r <= hi; }
};

// 2 <= r <= (N + 1) / (dim X + 1); throws for a degenerate parametrization.
RRange admissible_r_range(const Variety& v);

// Rows: the Jacobian at each point in turn (r * sum(n_f + 1) rows, m + 1 columns).
// Throws SingularPointError when some point has rank below ell.
ScalarMatrix stacked_jacobian(const ParamMap& map, const PointConfig& s);

struct Membership {
  bool member = false;
  std::size_t rank = 0;
  std::size_t threshold = 0;  // member iff rank < threshold
};

Membership membership_param(const ParamMap& map, const PointConfig& s);
// Ideal route, r = 2 only.
Membership membership_ideal(const IdealVariety& x, const PointConfig& s);

struct TerraciniOptions {
  Field field = Field::prime(32003);
  std::optional<std::uint64_t> max_minors;
  std::uint64_t seed = 0;
  SaturationMethod method = SaturationMethod::factored;
};

struct TerraciniIdeal {
  RingPtr ring;  // one block z_<i>_<f> per point and factor
  FactoredIdeal ideal;
  std::size_t r = 0, k = 0;
  std::size_t minor_size = 0;
  std::size_t minor_count = 0;
  bool capped = false;
  bool exact = false;  // ideal route with r = 2
  std::uint64_t seed = 0;
};

TerraciniIdeal terracini_ideal(const Variety& v, std::size_t r, const TerraciniOptions& options = {});

struct TerraciniReport {
  std::string mode = "dimension";
  std::string field;
  std::uint64_t seed = 0;
  std::size_t r = 0, k = 0;
  int krull_dim = -1;
  std::optional<int> locus_dim;  // nullopt when empty
  bool empty = true;
  std::string exactness;  // "exact" or "lower-bound"
  bool capped = false;
  double wall_ms = 0;
  std::vector<std::string> generators;  // reduced basis, canonical text
};

TerraciniReport locus_dimension(const TerraciniIdeal& t);

// Values of the ring variables of t (point by point, factor by factor) at s.
std::vector<Scalar> config_assignment(const TerraciniIdeal& t, const PointConfig& s);

struct FirstNonempty {
  int r = 0;
  std::vector<std::size_t> J;  // 1-based factor indices attaining r
};

FirstNonempty first_nonempty_r_veronese(std::uint32_t d);
// Requires at most one degree equal to 1.
FirstNonempty first_nonempty_r_segre_veronese(const std::vector<std::uint32_t>& degrees);

// Complete linear system: C of genus g spanning P^N. False outside 2 <= r <= (N+1)/2.
bool curve_emptiness_bounds(int g, int N, int r);
// Non-complete system: h0 sections of O_C(D), C embedded in P^n.
bool curve_emptiness_bounds(int g, int h0, int n, int r);

}  // namespace terracini
