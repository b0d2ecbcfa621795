#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "terracini/ideal.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

// Multihomogeneous map P^{n_1} x ... x P^{n_k} --> P^m over Q. Source factor f
// is the block "x_<f>" with n_f + 1 variables.
struct ParamMap {
  std::string name;
  std::vector<std::size_t> dims;     // n_1 .. n_k
  std::vector<std::uint32_t> degrees;
  RingPtr ring;
  std::vector<Polynomial> components;  // f_0 .. f_m
  std::size_t ell = 0;                 // generic Jacobian rank

  std::size_t k() const { return dims.size(); }
  std::size_t m() const { return components.size() - 1; }
  std::size_t source_dim() const;  // sum n_f
  // Rows indexed by source variables, columns by components.
  PolyMatrix jacobian() const;
};

// X in P^n cut out by homogeneous generators over Q (block "x_0").
struct IdealVariety {
  std::string name;
  std::size_t n = 0;
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::size_t ell = 0;  // codimension

  // Rows indexed by generators, columns by variables (J_f transposed).
  PolyMatrix jacobian_transpose() const;
  int dimension() const { return static_cast<int>(n) - static_cast<int>(ell); }
};

using Variety = std::variant<ParamMap, IdealVariety>;

// The source ring over `field` for factor dimensions `dims`.
RingPtr source_ring(const Field& field, const std::vector<std::size_t>& dims);

ParamMap veronese(std::size_t n, std::uint32_t d);
ParamMap segre_veronese(const std::vector<std::size_t>& dims, const std::vector<std::uint32_t>& degrees);
// Row j lists the coefficients of x^{d-i} y^i, i = 0..d.
ParamMap rational_curve(const std::vector<std::vector<Rational>>& coefficients);
ParamMap del_pezzo(int t);
// The standard points of P^2 used as base points, in order.
std::vector<std::vector<std::int64_t>> del_pezzo_base_points();
IdealVariety from_ideal(std::size_t n, const std::vector<Polynomial>& generators);

// Largest Jacobian rank over `trials` random points with nonzero coordinates.
std::size_t validate_generic_rank(const ParamMap& map, int trials, std::uint64_t seed);

// Rank of the coefficient matrix of the components (m + 1 when nondegenerate).
std::size_t component_rank(const ParamMap& map);

// A curve P^1 -> P^m is smooth when its Jacobian has rank 2 away from the
// origin and it is injective; both are decided exactly over `field` by
// Groebner bases.
bool curve_is_smooth(const ParamMap& curve, const Field& field);

// X is smooth when the Jacobian has rank ell at every point of X; decided by
// checking that X plus the ell-minors defines only the origin.
bool ideal_variety_is_smooth(const IdealVariety& x, const Field& field);

// The degree-8 rational normal curve with one monomial dropped, chosen from
// the seed; drops that give a singular or degenerate curve are redrawn.
struct OcticChoice {
  ParamMap map;
  std::size_t dropped;
  int draws;
};
OcticChoice rational_octic(std::uint64_t seed);

// The smooth quartic x0 x1 - x2^2 = x0^2 + x1^2 + x2^2 - 3 x3^2 = 0 in P^3.
IdealVariety elliptic_quartic();
IdealVariety twisted_cubic_ideal();

// Dimension of X (as a projective variety).
int variety_dimension(const Variety& v);
// N for X in P^N.
std::size_t ambient_dimension(const Variety& v);
const std::string& variety_name(const Variety& v);

}  // namespace terracini
