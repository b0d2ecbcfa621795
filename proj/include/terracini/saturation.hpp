#pragma once

#include <cstdint>
#include <vector>

#include "terracini/ideal.hpp"

namespace terracini {

// I : f^inf for homogeneous I and f. Adjoins u of weight deg f, computes a
// basis of I + <u - f> in weighted degrevlex with u last, divides out powers
// of u and substitutes u = f back. Falls back to saturate() otherwise.
Ideal saturate_homogeneous(const Ideal& ideal, const Polynomial& f);

// The ideal content * cofactor, with content a single polynomial.
struct FactoredIdeal {
  Polynomial content;
  Ideal cofactor;

  Ideal expand() const;
  // Reduced basis of content * cofactor, obtained from the cofactor's basis.
  std::vector<Polynomial> groebner_basis() const;
  int krull_dimension() const;
  bool is_unit() const;
};

enum class SaturationMethod {
  // Common factors pulled out by gcd, principal saturation by the Bayer
  // trick, ideal saturation by a seeded random combination of generators.
  // Prime fields only; over Q the textbook route is used.
  factored,
  // saturate_by_ideal (Rabinowitsch per generator plus intersections).
  textbook,
};

struct SaturationOptions {
  SaturationMethod method = SaturationMethod::factored;
  std::uint64_t seed = 0;
};

// (...((<gens> : J_1^inf) : J_2^inf) ...) for the given sequence of ideals.
FactoredIdeal saturate_sequence(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const std::vector<std::vector<Polynomial>>& steps,
                                const SaturationOptions& options = {});

}  // namespace terracini
