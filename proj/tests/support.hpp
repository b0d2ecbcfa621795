#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "terracini/polynomial.hpp"

namespace terracini {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace terracini

namespace terracini::testing {

inline RingPtr ring_with(Field field, std::vector<Block> blocks, MonomialOrder order = MonomialOrder::degrevlex()) {
  return Ring::make(field, VariableLayout(std::move(blocks)), std::move(order));
}

// One block "x" of n variables x_0 .. x_{n-1}.
inline RingPtr flat_ring(Field field, std::size_t n) { return ring_with(field, {Block{"x", n}}); }

inline Polynomial parse(const RingPtr& ring, const std::string& text) { return Polynomial::parse(ring, text); }

// Random polynomial with up to `terms` terms of total degree <= degree.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int degree, bool homogeneous = false) {
  std::vector<Term> out;
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, degree);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = homogeneous ? degree : deg(rng);
    for (int k = 0; k < d; ++k) {
      auto v = var(rng);
      m.set(v, static_cast<Monomial::Exponent>(m[v] + 1));
    }
    out.push_back({m, ring->field().random_int(rng, -9, 9)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace terracini::testing
