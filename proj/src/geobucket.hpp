#pragma once

#include <optional>
#include <vector>

#include "terracini/polynomial.hpp"

namespace terracini::detail {

// Sum of polynomials held in buckets of geometrically growing size, so that
// repeatedly subtracting reducer multiples and extracting the leading term
// stays cheap. Buckets store terms in increasing order (leading term last).
class GeoBucket {
 public:
  explicit GeoBucket(const Ring& ring) : ring_(ring) {}

  // Adds c * m * (terms[from..]) where `terms` is strictly descending.
  void add_scaled(const std::vector<Term>& terms, std::size_t from, const Monomial& m, const Scalar& c);
  void add(const std::vector<Term>& terms);
  std::optional<Term> pop_leading();
  bool empty_hint() const;

 private:
  void insert(std::vector<Term>&& ascending);
  std::vector<Term> merge(std::vector<Term>& a, std::vector<Term>& b) const;

  const Ring& ring_;
  std::vector<std::vector<Term>> buckets_;
};

}  // namespace terracini::detail
