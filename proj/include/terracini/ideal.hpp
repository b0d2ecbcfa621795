#pragma once

#include <atomic>
#include <memory>
#include <string_view>
#include <vector>

#include "terracini/polynomial.hpp"

namespace terracini {

struct GroebnerOptions {
  // Re-check the Buchberger criterion on the finished basis.
  bool verify = false;
};

// Process-wide default for GroebnerOptions::verify (tests turn it on).
void set_default_verification(bool on);
bool default_verification();

struct GroebnerStats {
  std::uint64_t bases = 0;
  std::uint64_t verified = 0;
  std::uint64_t verification_failures = 0;
  std::uint64_t reductions = 0;
};
GroebnerStats groebner_stats();
void reset_groebner_stats();

// Reduced Groebner basis of gens under ring's order, sorted by increasing
// leading monomial. Generators are mapped into `ring` (same field and layout).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring);
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const GroebnerOptions& options);

// Remainder of f on division by basis (which must use f's ring and order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// True iff every S-polynomial of basis reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  // Adopts a basis already known to be reduced for ring's order.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  // Reduced basis in ring()'s order, computed once.
  const std::vector<Polynomial>& groebner_basis() const;
  bool has_cached_basis() const { return static_cast<bool>(basis_); }

  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  // Same ideal in a ring with the same layout and another order.
  Ideal with_order(const MonomialOrder& order) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::shared_ptr<const std::vector<Polynomial>> basis_;
};

// Polynomials of I free of the auxiliary block, as an ideal of the ring
// without auxiliary blocks.
Ideal eliminate(const Ideal& ideal, std::string_view aux_block);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// I : f^infinity via I + <t f - 1> and elimination of t.
Ideal saturate(const Ideal& ideal, const Polynomial& f);
// I : J^infinity as the intersection of I : f^infinity over generators f of J.
Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by);
// Dimension of R/I; -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
// Same from leading monomials of a Groebner basis.
int krull_dimension_of_basis(const std::vector<Polynomial>& basis, std::size_t nvars);

// The ring with a one-variable auxiliary block appended (its index is
// ring->nvars()) under the elimination order.
RingPtr elimination_ring(const RingPtr& ring);

}  // namespace terracini
