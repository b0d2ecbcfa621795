#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/ring.hpp"

namespace terracini {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

// Sparse polynomial: nonzero terms sorted strictly descending in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  // Sorts and merges arbitrary terms, dropping zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Terms already strictly descending and nonzero.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }

  std::uint32_t total_degree() const;
  bool is_homogeneous() const;
  // Degree of every term in every block, or nullopt when some block degree varies.
  std::optional<std::vector<std::uint32_t>> multidegree() const;
  // Union of supports of all terms.
  std::uint32_t support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Scalar& c);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f) { return f * c; }
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  // point[i] is the value of variable i; point must cover the support.
  Scalar evaluate(std::span<const Scalar> point) const;
  Scalar evaluate(const std::map<std::size_t, Scalar>& assignment) const;

  // The same polynomial in another ring with the same field; variable indices
  // are kept, so the target must be at least as large as the support.
  Polynomial map_to(const RingPtr& target) const;

  std::string to_string() const;
  static Polynomial parse(const RingPtr& ring, std::string_view text);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& f, const Polynomial& g);

// f with rational coefficients reduced into target's field (or map_to when
// the fields agree). Throws ArithmeticError when a denominator vanishes.
Polynomial change_field(const Polynomial& f, const RingPtr& target);

Polynomial partial_derivative(const Polynomial& f, std::size_t variable);

// Renames source variable (factor f, j) to target variable (block "z_<i>_<f>", j).
Polynomial substitute_block(const Polynomial& f, const RingPtr& target, std::size_t point);

// The block name used for coordinates of factor f of point i.
std::string point_block_name(std::size_t point, std::size_t factor);
std::string source_block_name(std::size_t factor);

}  // namespace terracini
