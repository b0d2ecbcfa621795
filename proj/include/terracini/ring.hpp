#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "terracini/fields.hpp"

namespace terracini {

// Hard upper bound on the number of ring variables; every computation in
// scope (four points in P^2 plus an auxiliary variable) fits comfortably.
inline constexpr std::size_t kMaxVariables = 32;

struct Block {
  std::string name;
  std::size_t size = 0;
  bool auxiliary = false;

  friend bool operator==(const Block&, const Block&) = default;
};

// Ordered variable blocks. Variable j of block "z_1_0" is named "z_1_0_j".
class VariableLayout {
 public:
  VariableLayout() = default;
  explicit VariableLayout(std::vector<Block> blocks);

  std::size_t size() const { return total_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_offset(std::size_t block) const { return offsets_.at(block); }
  std::size_t index(std::size_t block, std::size_t offset) const;
  std::optional<std::size_t> find_block(std::string_view name) const;
  std::size_t block_of(std::size_t variable) const { return block_of_.at(variable); }
  bool is_auxiliary(std::size_t variable) const { return blocks_[block_of_.at(variable)].auxiliary; }
  bool has_auxiliary() const;

  const std::string& variable_name(std::size_t variable) const { return names_.at(variable); }
  std::optional<std::size_t> find_variable(std::string_view name) const;

  // Same blocks plus one appended at the end.
  VariableLayout with_block(Block block) const;
  // Same blocks without the auxiliary ones (which must be trailing).
  VariableLayout without_auxiliary() const;

  friend bool operator==(const VariableLayout& a, const VariableLayout& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
  std::vector<std::string> names_;
  std::size_t total_ = 0;
};

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, Exponent e);
  std::uint32_t degree() const { return degree_; }
  const std::array<Exponent, kMaxVariables>& exponents() const { return exp_; }
  // Bit i set iff variable i occurs.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  // Requires divides(*this, numerator).
  Monomial quotient_of(const Monomial& numerator) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }
  // Sum of exponents over [begin, end).
  std::uint32_t partial_degree(std::size_t begin, std::size_t end) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { degrevlex, elimination, weighted_degrevlex };

// degrevlex, the block-elimination order (auxiliary variables >> the rest,
// degrevlex inside each part), or degrevlex over a positive weight vector.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex, {}, {}); }
  static MonomialOrder elimination(const VariableLayout& layout);
  static MonomialOrder weighted_degrevlex(std::vector<std::uint32_t> weights);

  OrderKind kind() const { return kind_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::uint32_t> weights, std::vector<std::uint8_t> eliminated)
      : kind_(kind), weights_(std::move(weights)), eliminated_(std::move(eliminated)) {}

  OrderKind kind_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint8_t> eliminated_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(Field field, VariableLayout layout, MonomialOrder order);
  static RingPtr make(Field field, VariableLayout layout, MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const { return field_; }
  const VariableLayout& layout() const { return layout_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return layout_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, layout_.size());
  }

  RingPtr with_order(MonomialOrder order) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.layout_ == b.layout_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  VariableLayout layout_;
  MonomialOrder order_;
};

// compare() as a free function; throws when the monomials come from different layouts.
std::strong_ordering compare(const Ring& ring, const Monomial& a, const Monomial& b);

}  // namespace terracini
