#include <algorithm>
#include <set>

#include "terracini/errors.hpp"
#include "terracini/ring.hpp"

namespace terracini {

VariableLayout::VariableLayout(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::string> seen;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block& block = blocks_[b];
    if (block.name.empty()) throw PreconditionError("block names must be nonempty");
    if (!seen.insert(block.name).second) throw PreconditionError("duplicate block name '" + block.name + "'");
    offsets_.push_back(total_);
    for (std::size_t j = 0; j < block.size; ++j) {
      block_of_.push_back(b);
      names_.push_back(block.name + "_" + std::to_string(j));
    }
    total_ += block.size;
  }
  if (total_ > kMaxVariables)
    throw PreconditionError("layout has " + std::to_string(total_) + " variables; at most " +
                            std::to_string(kMaxVariables) + " are supported");
}

std::size_t VariableLayout::index(std::size_t block, std::size_t offset) const {
  if (block >= blocks_.size() || offset >= blocks_[block].size)
    throw PreconditionError("variable (" + std::to_string(block) + ", " + std::to_string(offset) +
                            ") is outside the layout");
  return offsets_[block] + offset;
}

std::optional<std::size_t> VariableLayout::find_block(std::string_view name) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].name == name) return b;
  return std::nullopt;
}

bool VariableLayout::has_auxiliary() const {
  return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.auxiliary; });
}

std::optional<std::size_t> VariableLayout::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VariableLayout VariableLayout::with_block(Block block) const {
  auto blocks = blocks_;
  blocks.push_back(std::move(block));
  return VariableLayout(std::move(blocks));
}

VariableLayout VariableLayout::without_auxiliary() const {
  std::vector<Block> kept;
  bool seen_aux = false;
  for (const Block& b : blocks_) {
    if (b.auxiliary) {
      seen_aux = true;
      continue;
    }
    if (seen_aux) throw PreconditionError("auxiliary blocks must come last");
    kept.push_back(b);
  }
  return VariableLayout(std::move(kept));
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = e;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i]) mask |= (1u << i);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  bool ok = true;
  for (std::size_t i = 0; i < kMaxVariables; ++i) ok &= exp_[i] <= other.exp_[i];
  return ok;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) q.exp_[i] = numerator.exp_[i] - exp_[i];
  q.degree_ = numerator.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += m.exp_[i];
  }
  m.degree_ = d;
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::min(exp_[i], other.exp_[i]);
    d += m.exp_[i];
  }
  m.degree_ = d;
  return m;
}

std::uint32_t Monomial::partial_degree(std::size_t begin, std::size_t end) const {
  std::uint32_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exp_[i];
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  if (a.degree_ + b.degree_ > 0xFFFFu) {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (std::uint32_t(a.exp_[i]) + b.exp_[i] > 0xFFFFu) throw ArithmeticError("exponent overflow");
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = a.exp_[i] + b.exp_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ degree_;
  const auto* words = reinterpret_cast<const std::uint64_t*>(exp_.data());
  for (std::size_t i = 0; i < kMaxVariables / 4; ++i) {
    h ^= words[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

MonomialOrder MonomialOrder::elimination(const VariableLayout& layout) {
  if (!layout.has_auxiliary()) throw PreconditionError("elimination order needs an auxiliary block");
  std::vector<std::uint8_t> mask(layout.size(), 0);
  for (std::size_t i = 0; i < layout.size(); ++i) mask[i] = layout.is_auxiliary(i) ? 1 : 0;
  return MonomialOrder(OrderKind::elimination, {}, std::move(mask));
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<std::uint32_t> weights) {
  for (auto w : weights)
    if (w == 0) throw PreconditionError("weights must be positive");
  return MonomialOrder(OrderKind::weighted_degrevlex, std::move(weights), {});
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::elimination:
      return "elimination";
    case OrderKind::weighted_degrevlex:
      return "weighted-degrevlex";
  }
  return "?";
}

namespace {

// Reverse-lexicographic tie break: the monomial with the smaller exponent in
// the last differing variable is larger.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t nvars) {
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering masked_degrevlex(const Monomial& a, const Monomial& b, const std::vector<std::uint8_t>& mask,
                                      std::uint8_t want) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da <=> db;
  for (std::size_t i = mask.size(); i-- > 0;) {
    if (mask[i] != want || a[i] == b[i]) continue;
    return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, nvars);
    case OrderKind::elimination: {
      auto c = masked_degrevlex(a, b, eliminated_, 1);
      if (c != 0) return c;
      return masked_degrevlex(a, b, eliminated_, 0);
    }
    case OrderKind::weighted_degrevlex: {
      std::uint64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        wa += std::uint64_t(weights_[i]) * a[i];
        wb += std::uint64_t(weights_[i]) * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return revlex(a, b, nvars);
    }
  }
  return std::strong_ordering::equal;
}

Ring::Ring(Field field, VariableLayout layout, MonomialOrder order)
    : field_(field), layout_(std::move(layout)), order_(std::move(order)) {}

RingPtr Ring::make(Field field, VariableLayout layout, MonomialOrder order) {
  if (order.kind() == OrderKind::elimination && !layout.has_auxiliary())
    throw PreconditionError("elimination order on a layout without auxiliary block");
  return std::make_shared<const Ring>(field, std::move(layout), std::move(order));
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, layout_, std::move(order)); }

std::strong_ordering compare(const Ring& ring, const Monomial& a, const Monomial& b) {
  std::uint32_t outside = ~0u;
  if (ring.nvars() < 32) outside = ~((1u << ring.nvars()) - 1);
  else outside = 0;
  if ((a.support() | b.support()) & outside) throw IncompatibleError("monomial uses variables outside the layout");
  return ring.compare(a, b);
}

}  // namespace terracini
