#include <algorithm>
#include <functional>

#include "terracini/errors.hpp"
#include "terracini/ideal.hpp"

namespace terracini {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring()->layout() == ring_->layout()) || !(g.ring()->field() == ring_->field()))
      throw IncompatibleError("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(g.map_to(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal ideal(ring, basis);
  ideal.basis_ = std::make_shared<const std::vector<Polynomial>>(ideal.generators_);
  return ideal;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  if (!basis_) basis_ = std::make_shared<const std::vector<Polynomial>>(buchberger(generators_, ring_));
  return *basis_;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f.map_to(ring_), groebner_basis()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::with_order(const MonomialOrder& order) const { return Ideal(ring_->with_order(order), generators_); }

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(a.ring_->layout() == b.ring_->layout()) || !(a.ring_->field() == b.ring_->field()))
    throw IncompatibleError("comparing ideals of different rings");
  const auto& ga = a.groebner_basis();
  Ideal bb = *b.ring_ == *a.ring_ ? b : Ideal(a.ring_, b.generators_);
  const auto& gb = bb.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

RingPtr elimination_ring(const RingPtr& ring) {
  std::string name = "t";
  for (int k = 1; ring->layout().find_block(name); ++k) name = "t" + std::to_string(k);
  auto layout = ring->layout().with_block(Block{name, 1, true});
  auto order = MonomialOrder::elimination(layout);
  return Ring::make(ring->field(), std::move(layout), std::move(order));
}

Ideal eliminate(const Ideal& ideal, std::string_view aux_block) {
  const auto& layout = ideal.ring()->layout();
  auto b = layout.find_block(aux_block);
  if (!b) throw PreconditionError("unknown block '" + std::string(aux_block) + "'");
  if (!layout.blocks()[*b].auxiliary) throw PreconditionError("block '" + std::string(aux_block) + "' is not auxiliary");
  RingPtr elim = ideal.ring()->order().kind() == OrderKind::elimination
                     ? ideal.ring()
                     : Ring::make(ideal.ring()->field(), layout, MonomialOrder::elimination(layout));
  auto basis = buchberger(ideal.generators(), elim);
  auto target = Ring::make(ideal.ring()->field(), layout.without_auxiliary(), MonomialOrder::degrevlex());
  std::uint32_t aux_mask = 0;
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout.is_auxiliary(i)) aux_mask |= 1u << i;
  std::vector<Polynomial> kept;
  for (const auto& g : basis)
    if (!(g.support() & aux_mask)) kept.push_back(g.map_to(target));
  return Ideal(target, std::move(kept));
}

namespace {

// Result of eliminating the appended variable, returned in the original ring.
Ideal eliminate_last(const RingPtr& original, const RingPtr& extended, const std::vector<Polynomial>& gens) {
  auto basis = buchberger(gens, extended);
  std::uint32_t aux = 1u << original->nvars();
  std::vector<Polynomial> kept;
  for (const auto& g : basis)
    if (!(g.support() & aux)) kept.push_back(g.map_to(original));
  return Ideal(original, std::move(kept));
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw IncompatibleError("intersection of ideals in different rings");
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  auto ext = elimination_ring(a.ring());
  auto t = Polynomial::variable(ext, a.ring()->nvars());
  auto one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.map_to(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.map_to(ext));
  return eliminate_last(a.ring(), ext, gens);
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  require_same_ring(Polynomial::constant(ideal.ring(), 1), f.map_to(ideal.ring()));
  if (f.is_constant()) return ideal;
  auto ext = elimination_ring(ideal.ring());
  auto t = Polynomial::variable(ext, ideal.ring()->nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(ext));
  gens.push_back(t * f.map_to(ext) - Polynomial::constant(ext, 1));
  return eliminate_last(ideal.ring(), ext, gens);
}

Ideal saturate_by_ideal(const Ideal& ideal, const Ideal& by) {
  if (by.is_zero()) throw PreconditionError("saturation by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& f : by.generators()) {
    Ideal s = saturate(ideal, f);
    result = result ? ideal_intersection(*result, s) : s;
  }
  return *result;
}

namespace {

// Smallest set of variables meeting every support (a hitting set), by
// branching on the smallest unhit support.
int min_hitting_set(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int size, int best) {
  if (size >= best) return best;
  const std::uint32_t* pick = nullptr;
  int pick_count = 33;
  for (const auto& s : supports) {
    if (s & chosen) continue;
    int c = __builtin_popcount(s);
    if (c < pick_count) {
      pick_count = c;
      pick = &s;
    }
  }
  if (!pick) return size;
  if (size + 1 >= best) return best;
  for (std::uint32_t rest = *pick; rest; rest &= rest - 1) {
    std::uint32_t bit = rest & -rest;
    best = std::min(best, min_hitting_set(supports, chosen | bit, size + 1, best));
  }
  return best;
}

}  // namespace

int krull_dimension_of_basis(const std::vector<Polynomial>& basis, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.leading_monomial().degree() == 0) return -1;
    supports.push_back(g.leading_monomial().support());
  }
  // Drop supersets; they are hit whenever a subset is.
  std::sort(supports.begin(), supports.end(),
            [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](std::uint32_t m) { return (m & s) == m; });
    if (!redundant) minimal.push_back(s);
  }
  int height = min_hitting_set(minimal, 0, 0, static_cast<int>(nvars) + 1);
  return static_cast<int>(nvars) - height;
}

int krull_dimension(const Ideal& ideal) {
  return krull_dimension_of_basis(ideal.groebner_basis(), ideal.ring()->nvars());
}

}  // namespace terracini
