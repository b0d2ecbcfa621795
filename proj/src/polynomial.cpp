#include "terracini/polynomial.hpp"

#include <algorithm>
#include <queue>

#include "terracini/errors.hpp"

namespace terracini {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring()))
    throw IncompatibleError("polynomials live in different rings");
}

namespace {

void check_field(const Ring& ring, const Scalar& c) {
  if (c.is_rational() != ring.field().is_rational() ||
      (!c.is_rational() && c.residue().modulus != ring.field().modulus()))
    throw IncompatibleError("scalar from " + c.field().selector() + " used in a ring over " +
                            ring.field().selector());
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  check_field(*ring, c);
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw PreconditionError("unknown variable index " + std::to_string(index));
  Monomial m;
  m.set(index, 1);
  Scalar one = ring->field().one();
  return term(std::move(ring), m, one);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  check_field(*ring, c);
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("the zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

std::optional<std::vector<std::uint32_t>> Polynomial::multidegree() const {
  const auto& layout = ring_->layout();
  std::vector<std::uint32_t> degrees(layout.blocks().size(), 0);
  bool first = true;
  for (const auto& t : terms_) {
    for (std::size_t b = 0; b < layout.blocks().size(); ++b) {
      std::size_t begin = layout.block_offset(b);
      std::uint32_t d = t.monomial.partial_degree(begin, begin + layout.blocks()[b].size);
      if (first) degrees[b] = d;
      else if (degrees[b] != d) return std::nullopt;
    }
    first = false;
  }
  return degrees;
}

std::uint32_t Polynomial::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.monomial.support();
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

namespace {

std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Scalar s = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (f.size() == 1) return g.mul_term(f.terms_[0].monomial, f.terms_[0].coefficient);
  if (g.size() == 1) return f.mul_term(g.terms_[0].monomial, g.terms_[0].coefficient);
  // Heap merge of the |a| sorted streams a_i * b (Johnson's method).
  const Polynomial& a = f.size() <= g.size() ? f : g;
  const Polynomial& b = f.size() <= g.size() ? g : f;
  const Ring& ring = *f.ring();
  struct Entry {
    Monomial m;
    std::uint32_t i, j;
  };
  auto less = [&](const Entry& x, const Entry& y) { return ring.compare(x.m, y.m) < 0; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  for (std::uint32_t i = 0; i < a.size(); ++i) heap.push({a.terms_[i].monomial * b.terms_[0].monomial, i, 0});
  std::vector<Term> out;
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    Scalar c = a.terms_[e.i].coefficient * b.terms_[e.j].coefficient;
    if (!out.empty() && out.back().monomial == e.m) {
      out.back().coefficient += c;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back({e.m, std::move(c)});
    }
    if (e.j + 1 < b.size()) heap.push({a.terms_[e.i].monomial * b.terms_[e.j + 1].monomial, e.i, e.j + 1});
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

Polynomial operator*(const Polynomial& f, const Scalar& c) {
  check_field(*f.ring(), c);
  if (c.is_zero()) return Polynomial(f.ring());
  Polynomial p = f;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!(f.terms_[i].monomial == g.terms_[i].monomial) || !(f.terms_[i].coefficient == g.terms_[i].coefficient))
      return false;
  return true;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  check_field(*ring_, c);
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  Scalar sum = ring_->field().zero();
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (!t.monomial[i]) continue;
      if (i >= point.size()) throw PreconditionError("no value assigned to " + ring_->layout().variable_name(i));
      v *= point[i].pow(t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

Scalar Polynomial::evaluate(const std::map<std::size_t, Scalar>& assignment) const {
  Scalar sum = ring_->field().zero();
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (!t.monomial[i]) continue;
      auto it = assignment.find(i);
      if (it == assignment.end()) throw PreconditionError("no value assigned to " + ring_->layout().variable_name(i));
      v *= it->second.pow(t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (!(target->field() == ring_->field())) throw IncompatibleError("cannot move a polynomial between fields");
  std::uint32_t allowed = target->nvars() >= 32 ? ~0u : ((1u << target->nvars()) - 1);
  if (support() & ~allowed) throw IncompatibleError("polynomial uses variables missing from the target ring");
  if (target->order() == ring_->order()) return from_sorted(target, terms_);
  return from_terms(target, terms_);
}

Polynomial change_field(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->field() == target->field()) return f.map_to(target);
  if (!f.ring()->field().is_rational()) throw IncompatibleError("only rational polynomials can change field");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.monomial, target->field().from_rational(t.coefficient.rational())});
  std::uint32_t allowed = target->nvars() >= 32 ? ~0u : ((1u << target->nvars()) - 1);
  if (f.support() & ~allowed) throw IncompatibleError("polynomial uses variables missing from the target ring");
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t v) {
  if (v >= f.ring()->nvars()) throw PreconditionError("unknown variable index " + std::to_string(v));
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = t.monomial[v];
    if (!e) continue;
    Monomial m = t.monomial;
    m.set(v, e - 1);
    Scalar c = t.coefficient * f.ring()->field().from_int(e);
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

std::string point_block_name(std::size_t point, std::size_t factor) {
  return "z_" + std::to_string(point) + "_" + std::to_string(factor);
}

std::string source_block_name(std::size_t factor) { return "x_" + std::to_string(factor); }

Polynomial substitute_block(const Polynomial& f, const RingPtr& target, std::size_t point) {
  const auto& src = f.ring()->layout();
  const auto& dst = target->layout();
  std::vector<std::size_t> map(src.size());
  for (std::size_t b = 0; b < src.blocks().size(); ++b) {
    auto tb = dst.find_block(point_block_name(point, b));
    if (!tb) throw PreconditionError("target ring has no block " + point_block_name(point, b));
    if (dst.blocks()[*tb].size != src.blocks()[b].size)
      throw PreconditionError("block size mismatch for " + point_block_name(point, b));
    for (std::size_t j = 0; j < src.blocks()[b].size; ++j) map[src.index(b, j)] = dst.index(*tb, j);
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.monomial[i]) m.set(map[i], t.monomial[i]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace terracini
