#include <algorithm>
#include <atomic>
#include <set>

#include "geobucket.hpp"
#include "terracini/errors.hpp"
#include "terracini/ideal.hpp"

namespace terracini {

namespace {

std::atomic<bool> g_verify{false};
std::atomic<std::uint64_t> g_bases{0}, g_verified{0}, g_failures{0}, g_reductions{0};

struct Element {
  Polynomial poly;
  Monomial lead;
  std::uint32_t mask;
  std::uint32_t sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
  std::uint32_t sugar;
};

struct PairKey {
  std::uint32_t sugar, degree;
  std::size_t i, j;
  auto operator<=>(const PairKey&) const = default;
};

class Reducer {
 public:
  Reducer(const Ring& ring, const std::vector<Element>& basis) : ring_(ring), basis_(basis) {}

  // Index of the shortest active basis element whose leading monomial divides m.
  int find_divisor(const Monomial& m) const {
    std::uint32_t mask = m.support();
    int best = -1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Element& e = basis_[k];
      if (!e.active || (e.mask & ~mask) || !e.lead.divides(m)) continue;
      if (best < 0 || e.poly.size() < basis_[best].poly.size()) best = static_cast<int>(k);
    }
    return best;
  }

  // Fully reduces the contents of the bucket.
  std::vector<Term> reduce(detail::GeoBucket& bucket) const {
    std::vector<Term> out;
    while (auto t = bucket.pop_leading()) {
      int d = find_divisor(t->monomial);
      if (d < 0) {
        out.push_back(std::move(*t));
        continue;
      }
      const Element& e = basis_[d];
      Monomial q = e.lead.quotient_of(t->monomial);
      Scalar c = -(t->coefficient / e.poly.leading_coefficient());
      bucket.add_scaled(e.poly.terms(), 1, q, c);
      ++g_reductions;
    }
    return out;
  }

 private:
  const Ring& ring_;
  const std::vector<Element>& basis_;
};

Element make_element(Polynomial p, std::uint32_t sugar) {
  Monomial lead = p.leading_monomial();
  return Element{std::move(p), lead, lead.support(), sugar, true};
}

class Engine {
 public:
  explicit Engine(const RingPtr& ring) : ring_(ring), reducer_(*ring, basis_) {}

  void add_generator(const Polynomial& g) {
    detail::GeoBucket bucket(*ring_);
    bucket.add(g.terms());
    auto terms = reducer_.reduce(bucket);
    if (terms.empty()) return;
    Polynomial h = Polynomial::from_sorted(ring_, std::move(terms)).monic();
    std::uint32_t sugar = g.total_degree();
    insert(std::move(h), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      Pair p = it->second;
      pairs_.erase(it);
      const Element& a = basis_[p.i];
      const Element& b = basis_[p.j];
      detail::GeoBucket bucket(*ring_);
      bucket.add_scaled(a.poly.terms(), 1, a.lead.quotient_of(p.lcm), ring_->field().one());
      bucket.add_scaled(b.poly.terms(), 1, b.lead.quotient_of(p.lcm), -ring_->field().one());
      auto terms = reducer_.reduce(bucket);
      if (terms.empty()) continue;
      Polynomial h = Polynomial::from_sorted(ring_, std::move(terms)).monic();
      insert(std::move(h), p.sugar);
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k].active) live.push_back(k);
    std::vector<Polynomial> out;
    for (auto k : live) {
      if (basis_[k].lead.degree() == 0) return {Polynomial::constant(ring_, 1)};
    }
    for (auto k : live) {
      const Element& e = basis_[k];
      detail::GeoBucket bucket(*ring_);
      bucket.add_scaled(e.poly.terms(), 1, Monomial(), ring_->field().one());
      std::vector<Term> terms{e.poly.leading_term()};
      auto tail = reducer_.reduce(bucket);
      terms.insert(terms.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
      out.push_back(Polynomial::from_sorted(ring_, std::move(terms)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& x, const Polynomial& y) {
      return ring_->compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial h, std::uint32_t sugar) {
    std::size_t hi = basis_.size();
    basis_.push_back(make_element(std::move(h), sugar));
    const Element& eh = basis_[hi];

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (basis_[k].active) candidates.push_back(k);
    std::vector<Monomial> lcms;
    for (auto k : candidates) lcms.push_back(eh.lead.lcm(basis_[k].lead));

    std::vector<std::size_t> kept;  // positions into candidates
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (eh.lead.coprime(basis_[candidates[c]].lead)) {
        kept.push_back(c);
        continue;
      }
      bool redundant = false;
      for (std::size_t d = c + 1; d < candidates.size() && !redundant; ++d)
        redundant = lcms[d].divides(lcms[c]);
      for (std::size_t d = 0; d < kept.size() && !redundant; ++d)
        redundant = lcms[kept[d]].divides(lcms[c]);
      if (!redundant) kept.push_back(c);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = it->second;
      if (eh.lead.divides(p.lcm) && !(basis_[p.i].lead.lcm(eh.lead) == p.lcm) &&
          !(basis_[p.j].lead.lcm(eh.lead) == p.lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (auto c : kept) {
      std::size_t k = candidates[c];
      if (eh.lead.coprime(basis_[k].lead)) continue;
      const Monomial& l = lcms[c];
      std::uint32_t s = std::max(basis_[k].sugar + l.degree() - basis_[k].lead.degree(),
                                 eh.sugar + l.degree() - eh.lead.degree());
      pairs_.emplace(PairKey{s, l.degree(), k, hi}, Pair{k, hi, l, s});
    }

    for (std::size_t k = 0; k < hi; ++k)
      if (basis_[k].active && eh.lead.divides(basis_[k].lead)) basis_[k].active = false;
  }

  RingPtr ring_;
  std::vector<Element> basis_;
  Reducer reducer_;
  std::multimap<PairKey, Pair> pairs_;
};

std::vector<Polynomial> prepare(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (!(g.ring()->layout() == ring->layout())) throw IncompatibleError("generator from a different layout");
    if (g.is_zero()) continue;
    out.push_back(g.map_to(ring));
  }
  std::stable_sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

}  // namespace

void set_default_verification(bool on) { g_verify = on; }
bool default_verification() { return g_verify; }

GroebnerStats groebner_stats() { return {g_bases, g_verified, g_failures, g_reductions}; }

void reset_groebner_stats() {
  g_bases = 0;
  g_verified = 0;
  g_failures = 0;
  g_reductions = 0;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  return buchberger(gens, ring, GroebnerOptions{default_verification()});
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                   const GroebnerOptions& options) {
  auto prepared = prepare(gens, ring);
  std::vector<Polynomial> basis;
  if (!prepared.empty() && prepared.front().is_constant()) {
    basis.push_back(Polynomial::constant(ring, 1));
  } else {
    Engine engine(ring);
    for (const auto& g : prepared) engine.add_generator(g);
    engine.run();
    basis = engine.reduced_basis();
  }
  ++g_bases;
  if (options.verify) {
    ++g_verified;
    if (!satisfies_buchberger_criterion(basis)) {
      ++g_failures;
      throw Error("internal error: Buchberger post-check failed");
    }
  }
  return basis;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<Element> elements;
  for (const auto& g : basis) {
    if (!(*g.ring() == *f.ring())) throw IncompatibleError("normal form against a basis for another ring or order");
    if (!g.is_zero()) elements.push_back(make_element(g, g.total_degree()));
  }
  Reducer reducer(*f.ring(), elements);
  detail::GeoBucket bucket(*f.ring());
  bucket.add(f.terms());
  return Polynomial::from_sorted(f.ring(), reducer.reduce(bucket));
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  if (basis.empty()) return true;
  const RingPtr& ring = basis.front().ring();
  std::vector<Element> elements;
  for (const auto& g : basis) elements.push_back(make_element(g, g.total_degree()));
  Reducer reducer(*ring, elements);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const Element& a = elements[i];
      const Element& b = elements[j];
      if (a.lead.coprime(b.lead)) continue;
      Monomial l = a.lead.lcm(b.lead);
      detail::GeoBucket bucket(*ring);
      bucket.add_scaled(a.poly.terms(), 1, a.lead.quotient_of(l), a.poly.leading_coefficient().inverse());
      bucket.add_scaled(b.poly.terms(), 1, b.lead.quotient_of(l), -b.poly.leading_coefficient().inverse());
      if (!reducer.reduce(bucket).empty()) return false;
    }
  }
  return true;
}

}  // namespace terracini
