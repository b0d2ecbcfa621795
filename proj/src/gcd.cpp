#include "terracini/gcd.hpp"

#include <algorithm>
#include <unordered_map>

#include "geobucket.hpp"
#include "terracini/errors.hpp"

namespace terracini {

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  if (a.is_zero()) return a;
  const Ring& ring = *a.ring();
  if (!b.leading_monomial().divides(a.leading_monomial())) return std::nullopt;
  if (!b.terms().back().monomial.divides(a.terms().back().monomial)) return std::nullopt;
  std::array<std::uint32_t, kMaxVariables> da{}, db{};
  for (const auto& t : a.terms())
    for (std::size_t i = 0; i < kMaxVariables; ++i) da[i] = std::max<std::uint32_t>(da[i], t.monomial[i]);
  for (const auto& t : b.terms())
    for (std::size_t i = 0; i < kMaxVariables; ++i) db[i] = std::max<std::uint32_t>(db[i], t.monomial[i]);
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (db[i] > da[i]) return std::nullopt;

  Scalar inv = b.leading_coefficient().inverse();
  detail::GeoBucket bucket(ring);
  bucket.add(a.terms());
  std::vector<Term> quotient;
  while (auto t = bucket.pop_leading()) {
    if (!b.leading_monomial().divides(t->monomial)) return std::nullopt;
    Monomial q = b.leading_monomial().quotient_of(t->monomial);
    Scalar c = t->coefficient * inv;
    bucket.add_scaled(b.terms(), 1, q, -c);
    quotient.push_back({q, std::move(c)});
  }
  return Polynomial::from_sorted(a.ring(), std::move(quotient));
}

namespace {

using u64 = std::uint64_t;
using UPoly = std::vector<u64>;  // coefficient of x^i at index i, no trailing zeros

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 inv(u64 a) const { return fp_inv({a, p}).residue; }
};

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 ueval(const Zp& z, const UPoly& a, u64 x) {
  u64 v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = z.add(z.mul(v, x), a[i]);
  return v;
}

UPoly umul(const Zp& z, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = z.add(c[i + j], z.mul(a[i], b[j]));
  trim(c);
  return c;
}

// a = q b + r
void udivmod(const Zp& z, UPoly a, const UPoly& b, UPoly* q, UPoly* r) {
  UPoly quot;
  u64 inv = z.inv(b.back());
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    u64 c = z.mul(a.back(), inv);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = z.sub(a[shift + j], z.mul(c, b[j]));
    trim(a);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(a);
}

UPoly umonic(const Zp& z, UPoly a) {
  if (a.empty()) return a;
  u64 inv = z.inv(a.back());
  for (auto& c : a) c = z.mul(c, inv);
  return a;
}

UPoly ugcd(const Zp& z, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r;
    udivmod(z, std::move(a), b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(z, std::move(a));
}

UPoly uquotient(const Zp& z, const UPoly& a, const UPoly& b) {
  UPoly q;
  udivmod(z, a, b, &q, nullptr);
  return q;
}

u64 residue(const Scalar& s) { return s.residue().residue; }

// f viewed as a polynomial in the other variables with coefficients in Zp[x].
using Grouped = std::unordered_map<Monomial, UPoly, MonomialHash>;

Grouped group(const Polynomial& f, std::size_t x) {
  Grouped g;
  for (const auto& t : f.terms()) {
    Monomial key = t.monomial;
    auto e = key[x];
    key.set(x, 0);
    UPoly& u = g[key];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] = residue(t.coefficient);
  }
  return g;
}

Polynomial ungroup(const Grouped& g, std::size_t x, const RingPtr& ring) {
  u64 p = ring->field().modulus();
  std::vector<Term> terms;
  for (const auto& [key, u] : g) {
    for (std::size_t e = 0; e < u.size(); ++e) {
      if (!u[e]) continue;
      Monomial m = key;
      m.set(x, static_cast<Monomial::Exponent>(e));
      terms.push_back({m, PrimeFieldElement{u[e], p}});
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial upoly_to_poly(const UPoly& u, std::size_t x, const RingPtr& ring) {
  Grouped g;
  g[Monomial()] = u;
  return ungroup(g, x, ring);
}

Polynomial eval_var(const Zp& z, const Polynomial& f, std::size_t x, u64 a) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  u64 p = z.p;
  std::vector<u64> powers{1};
  for (const auto& t : f.terms()) {
    auto e = t.monomial[x];
    while (powers.size() <= e) powers.push_back(z.mul(powers.back(), a));
    Monomial m = t.monomial;
    m.set(x, 0);
    terms.push_back({m, PrimeFieldElement{z.mul(residue(t.coefficient), powers[e]), p}});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::vector<std::size_t> variables_of(std::uint32_t mask) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

UPoly content_in_x(const Zp& z, const Grouped& g) {
  UPoly c;
  for (const auto& [key, u] : g) {
    c = c.empty() ? umonic(z, u) : ugcd(z, c, u);
    if (c.size() == 1) break;
  }
  return c;
}

const Monomial& leading_key(const Ring& ring, const Grouped& g) {
  const Monomial* best = nullptr;
  for (const auto& [key, u] : g)
    if (!best || ring.compare(key, *best) > 0) best = &key;
  return *best;
}

// gcd when b does not involve x: it divides every x-coefficient of a.
Polynomial gcd_with_free(const Polynomial& a, const Polynomial& b, std::size_t x) {
  Polynomial g = b;
  std::unordered_map<std::uint32_t, std::vector<Term>> by_power;
  for (const auto& t : a.terms()) {
    Monomial m = t.monomial;
    auto e = m[x];
    m.set(x, 0);
    by_power[e].push_back({m, t.coefficient});
  }
  std::vector<std::uint32_t> powers;
  for (auto& [e, terms] : by_power) powers.push_back(e);
  std::sort(powers.begin(), powers.end());
  for (auto e : powers) {
    if (g.is_constant()) break;
    Polynomial c = Polynomial::from_terms(a.ring(), std::move(by_power[e]));
    if (divide_exact(c, g)) continue;
    g = gcd_rec(g, c);
  }
  return g.monic();
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = a.ring();
  Zp z{ring->field().modulus()};
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(ring, 1);
  auto vars = variables_of(a.support() | b.support());
  if (vars.size() == 1) {
    std::size_t x = vars[0];
    UPoly ua = group(a, x).at(Monomial()), ub = group(b, x).at(Monomial());
    return upoly_to_poly(ugcd(z, ua, ub), x, ring);
  }
  std::size_t x = vars.back();
  bool a_has = a.support() & (1u << x), b_has = b.support() & (1u << x);
  if (!a_has) return gcd_with_free(b, a, x);
  if (!b_has) return gcd_with_free(a, b, x);

  Grouped ga = group(a, x), gb = group(b, x);
  UPoly ca = content_in_x(z, ga), cb = content_in_x(z, gb);
  UPoly c = ugcd(z, ca, cb);
  for (auto& [key, u] : ga) u = uquotient(z, u, ca);
  for (auto& [key, u] : gb) u = uquotient(z, u, cb);
  Polynomial a1 = ungroup(ga, x, ring), b1 = ungroup(gb, x, ring);
  // A side that is a polynomial in x alone is primitive only when it is 1.
  if ((ga.size() == 1 && ga.begin()->first.degree() == 0) || (gb.size() == 1 && gb.begin()->first.degree() == 0))
    return upoly_to_poly(c, x, ring).monic();
  const UPoly& lca = ga.at(leading_key(*ring, ga));
  const UPoly& lcb = gb.at(leading_key(*ring, gb));
  UPoly gamma = ugcd(z, lca, lcb);
  int deg_a = 0, deg_b = 0;
  for (const auto& [key, u] : ga) deg_a = std::max(deg_a, udeg(u));
  for (const auto& [key, u] : gb) deg_b = std::max(deg_b, udeg(u));
  int bound = udeg(gamma) + std::min(deg_a, deg_b);

  Grouped interp;
  Monomial interp_lead;
  UPoly modulus{1};
  bool have = false;
  for (u64 alpha = 1; alpha < z.p; ++alpha) {
    if (ueval(z, lca, alpha) == 0 || ueval(z, lcb, alpha) == 0) continue;
    Polynomial image = gcd_rec(eval_var(z, a1, x, alpha), eval_var(z, b1, x, alpha));
    if (image.is_constant()) return upoly_to_poly(c, x, ring).monic();
    image = image * Scalar(PrimeFieldElement{ueval(z, gamma, alpha), z.p});
    const Monomial& lead = image.leading_monomial();
    if (have) {
      auto cmp = ring->compare(lead, interp_lead);
      if (cmp > 0) continue;  // unlucky evaluation point
      if (cmp < 0) have = false;
    }
    if (!have) {
      interp.clear();
      for (const auto& t : image.terms()) interp[t.monomial] = UPoly{residue(t.coefficient)};
      interp_lead = lead;
      modulus = UPoly{z.sub(0, alpha), 1};
      have = true;
      continue;
    }
    bool changed = false;
    u64 scale = z.inv(ueval(z, modulus, alpha));
    Grouped image_map;
    for (const auto& t : image.terms()) image_map[t.monomial] = UPoly{residue(t.coefficient)};
    for (const auto& [key, u] : image_map) interp.try_emplace(key);
    for (auto& [key, u] : interp) {
      u64 target = 0;
      if (auto it = image_map.find(key); it != image_map.end()) target = it->second[0];
      u64 diff = z.sub(target, ueval(z, u, alpha));
      if (!diff) continue;
      changed = true;
      UPoly add = modulus;
      u64 f = z.mul(diff, scale);
      for (auto& v : add) v = z.mul(v, f);
      if (u.size() < add.size()) u.resize(add.size(), 0);
      for (std::size_t i = 0; i < add.size(); ++i) u[i] = z.add(u[i], add[i]);
      trim(u);
    }
    modulus = umul(z, modulus, UPoly{z.sub(0, alpha), 1});
    if (!changed || udeg(modulus) > bound + 1) {
      Grouped cand;
      for (auto& [key, u] : interp)
        if (!u.empty()) cand[key] = u;
      UPoly cc = content_in_x(z, cand);
      for (auto& [key, u] : cand) u = uquotient(z, u, cc);
      Polynomial candidate = ungroup(cand, x, ring);
      if (divide_exact(a1, candidate) && divide_exact(b1, candidate))
        return (upoly_to_poly(c, x, ring) * candidate).monic();
      if (udeg(modulus) > bound + 1) have = false;
    }
  }
  throw Error("internal error: gcd ran out of evaluation points");
}

Monomial monomial_content(const Polynomial& f) {
  Monomial m = f.terms().front().monomial;
  for (const auto& t : f.terms()) m = m.gcd(t.monomial);
  return m;
}

Polynomial divide_by_monomial(const Polynomial& f, const Monomial& m) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({m.quotient_of(t.monomial), t.coefficient});
  return Polynomial::from_sorted(f.ring(), std::move(terms));
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (!a.ring()->field().is_prime()) throw PreconditionError("polynomial gcd is implemented over prime fields only");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const RingPtr& ring = a.ring();
  Monomial ma = monomial_content(a), mb = monomial_content(b);
  Monomial mg = ma.gcd(mb);
  Polynomial a1 = divide_by_monomial(a, ma), b1 = divide_by_monomial(b, mb);
  if (a1.is_constant() || b1.is_constant()) return Polynomial::term(ring, mg, ring->field().one());

  // A gcd of block-homogeneous polynomials is block-homogeneous; setting one
  // variable per block to 1 loses nothing once monomial factors are gone.
  Zp z{ring->field().modulus()};
  const auto& layout = ring->layout();
  auto da = a1.multidegree(), db = b1.multidegree();
  struct Dehom {
    std::size_t begin, end, var;
  };
  std::vector<Dehom> dehom;
  if (da && db) {
    for (std::size_t blk = 0; blk < layout.blocks().size(); ++blk) {
      std::size_t begin = layout.block_offset(blk), end = begin + layout.blocks()[blk].size;
      std::size_t best = begin;
      std::uint64_t best_weight = 0;
      for (std::size_t v = begin; v < end; ++v) {
        std::uint64_t w = 0;
        for (const auto& t : a1.terms()) w += t.monomial[v];
        for (const auto& t : b1.terms()) w += t.monomial[v];
        if (w > best_weight) {
          best_weight = w;
          best = v;
        }
      }
      if (best_weight) dehom.push_back({begin, end, best});
    }
  }
  Polynomial a2 = a1, b2 = b1;
  for (const auto& d : dehom) {
    a2 = eval_var(z, a2, d.var, 1);
    b2 = eval_var(z, b2, d.var, 1);
  }
  Polynomial g = gcd_rec(a2, b2);
  for (const auto& d : dehom) {
    std::uint32_t top = 0;
    for (const auto& t : g.terms()) top = std::max(top, t.monomial.partial_degree(d.begin, d.end));
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.monomial;
      m.set(d.var, static_cast<Monomial::Exponent>(m[d.var] + top - m.partial_degree(d.begin, d.end)));
      terms.push_back({m, t.coefficient});
    }
    g = Polynomial::from_terms(ring, std::move(terms));
  }
  return g.mul_term(mg, ring->field().one()).monic();
}

Polynomial content_gcd(const std::vector<Polynomial>& polys) {
  std::vector<const Polynomial*> order;
  for (const auto& p : polys)
    if (!p.is_zero()) order.push_back(&p);
  if (order.empty()) throw PreconditionError("gcd of an empty list");
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->size() < y->size(); });
  Polynomial g = order.front()->monic();
  for (std::size_t i = 1; i < order.size() && !g.is_constant(); ++i) {
    if (divide_exact(*order[i], g)) continue;
    g = polynomial_gcd(g, *order[i]);
  }
  return g;
}

Polynomial strip_common_factors(Polynomial a, const Polynomial& h) {
  if (h.is_constant()) return a;
  for (;;) {
    while (auto q = divide_exact(a, h)) a = *q;
    Polynomial g = polynomial_gcd(a, h);
    if (g.is_constant()) return a;
    a = *divide_exact(a, g);
  }
}

}  // namespace terracini
