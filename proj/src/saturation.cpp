#include "terracini/saturation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "terracini/errors.hpp"
#include "terracini/gcd.hpp"

namespace terracini {

namespace {

bool all_homogeneous(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

RingPtr with_weighted_variable(const RingPtr& ring, std::uint32_t weight) {
  std::string name = "u";
  for (int k = 1; ring->layout().find_block(name); ++k) name = "u" + std::to_string(k);
  auto layout = ring->layout().with_block(Block{name, 1, true});
  std::vector<std::uint32_t> weights(layout.size(), 1);
  weights.back() = weight;
  return Ring::make(ring->field(), std::move(layout), MonomialOrder::weighted_degrevlex(std::move(weights)));
}

// g(u = f) for g in the extended ring, after dividing out the largest power of u.
Polynomial substitute_last(const Polynomial& g, std::size_t u, const Polynomial& f, std::vector<Polynomial>& powers) {
  const RingPtr& ring = f.ring();
  std::uint32_t low = ~0u;
  for (const auto& t : g.terms()) low = std::min<std::uint32_t>(low, t.monomial[u]);
  std::vector<std::vector<Term>> by_power;
  for (const auto& t : g.terms()) {
    std::size_t e = t.monomial[u] - low;
    if (by_power.size() <= e) by_power.resize(e + 1);
    Monomial m = t.monomial;
    m.set(u, 0);
    by_power[e].push_back({m, t.coefficient});
  }
  Polynomial out(ring);
  for (std::size_t e = 0; e < by_power.size(); ++e) {
    if (by_power[e].empty()) continue;
    while (powers.size() <= e) powers.push_back(powers.empty() ? Polynomial::constant(ring, 1) : powers.back() * f);
    out += Polynomial::from_terms(ring, std::move(by_power[e])) * powers[e];
  }
  return out;
}

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

}  // namespace

Ideal saturate_homogeneous(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  Polynomial g0 = f.map_to(ideal.ring());
  if (g0.is_constant() || ideal.is_zero()) return ideal;
  if (!g0.is_homogeneous() || !all_homogeneous(ideal.generators())) return saturate(ideal, g0);
  auto ext = with_weighted_variable(ideal.ring(), g0.total_degree());
  std::size_t u = ideal.ring()->nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(ext));
  gens.push_back(Polynomial::variable(ext, u) - g0.map_to(ext));
  auto basis = buchberger(gens, ext);
  std::vector<Polynomial> powers;
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    Polynomial s = substitute_last(g, u, g0, powers);
    if (s.is_zero()) continue;
    if (s.is_constant()) return Ideal::unit(ideal.ring());
    out.push_back(std::move(s));
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal FactoredIdeal::expand() const {
  std::vector<Polynomial> gens;
  for (const auto& g : cofactor.groebner_basis()) gens.push_back(content.map_to(cofactor.ring()) * g);
  return Ideal(cofactor.ring(), std::move(gens));
}

std::vector<Polynomial> FactoredIdeal::groebner_basis() const {
  const auto& base = cofactor.groebner_basis();
  Polynomial c = content.map_to(cofactor.ring()).monic();
  if (c.is_constant()) return base;
  if (base.empty()) return {};
  std::vector<Polynomial> scaled;
  for (const auto& g : base) scaled.push_back(c * g);
  // c * G is a minimal basis; reduce tails to make it reduced.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < scaled.size(); ++j)
      if (j != i) others.push_back(scaled[j]);
    std::vector<Term> tail(scaled[i].terms().begin() + 1, scaled[i].terms().end());
    Polynomial rest = normal_form(Polynomial::from_sorted(scaled[i].ring(), std::move(tail)), others);
    std::vector<Term> terms{scaled[i].leading_term()};
    terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
    out.push_back(Polynomial::from_sorted(scaled[i].ring(), std::move(terms)));
  }
  return out;
}

int FactoredIdeal::krull_dimension() const {
  int k = terracini::krull_dimension(cofactor);
  if (!content.is_constant()) k = std::max(k, static_cast<int>(cofactor.ring()->nvars()) - 1);
  return k;
}

bool FactoredIdeal::is_unit() const { return content.is_constant() && cofactor.is_unit(); }

FactoredIdeal saturate_sequence(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const std::vector<std::vector<Polynomial>>& steps, const SaturationOptions& options) {
  if (options.method == SaturationMethod::textbook || !ring->field().is_prime()) {
    Ideal k(ring, gens);
    for (const auto& step : steps) {
      if (k.is_unit()) break;
      k = saturate_by_ideal(k, Ideal(ring, step));
    }
    return {one(ring), k};
  }

  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g.map_to(ring));
  if (nonzero.empty()) return {one(ring), Ideal::zero(ring)};
  Polynomial content = content_gcd(nonzero);
  std::vector<Polynomial> reduced;
  for (const auto& g : nonzero) reduced.push_back(*divide_exact(g, content));
  Ideal k(ring, std::move(reduced));
  std::mt19937_64 rng(options.seed);

  for (const auto& raw_step : steps) {
    std::vector<Polynomial> step;
    for (const auto& g : raw_step)
      if (!g.is_zero()) step.push_back(g.map_to(ring));
    if (step.empty()) throw PreconditionError("saturation by the zero ideal");
    Polynomial h = content_gcd(step);
    if (!h.is_constant()) {
      content = strip_common_factors(content, h);
      if (!k.is_unit()) k = saturate_homogeneous(k, h);
    }
    if (k.is_unit()) continue;
    std::vector<Polynomial> rest;
    bool trivial = false;
    for (const auto& g : step) {
      Polynomial q = *divide_exact(g, h);
      if (q.is_constant()) trivial = true;
      rest.push_back(std::move(q));
    }
    if (trivial) continue;
    Polynomial f = rest.front();
    if (rest.size() > 1) {
      // Raise to a common degree so the combination stays homogeneous; this
      // keeps the radical, hence the saturation.
      std::uint32_t lcm = 1;
      for (const auto& g : rest) lcm = std::lcm(lcm, g.total_degree());
      f = Polynomial(ring);
      for (const auto& g : rest) f += g.pow(lcm / g.total_degree()) * ring->field().random_nonzero(rng);
      if (f.is_zero()) f = rest.front();
    }
    k = saturate_homogeneous(k, f);
  }
  return {content.monic(), k};
}

}  // namespace terracini
