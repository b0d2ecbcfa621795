#include "terracini/varieties.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "terracini/errors.hpp"
#include "terracini/saturation.hpp"

namespace terracini {

namespace {

// Exponent vectors of degree d in `vars` variables, lexicographically descending.
void exponents(std::size_t vars, std::uint32_t d, std::vector<std::uint32_t>& cur,
               std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() + 1 == vars) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t e = d + 1; e-- > 0;) {
    cur.push_back(e);
    exponents(vars, d - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> exponents(std::size_t vars, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  exponents(vars, d, cur, out);
  return out;
}

void finish(ParamMap& map) {
  map.ell = validate_generic_rank(map, 3, 0);
  if (map.ell != map.source_dim() + 1)
    throw PreconditionError(map.name + ": generic Jacobian rank " + std::to_string(map.ell) + " differs from " +
                            std::to_string(map.source_dim() + 1));
}

// Integer multiple of a rational vector with coprime entries.
std::vector<Rational> primitive(const std::vector<Scalar>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& s : v) l = lcm(l, s.rational().denominator());
  std::vector<Rational> out;
  for (const auto& s : v) {
    mpz_class x = s.rational().numerator() * (l / s.rational().denominator());
    g = gcd(g, x);
    out.emplace_back(x);
  }
  if (g > 1)
    for (auto& x : out) x = Rational(mpz_class(x.numerator() / g));
  return out;
}

Polynomial rename_to_point(const Polynomial& f, const RingPtr& target, std::size_t point) {
  return substitute_block(f, target, point);
}

}  // namespace

std::size_t ParamMap::source_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t(0)); }

PolyMatrix ParamMap::jacobian() const {
  PolyMatrix j(ring, ring->nvars(), components.size());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    for (std::size_t c = 0; c < components.size(); ++c) j(i, c) = partial_derivative(components[c], i);
  return j;
}

PolyMatrix IdealVariety::jacobian_transpose() const {
  PolyMatrix j(ring, generators.size(), ring->nvars());
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t v = 0; v < ring->nvars(); ++v) j(g, v) = partial_derivative(generators[g], v);
  return j;
}

RingPtr source_ring(const Field& field, const std::vector<std::size_t>& dims) {
  std::vector<Block> blocks;
  for (std::size_t f = 0; f < dims.size(); ++f) blocks.push_back({source_block_name(f), dims[f] + 1});
  return Ring::make(field, VariableLayout(std::move(blocks)));
}

ParamMap veronese(std::size_t n, std::uint32_t d) {
  if (n < 1 || d < 1) throw PreconditionError("veronese needs n >= 1 and d >= 1");
  auto map = segre_veronese({n}, {d});
  map.name = "veronese(" + std::to_string(n) + "," + std::to_string(d) + ")";
  return map;
}

ParamMap segre_veronese(const std::vector<std::size_t>& dims, const std::vector<std::uint32_t>& degrees) {
  if (dims.size() != degrees.size()) throw PreconditionError("segre_veronese: dimension and degree lists differ in length");
  if (dims.empty()) throw PreconditionError("segre_veronese: no factors");
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (dims[f] < 1 || degrees[f] < 1) throw PreconditionError("segre_veronese: entries must be >= 1");
  std::size_t total = 0;
  for (auto n : dims) total += n + 1;
  if (total > kMaxVariables) throw PreconditionError("segre_veronese: too many source variables");
  ParamMap map;
  map.dims = dims;
  map.degrees = degrees;
  map.ring = source_ring(Field::rationals(), dims);
  std::vector<Monomial> products{Monomial()};
  std::size_t offset = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    std::vector<Monomial> next;
    auto exps = exponents(dims[f] + 1, degrees[f]);
    for (const auto& base : products) {
      for (const auto& e : exps) {
        Monomial m = base;
        for (std::size_t j = 0; j < e.size(); ++j) m.set(offset + j, static_cast<Monomial::Exponent>(e[j]));
        next.push_back(m);
      }
    }
    products = std::move(next);
    offset += dims[f] + 1;
  }
  for (const auto& m : products) map.components.push_back(Polynomial::term(map.ring, m, map.ring->field().one()));
  map.name = "segre_veronese(";
  for (std::size_t f = 0; f < dims.size(); ++f) map.name += (f ? "," : "") + std::to_string(dims[f]);
  map.name += ";";
  for (std::size_t f = 0; f < dims.size(); ++f) map.name += (f ? "," : "") + std::to_string(degrees[f]);
  map.name += ")";
  finish(map);
  return map;
}

ParamMap rational_curve(const std::vector<std::vector<Rational>>& coefficients) {
  if (coefficients.empty() || coefficients[0].empty()) throw PreconditionError("rational_curve: empty coefficient matrix");
  std::size_t width = coefficients[0].size();
  for (const auto& row : coefficients)
    if (row.size() != width) throw PreconditionError("rational_curve: ragged coefficient matrix");
  ScalarMatrix c(Field::rationals(), coefficients.size(), width);
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    for (std::size_t i = 0; i < width; ++i) c(j, i) = coefficients[j][i];
  if (rank(c) != coefficients.size())
    throw PreconditionError("rational_curve: coefficient matrix is rank-deficient (degenerate image)");
  std::uint32_t d = static_cast<std::uint32_t>(width - 1);
  ParamMap map;
  map.dims = {1};
  map.degrees = {d};
  map.ring = source_ring(Field::rationals(), {1});
  for (const auto& row : coefficients) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < width; ++i) {
      Monomial m;
      m.set(0, static_cast<Monomial::Exponent>(d - i));
      m.set(1, static_cast<Monomial::Exponent>(i));
      terms.push_back({m, row[i]});
    }
    map.components.push_back(Polynomial::from_terms(map.ring, std::move(terms)));
  }
  map.name = "rational_curve(deg " + std::to_string(d) + " in P^" + std::to_string(coefficients.size() - 1) + ")";
  finish(map);
  return map;
}

std::vector<std::vector<std::int64_t>> del_pezzo_base_points() { return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}; }

ParamMap del_pezzo(int t) {
  if (t < 1 || t > 4) throw PreconditionError("del_pezzo: t must be in 1..4");
  auto cubics = veronese(2, 3);
  auto points = del_pezzo_base_points();
  auto q = Field::rationals();
  ScalarMatrix eval(q, static_cast<std::size_t>(t), cubics.components.size());
  for (int i = 0; i < t; ++i) {
    std::vector<Scalar> p;
    for (auto v : points[i]) p.push_back(q.from_int(v));
    for (std::size_t j = 0; j < cubics.components.size(); ++j) eval(i, j) = cubics.components[j].evaluate(p);
  }
  ParamMap map;
  map.dims = {2};
  map.degrees = {3};
  map.ring = cubics.ring;
  for (const auto& v : kernel_basis(eval)) {
    auto coeffs = primitive(v);
    Polynomial f(map.ring);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (!coeffs[j].is_zero()) f += cubics.components[j] * Scalar(coeffs[j]);
    map.components.push_back(f);
  }
  map.name = "del_pezzo(" + std::to_string(t) + ")";
  finish(map);
  return map;
}

IdealVariety from_ideal(std::size_t n, const std::vector<Polynomial>& generators) {
  IdealVariety x;
  x.n = n;
  x.ring = source_ring(Field::rationals(), {n});
  for (const auto& g : generators) {
    Polynomial h = change_field(g, x.ring);
    if (h.is_zero()) continue;
    if (!h.is_homogeneous()) throw PreconditionError("from_ideal: generator " + h.to_string() + " is not homogeneous");
    x.generators.push_back(h);
  }
  int krull = krull_dimension(Ideal(x.ring, x.generators));
  if (krull < 1) throw PreconditionError("from_ideal: the ideal defines the empty projective variety");
  x.ell = n + 1 - static_cast<std::size_t>(krull);
  if (x.ell < 1) throw PreconditionError("from_ideal: the ideal is zero");
  x.name = "ideal(P^" + std::to_string(n) + ", " + std::to_string(x.generators.size()) + " generators)";
  return x;
}

std::size_t validate_generic_rank(const ParamMap& map, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("validate_generic_rank: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, 1000);
  auto q = map.ring->field();
  auto j = map.jacobian();
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Scalar> p;
    for (std::size_t v = 0; v < map.ring->nvars(); ++v) p.push_back(q.from_int(rng() % 2 ? dist(rng) : -dist(rng)));
    best = std::max(best, rank(j.evaluate(p)));
  }
  return best;
}

std::size_t component_rank(const ParamMap& map) {
  std::vector<Monomial> monos;
  for (const auto& f : map.components)
    for (const auto& t : f.terms())
      if (std::find(monos.begin(), monos.end(), t.monomial) == monos.end()) monos.push_back(t.monomial);
  ScalarMatrix c(map.ring->field(), map.components.size(), monos.size());
  for (std::size_t j = 0; j < map.components.size(); ++j)
    for (const auto& t : map.components[j].terms())
      c(j, std::find(monos.begin(), monos.end(), t.monomial) - monos.begin()) = t.coefficient;
  return rank(c);
}

bool curve_is_smooth(const ParamMap& curve, const Field& field) {
  if (curve.dims != std::vector<std::size_t>{1}) throw PreconditionError("curve_is_smooth: source is not P^1");
  auto ring = source_ring(field, {1});
  PolyMatrix j(ring, 2, curve.components.size());
  auto jac = curve.jacobian();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t c = 0; c < curve.components.size(); ++c) j(i, c) = change_field(jac(i, c), ring);
  if (krull_dimension(Ideal(ring, k_minors(j, 2).minors)) > 0) return false;

  auto pairs = Ring::make(field, VariableLayout({Block{point_block_name(0, 0), 2}, Block{point_block_name(1, 0), 2}}));
  auto src = source_ring(field, {1});
  PolyMatrix rows(pairs, 2, curve.components.size());
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    Polynomial f = change_field(curve.components[c], src);
    rows(0, c) = rename_to_point(f, pairs, 0);
    rows(1, c) = rename_to_point(f, pairs, 1);
  }
  auto v = [&](std::size_t i) { return Polynomial::variable(pairs, i); };
  std::vector<std::vector<Polynomial>> steps{{v(0) * v(3) - v(1) * v(2)}, {v(0), v(1)}, {v(2), v(3)}};
  auto result = saturate_sequence(pairs, k_minors(rows, 2).minors, steps);
  return result.is_unit();
}

bool ideal_variety_is_smooth(const IdealVariety& x, const Field& field) {
  auto ring = source_ring(field, {x.n});
  auto jt = x.jacobian_transpose();
  PolyMatrix j(ring, jt.rows(), jt.cols());
  std::vector<Polynomial> gens;
  for (const auto& g : x.generators) gens.push_back(change_field(g, ring));
  for (std::size_t r = 0; r < jt.rows(); ++r)
    for (std::size_t c = 0; c < jt.cols(); ++c) j(r, c) = change_field(jt(r, c), ring);
  for (auto& m : k_minors(j, x.ell).minors) gens.push_back(std::move(m));
  return krull_dimension(Ideal(ring, gens)) <= 0;
}

OcticChoice rational_octic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int draws = 1; draws <= 64; ++draws) {
    std::size_t drop = rng() % 9;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < 9; ++i) {
      if (i == drop) continue;
      std::vector<Rational> row(9, Rational(0));
      row[i] = Rational(1);
      rows.push_back(row);
    }
    ParamMap map = rational_curve(rows);
    if (!curve_is_smooth(map, Field::prime(32003))) continue;
    map.name = "rational_octic(seed " + std::to_string(seed) + ", dropped x^" + std::to_string(8 - drop) + "*y^" +
               std::to_string(drop) + ")";
    return {map, drop, draws};
  }
  throw Error("rational_octic: no smooth projection found");
}

IdealVariety elliptic_quartic() {
  auto ring = source_ring(Field::rationals(), {3});
  auto x = from_ideal(3, {Polynomial::parse(ring, "x_0_0*x_0_1-x_0_2^2"),
                          Polynomial::parse(ring, "x_0_0^2+x_0_1^2+x_0_2^2-3*x_0_3^2")});
  x.name = "elliptic_quartic";
  return x;
}

IdealVariety twisted_cubic_ideal() {
  auto ring = source_ring(Field::rationals(), {3});
  auto x = from_ideal(3, {Polynomial::parse(ring, "x_0_0*x_0_2-x_0_1^2"), Polynomial::parse(ring, "x_0_0*x_0_3-x_0_1*x_0_2"),
                          Polynomial::parse(ring, "x_0_1*x_0_3-x_0_2^2")});
  x.name = "twisted_cubic";
  return x;
}

int variety_dimension(const Variety& v) {
  if (auto* p = std::get_if<ParamMap>(&v)) return static_cast<int>(p->source_dim());
  return std::get<IdealVariety>(v).dimension();
}

std::size_t ambient_dimension(const Variety& v) {
  if (auto* p = std::get_if<ParamMap>(&v)) return p->m();
  return std::get<IdealVariety>(v).n;
}

const std::string& variety_name(const Variety& v) {
  if (auto* p = std::get_if<ParamMap>(&v)) return p->name;
  return std::get<IdealVariety>(v).name;
}

}  // namespace terracini
