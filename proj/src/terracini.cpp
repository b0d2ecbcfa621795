#include "terracini/terracini.hpp"

#include <algorithm>
#include <chrono>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

std::vector<std::size_t> source_dims(const Variety& v) {
  if (auto* p = std::get_if<ParamMap>(&v)) return p->dims;
  return {std::get<IdealVariety>(v).n};
}

ScalarMatrix vector_pair(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  ScalarMatrix m(Field::rationals(), 2, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  return m;
}

std::vector<Scalar> flatten(const std::vector<std::vector<Rational>>& point) {
  std::vector<Scalar> out;
  for (const auto& factor : point)
    for (const auto& c : factor) out.emplace_back(c);
  return out;
}

void require_admissible(const Variety& v, std::size_t r) {
  auto range = admissible_r_range(v);
  if (!range.contains(static_cast<int>(r)))
    throw PreconditionError("r = " + std::to_string(r) + " is outside the admissible range " +
                            (range.empty() ? std::string("(empty)")
                                           : "[" + std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]") +
                            " for " + variety_name(v));
}

// 2 x 2 minors of the coordinate matrix of two blocks of equal size.
std::vector<Polynomial> block_pair_minors(const RingPtr& ring, std::size_t a, std::size_t b, std::size_t size) {
  PolyMatrix z(ring, 2, size);
  for (std::size_t j = 0; j < size; ++j) {
    z(0, j) = Polynomial::variable(ring, a + j);
    z(1, j) = Polynomial::variable(ring, b + j);
  }
  return k_minors(z, 2).minors;
}

// A(z_i) for every point: the matrix `a` over the source ring with the source
// variables renamed to those of point i.
std::vector<PolyMatrix> per_point(const PolyMatrix& a, const RingPtr& src, const RingPtr& ring, std::size_t r) {
  std::vector<PolyMatrix> out;
  for (std::size_t i = 0; i < r; ++i) {
    PolyMatrix m(ring, a.rows(), a.cols());
    for (std::size_t x = 0; x < a.rows(); ++x)
      for (std::size_t y = 0; y < a.cols(); ++y) m(x, y) = substitute_block(change_field(a(x, y), src), ring, i);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

bool same_projective_point(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  return rank(vector_pair(a, b)) < 2;
}

void validate_config(const PointConfig& s, const std::vector<std::size_t>& dims) {
  if (s.r() < 1) throw PreconditionError("a point configuration needs at least one point");
  for (std::size_t i = 0; i < s.r(); ++i) {
    if (s.points[i].size() != dims.size())
      throw PreconditionError("point " + std::to_string(i) + " has " + std::to_string(s.points[i].size()) +
                              " factors, expected " + std::to_string(dims.size()));
    for (std::size_t f = 0; f < dims.size(); ++f) {
      const auto& v = s.points[i][f];
      if (v.size() != dims[f] + 1)
        throw PreconditionError("point " + std::to_string(i) + " factor " + std::to_string(f) + " has " +
                                std::to_string(v.size()) + " coordinates, expected " + std::to_string(dims[f] + 1));
      if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); }))
        throw PreconditionError("point " + std::to_string(i) + " factor " + std::to_string(f) + " is the zero vector");
    }
  }
  for (std::size_t i = 0; i < s.r(); ++i)
    for (std::size_t j = i + 1; j < s.r(); ++j) {
      bool same = true;
      for (std::size_t f = 0; f < dims.size() && same; ++f) same = same_projective_point(s.points[i][f], s.points[j][f]);
      if (same) throw PreconditionError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    }
}

RRange admissible_r_range(const Variety& v) {
  if (auto* p = std::get_if<ParamMap>(&v))
    if (component_rank(*p) != p->components.size())
      throw PreconditionError(p->name + " is degenerate: its components are linearly dependent");
  int n = static_cast<int>(ambient_dimension(v));
  int dim = variety_dimension(v);
  return RRange{2, (n + 1) / (dim + 1)};
}

ScalarMatrix stacked_jacobian(const ParamMap& map, const PointConfig& s) {
  validate_config(s, map.dims);
  auto j = map.jacobian();
  std::optional<ScalarMatrix> out;
  for (std::size_t i = 0; i < s.r(); ++i) {
    auto block = j.evaluate(flatten(s.points[i]));
    if (rank(block) < map.ell)
      throw SingularPointError("point " + std::to_string(i) + " is singular for " + map.name + " (Jacobian rank " +
                               std::to_string(rank(block)) + " < " + std::to_string(map.ell) + ")");
    out = out ? ScalarMatrix::stack(*out, block) : block;
  }
  return *out;
}

Membership membership_param(const ParamMap& map, const PointConfig& s) {
  require_admissible(map, s.r());
  auto a = stacked_jacobian(map, s);
  Membership m;
  m.rank = rank(a);
  m.threshold = std::min(s.r() * (map.source_dim() + 1), map.components.size());
  m.member = m.rank < m.threshold;
  return m;
}

Membership membership_ideal(const IdealVariety& x, const PointConfig& s) {
  if (s.r() != 2) throw PreconditionError("the ideal route supports r = 2 only");
  require_admissible(x, 2);
  validate_config(s, {x.n});
  auto jt = x.jacobian_transpose();
  std::optional<ScalarMatrix> stacked;
  for (std::size_t i = 0; i < 2; ++i) {
    auto p = flatten(s.points[i]);
    for (const auto& g : x.generators)
      if (!g.evaluate(p).is_zero())
        throw PreconditionError("point " + std::to_string(i) + " is not on X (" + g.to_string() + " does not vanish)");
    auto block = jt.evaluate(p);
    if (rank(block) != x.ell)
      throw SingularPointError("point " + std::to_string(i) + " is singular on " + x.name);
    stacked = stacked ? ScalarMatrix::stack(*stacked, block) : block;
  }
  Membership m;
  m.rank = rank(*stacked);
  m.threshold = std::min(2 * x.ell, x.n + 1);
  m.member = m.rank < m.threshold;
  return m;
}

TerraciniIdeal terracini_ideal(const Variety& v, std::size_t r, const TerraciniOptions& options) {
  require_admissible(v, r);
  if (std::holds_alternative<IdealVariety>(v) && r != 2) throw PreconditionError("the ideal route supports r = 2 only");
  auto dims = source_dims(v);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t f = 0; f < dims.size(); ++f) blocks.push_back({point_block_name(i, f), dims[f] + 1});
  std::size_t nvars = 0;
  for (const auto& b : blocks) nvars += b.size;
  if (nvars > kMaxVariables) throw PreconditionError("too many variables (" + std::to_string(nvars) + ")");
  auto ring = Ring::make(options.field, VariableLayout(blocks));
  auto src = source_ring(options.field, dims);

  std::vector<Polynomial> gens;
  bool exact = false;
  std::vector<PolyMatrix> points;
  std::size_t ell = 0, t = 0;
  if (auto* p = std::get_if<ParamMap>(&v)) {
    ell = p->ell;
    points = per_point(p->jacobian(), src, ring, r);
    t = p->components.size();
  } else {
    const auto& x = std::get<IdealVariety>(v);
    ell = x.ell;
    points = per_point(x.jacobian_transpose(), src, ring, r);
    t = x.n + 1;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& g : x.generators) gens.push_back(substitute_block(change_field(g, src), ring, i));
    exact = true;
  }
  std::size_t minor_size = std::min(r * ell, t);
  auto minors = k_minors(PolyMatrix::stack(points), minor_size, options.max_minors, options.seed);
  bool capped = minors.capped;
  std::size_t minor_count = minors.minors.size();
  for (auto& m : minors.minors) gens.push_back(std::move(m));

  std::vector<std::vector<Polynomial>> steps;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<Polynomial> dup;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        auto a = ring->layout().block_offset(i * dims.size() + f);
        auto b = ring->layout().block_offset(j * dims.size() + f);
        for (auto& m : block_pair_minors(ring, a, b, dims[f] + 1)) dup.push_back(std::move(m));
      }
      steps.push_back(std::move(dup));
    }
  for (const auto& a : points) steps.push_back(k_minors(a, ell).minors);
  return TerraciniIdeal{ring,        saturate_sequence(ring, gens, steps, {options.method, options.seed}),
                        r,           dims.size(),
                        minor_size,  minor_count,
                        capped,      exact,
                        options.seed};
}

TerraciniReport locus_dimension(const TerraciniIdeal& t) {
  TerraciniReport rep;
  rep.field = t.ring->field().selector();
  rep.seed = t.seed;
  rep.r = t.r;
  rep.k = t.k;
  rep.krull_dim = t.ideal.krull_dimension();
  rep.empty = rep.krull_dim < 0;
  if (!rep.empty) rep.locus_dim = rep.krull_dim - static_cast<int>(t.r * t.k);
  rep.exactness = t.exact && t.r == 2 ? "exact" : "lower-bound";
  rep.capped = t.capped;
  for (const auto& g : t.ideal.groebner_basis()) rep.generators.push_back(g.to_string());
  return rep;
}

std::vector<Scalar> config_assignment(const TerraciniIdeal& t, const PointConfig& s) {
  if (s.r() != t.r) throw PreconditionError("configuration size does not match the ideal");
  std::vector<Scalar> out;
  for (const auto& point : s.points)
    for (const auto& factor : point)
      for (const auto& c : factor) out.push_back(t.ring->field().from_rational(c));
  if (out.size() != t.ring->nvars()) throw PreconditionError("configuration shape does not match the ideal");
  return out;
}

FirstNonempty first_nonempty_r_veronese(std::uint32_t d) {
  if (d < 1) throw PreconditionError("degree must be positive");
  return {static_cast<int>((d + 3) / 2), {1}};
}

FirstNonempty first_nonempty_r_segre_veronese(const std::vector<std::uint32_t>& degrees) {
  if (degrees.empty()) throw PreconditionError("no factors");
  if (std::count(degrees.begin(), degrees.end(), 1u) > 1)
    throw PreconditionError("more than one factor of degree 1 (defective case)");
  FirstNonempty out{1 << 30, {}};
  for (auto d : degrees) {
    if (d < 1) throw PreconditionError("degrees must be positive");
    out.r = std::min(out.r, static_cast<int>((d + 3) / 2));
  }
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (static_cast<int>((degrees[i] + 3) / 2) == out.r) out.J.push_back(i + 1);
  return out;
}

bool curve_emptiness_bounds(int g, int N, int r) {
  if (g < 0 || N < 0 || r < 2 || r > (N + 1) / 2) return false;
  return 2 * r < N - g + 2;
}

bool curve_emptiness_bounds(int g, int h0, int n, int r) {
  if (g < 0 || h0 < 0 || n < 0 || r < 2 || r > (n + 1) / 2) return false;
  return 2 * r < h0 - g + 1 && 3 * r < n + 2;
}

}  // namespace terracini
