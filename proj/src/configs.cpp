#include "terracini/configs.hpp"

#include <algorithm>
#include <random>

#include "terracini/errors.hpp"

namespace terracini {

namespace {

using IntVec = std::vector<std::int64_t>;

constexpr std::int64_t kBound = 9;
constexpr int kMaxTries = 1000;

IntVec random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::int64_t> dist(-kBound, kBound);
  for (;;) {
    IntVec v(len);
    for (auto& c : v) c = dist(rng);
    for (auto c : v)
      if (c != 0) return v;
  }
}

std::int64_t random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(1, kBound);
  std::bernoulli_distribution sign(0.5);
  auto v = dist(rng);
  return sign(rng) ? v : -v;
}

IntVec combine(std::int64_t a, const IntVec& u, std::int64_t b, const IntVec& v) {
  IntVec out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = a * u[j] + b * v[j];
  return out;
}

std::size_t vector_rank(const std::vector<IntVec>& rows) {
  return rank(ScalarMatrix::from_ints(Field::rationals(), rows));
}

bool collinear(const std::vector<IntVec>& pts) { return vector_rank(pts) <= 2; }

// r distinct points on the line through two random points.
std::vector<IntVec> points_on_line(std::mt19937_64& rng, std::size_t len, std::size_t r) {
  for (;;) {
    IntVec a = random_vector(rng, len), b = random_vector(rng, len);
    if (vector_rank({a, b}) < 2) continue;
    std::vector<IntVec> out;
    for (int tries = 0; out.size() < r && tries < kMaxTries; ++tries) {
      IntVec p = combine(random_nonzero(rng), a, random_nonzero(rng), b);
      bool fresh = true;
      for (const auto& q : out) fresh = fresh && vector_rank({p, q}) == 2;
      if (fresh) out.push_back(p);
    }
    if (out.size() == r) return out;
  }
}

// Random point off the span of `pts`.
IntVec point_off(std::mt19937_64& rng, const std::vector<IntVec>& pts, std::size_t len) {
  std::size_t base = vector_rank(pts);
  for (;;) {
    IntVec p = random_vector(rng, len);
    auto all = pts;
    all.push_back(p);
    if (vector_rank(all) > base) return p;
  }
}

bool some_subset_collinear(const std::vector<IntVec>& pts, std::size_t size) {
  std::size_t n = pts.size();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    std::vector<IntVec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(pts[i]);
    if (collinear(sub)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::vector<Rational> to_rational(const IntVec& v) {
  std::vector<Rational> out;
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

// Single-factor configuration.
PointConfig single_factor(const std::vector<IntVec>& pts) {
  PointConfig s;
  for (const auto& p : pts) s.points.push_back({to_rational(p)});
  return s;
}

[[noreturn]] void no_verdict(std::string_view name, std::size_t r, const std::string& family) {
  throw PreconditionError("oracle family '" + std::string(name) + "' has no verdict at r = " + std::to_string(r) +
                          " for " + family);
}

std::string family_label(const OracleFamily& f) {
  switch (f.kind) {
    case OracleFamily::Kind::veronese:
      return "veronese(" + std::to_string(f.dims[0]) + "," + std::to_string(f.degrees[0]) + ")";
    case OracleFamily::Kind::segre_veronese: {
      std::string s = "segre_veronese(";
      for (std::size_t i = 0; i < f.dims.size(); ++i) s += (i ? "," : "") + std::to_string(f.dims[i]);
      s += ";";
      for (std::size_t i = 0; i < f.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(f.degrees[i]);
      return s + ")";
    }
    case OracleFamily::Kind::del_pezzo:
      return "del_pezzo(" + std::to_string(f.t) + ")";
  }
  return "";
}

// Veronese ---------------------------------------------------------------

OracleCase veronese_case(const OracleFamily& family, std::string_view name, std::size_t r, std::mt19937_64& rng) {
  std::size_t n = family.dims[0];
  std::uint32_t d = family.degrees[0];
  std::size_t len = n + 1;
  std::size_t first = static_cast<std::size_t>(first_nonempty_r_veronese(d).r);
  bool second = d >= 4 && r == first + 1;
  bool cubic_four = d == 3 && r == 4 && n >= 3;

  if (name == "collinear") {
    // Points on a line are a subvariety section: member once 2r > d + 1.
    return {single_factor(points_on_line(rng, len, r)), 2 * r > d + 1};
  }
  if (name == "non-collinear") {
    if (r != first || r < 3) no_verdict(name, r, family_label(family));
    auto pts = points_on_line(rng, len, r - 1);
    pts.push_back(point_off(rng, pts, len));
    return {single_factor(pts), false};
  }
  if (name == "collinear-plus-free") {
    if (!second) no_verdict(name, r, family_label(family));
    auto pts = points_on_line(rng, len, r - 1);
    pts.push_back(point_off(rng, pts, len));
    return {single_factor(pts), true};
  }
  if (name == "no-r-1-collinear") {
    if (!second) no_verdict(name, r, family_label(family));
    for (;;) {
      std::vector<IntVec> pts;
      for (std::size_t i = 0; i < r; ++i) pts.push_back(random_vector(rng, len));
      if (!some_subset_collinear(pts, r - 1)) return {single_factor(pts), false};
    }
  }
  if (name == "coplanar") {
    if (!cubic_four) no_verdict(name, r, family_label(family));
    for (;;) {
      std::vector<IntVec> span{random_vector(rng, len), random_vector(rng, len), random_vector(rng, len)};
      if (vector_rank(span) < 3) continue;
      std::vector<IntVec> pts;
      for (std::size_t i = 0; i < r; ++i) {
        IntVec p(len, 0);
        for (const auto& s : span) {
          auto c = random_nonzero(rng);
          for (std::size_t j = 0; j < len; ++j) p[j] += c * s[j];
        }
        pts.push_back(p);
      }
      PointConfig s = single_factor(pts);
      try {
        validate_config(s, family.dims);
      } catch (const PreconditionError&) {
        continue;
      }
      return {s, true};
    }
  }
  if (name == "non-coplanar") {
    if (!cubic_four) no_verdict(name, r, family_label(family));
    for (;;) {
      std::vector<IntVec> pts;
      for (std::size_t i = 0; i < r; ++i) pts.push_back(random_vector(rng, len));
      if (vector_rank(pts) == 4) return {single_factor(pts), false};
    }
  }
  if (name == "generic") {
    if (!(r == first && r >= 3) && !second && !cubic_four) no_verdict(name, r, family_label(family));
    for (;;) {
      std::vector<IntVec> pts;
      for (std::size_t i = 0; i < r; ++i) pts.push_back(random_vector(rng, len));
      bool special = cubic_four ? vector_rank(pts) < 4
                     : second   ? some_subset_collinear(pts, r - 1)
                                : collinear(pts);
      if (!special) return {single_factor(pts), false};
    }
  }
  throw PreconditionError("unknown oracle family '" + std::string(name) + "' for " + family_label(family));
}

// Segre-Veronese ----------------------------------------------------------

PointConfig from_factors(const std::vector<std::vector<IntVec>>& by_point) {
  PointConfig s;
  for (const auto& point : by_point) {
    std::vector<std::vector<Rational>> factors;
    for (const auto& v : point) factors.push_back(to_rational(v));
    s.points.push_back(std::move(factors));
  }
  return s;
}

OracleCase segre_veronese_case(const OracleFamily& family, std::string_view name, std::size_t r,
                               std::mt19937_64& rng) {
  const auto& dims = family.dims;
  const auto& degrees = family.degrees;
  std::size_t k = dims.size();
  auto first = first_nonempty_r_segre_veronese(degrees);
  bool at_first = static_cast<int>(r) == first.r;
  bool below = static_cast<int>(r) < first.r;  // the locus is empty
  auto in_j = [&](std::size_t i) { return std::find(first.J.begin(), first.J.end(), i + 1) != first.J.end(); };

  if (name.size() > 2 && name.substr(0, 2) == "T_") {
    std::size_t i = 0;
    try {
      i = std::stoul(std::string(name.substr(2)));
    } catch (const std::exception&) {
      i = 0;
    }
    if (i < 1 || i > k) throw PreconditionError("oracle family '" + std::string(name) + "': no such factor");
    --i;
    // Factor i moves along a line, the others stay put: a rational normal
    // curve of degree d_i, a member once 2r > d_i + 1.
    bool member = 2 * r > degrees[i] + 1;
    if (!member && !at_first && !below) no_verdict(name, r, family_label(family));
    std::vector<std::vector<IntVec>> pts(r, std::vector<IntVec>(k));
    auto moving = points_on_line(rng, dims[i] + 1, r);
    for (std::size_t f = 0; f < k; ++f) {
      IntVec fixed = random_vector(rng, dims[f] + 1);
      for (std::size_t p = 0; p < r; ++p) pts[p][f] = f == i ? moving[p] : fixed;
    }
    return {from_factors(pts), member};
  }
  if (name == "pair") {
    if (r != 2) no_verdict(name, r, family_label(family));
    std::bernoulli_distribution coin(0.5);
    for (;;) {
      std::vector<std::vector<IntVec>> pts(2, std::vector<IntVec>(k));
      std::vector<bool> equal(k);
      for (std::size_t f = 0; f < k; ++f) {
        equal[f] = coin(rng);
        pts[0][f] = random_vector(rng, dims[f] + 1);
        if (equal[f]) {
          auto c = random_nonzero(rng);
          pts[1][f] = combine(c, pts[0][f], 0, pts[0][f]);
        } else {
          do pts[1][f] = random_vector(rng, dims[f] + 1);
          while (vector_rank({pts[0][f], pts[1][f]}) < 2);
        }
      }
      if (std::all_of(equal.begin(), equal.end(), [](bool e) { return e; })) continue;
      bool member = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!in_j(i)) continue;
        bool others = true;
        for (std::size_t f = 0; f < k; ++f)
          if (f != i) others = others && equal[f];
        member = member || (others && first.r == 2);
      }
      return {from_factors(pts), member};
    }
  }
  if (name == "generic") {
    if (!at_first && !below) no_verdict(name, r, family_label(family));
    for (;;) {
      std::vector<std::vector<IntVec>> pts(r, std::vector<IntVec>(k));
      for (auto& p : pts)
        for (std::size_t f = 0; f < k; ++f) p[f] = random_vector(rng, dims[f] + 1);
      PointConfig s = from_factors(pts);
      // Keep away from the T_i families: every factor must see distinct
      // points, and no moving factor may be collinear beyond r = 2.
      bool special = false;
      for (std::size_t f = 0; f < k && !special; ++f) {
        std::vector<IntVec> proj;
        for (const auto& p : pts) proj.push_back(p[f]);
        for (std::size_t a = 0; a < r && !special; ++a)
          for (std::size_t b = a + 1; b < r && !special; ++b) special = vector_rank({proj[a], proj[b]}) < 2;
        if (r >= 3 && dims[f] >= 2) special = special || collinear(proj);
      }
      if (!special) return {s, false};
    }
  }
  throw PreconditionError("unknown oracle family '" + std::string(name) + "' for " + family_label(family));
}

// Del Pezzo ---------------------------------------------------------------

std::int64_t det3(const IntVec& a, const IntVec& b, const IntVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool is_base_point(const IntVec& p, const std::vector<IntVec>& base) {
  for (const auto& z : base)
    if (vector_rank({p, z}) < 2) return true;
  return false;
}

// Some conic passes through all of `pts` (six monomials, so a nonzero kernel).
bool on_common_conic(const std::vector<IntVec>& pts) {
  std::vector<IntVec> rows;
  for (const auto& p : pts)
    rows.push_back({p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]});
  return vector_rank(rows) < 6;
}

IntVec plane_point_avoiding(std::mt19937_64& rng, const std::vector<IntVec>& base) {
  for (;;) {
    IntVec p = random_vector(rng, 3);
    if (!is_base_point(p, base)) return p;
  }
}

// A point on the line through z and q, distinct from both and from the base points.
IntVec on_line_through(std::mt19937_64& rng, const IntVec& z, const IntVec& q, const std::vector<IntVec>& base,
                       const std::vector<IntVec>& avoid) {
  for (;;) {
    IntVec p = combine(random_nonzero(rng), z, random_nonzero(rng), q);
    if (is_base_point(p, base)) continue;
    bool fresh = true;
    for (const auto& a : avoid) fresh = fresh && vector_rank({p, a}) == 2;
    if (fresh) return p;
  }
}

OracleCase del_pezzo_case(const OracleFamily& family, std::string_view name, std::size_t r, std::mt19937_64& rng) {
  int t = family.t;
  std::vector<IntVec> base;
  auto all = del_pezzo_base_points();
  for (int i = 0; i < t; ++i) base.push_back(all[i]);
  auto label = family_label(family);

  if (r == 2) {
    if (name.size() > 2 && name.substr(0, 2) == "Y_") {
      int i = 0;
      try {
        i = std::stoi(std::string(name.substr(2)));
      } catch (const std::exception&) {
        i = 0;
      }
      if (i < 1 || i > t) throw PreconditionError("oracle family '" + std::string(name) + "': no such base point");
      IntVec q1 = plane_point_avoiding(rng, base);
      IntVec q2 = on_line_through(rng, base[i - 1], q1, base, {q1});
      return {single_factor({q1, q2}), true};
    }
    if (name == "U") {
      if (t != 4) no_verdict(name, r, label);
      // Conics through the four base points are a yz + b xz + c xy with
      // a + b + c = 0; (vw : uw : uv) lies on one when au + bv + cw = 0.
      for (;;) {
        auto a = random_nonzero(rng), b = random_nonzero(rng);
        auto c = -a - b;
        if (c == 0) continue;
        std::vector<IntVec> pts;
        for (int tries = 0; pts.size() < 2 && tries < kMaxTries; ++tries) {
          auto u0 = random_nonzero(rng), v0 = random_nonzero(rng);
          auto u = u0 * c, v = v0 * c, w = -(a * u0 + b * v0);
          if (w == 0) continue;
          IntVec p{v * w, u * w, u * v};
          if (is_base_point(p, base)) continue;
          if (!pts.empty() && vector_rank({p, pts[0]}) < 2) continue;
          pts.push_back(p);
        }
        if (pts.size() == 2) return {single_factor(pts), true};
      }
    }
    if (name == "generic") {
      for (;;) {
        IntVec q1 = plane_point_avoiding(rng, base), q2 = plane_point_avoiding(rng, base);
        bool special = vector_rank({q1, q2}) < 2;
        for (const auto& z : base) special = special || det3(q1, q2, z) == 0;
        if (t == 4) {
          auto six = base;
          six.push_back(q1);
          six.push_back(q2);
          special = special || on_common_conic(six);
        }
        if (!special) return {single_factor({q1, q2}), false};
      }
    }
  } else if (r == 3 && t == 1) {
    const IntVec& z = base[0];
    if (name == "Y") {
      for (;;) {
        auto pts = points_on_line(rng, 3, 3);
        bool ok = true;
        for (const auto& p : pts) ok = ok && !is_base_point(p, base);
        if (ok) return {single_factor(pts), true};
      }
    }
    if (name == "B_12" || name == "B_13" || name == "B_23") {
      std::size_t i = static_cast<std::size_t>(name[2] - '1');
      std::size_t j = static_cast<std::size_t>(name[3] - '1');
      std::size_t other = 3 - i - j;
      std::vector<IntVec> pts(3);
      pts[i] = plane_point_avoiding(rng, base);
      pts[j] = on_line_through(rng, z, pts[i], base, {pts[i]});
      for (;;) {
        pts[other] = plane_point_avoiding(rng, base);
        if (vector_rank({pts[other], pts[i]}) == 2 && vector_rank({pts[other], pts[j]}) == 2) break;
      }
      return {single_factor(pts), true};
    }
    if (name == "generic") {
      for (;;) {
        std::vector<IntVec> pts;
        for (int a = 0; a < 3; ++a) pts.push_back(plane_point_avoiding(rng, base));
        bool special = det3(pts[0], pts[1], pts[2]) == 0;
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) special = special || det3(pts[a], pts[b], z) == 0;
        if (!special) return {single_factor(pts), false};
      }
    }
  } else {
    no_verdict(name, r, label);
  }
  throw PreconditionError("unknown oracle family '" + std::string(name) + "' for " + label);
}

}  // namespace

OracleFamily OracleFamily::of_veronese(std::size_t n, std::uint32_t d) {
  OracleFamily f;
  f.kind = Kind::veronese;
  f.dims = {n};
  f.degrees = {d};
  return f;
}

OracleFamily OracleFamily::of_segre_veronese(std::vector<std::size_t> dims, std::vector<std::uint32_t> degrees) {
  OracleFamily f;
  f.kind = Kind::segre_veronese;
  f.dims = std::move(dims);
  f.degrees = std::move(degrees);
  return f;
}

OracleFamily OracleFamily::of_del_pezzo(int t) {
  if (t < 1 || t > 4) throw PreconditionError("del_pezzo: t must be in 1..4");
  OracleFamily f;
  f.kind = Kind::del_pezzo;
  f.dims = {2};
  f.degrees = {3};
  f.t = t;
  return f;
}

ParamMap OracleFamily::map() const {
  switch (kind) {
    case Kind::veronese:
      return veronese(dims[0], degrees[0]);
    case Kind::segre_veronese:
      return segre_veronese(dims, degrees);
    case Kind::del_pezzo:
      return del_pezzo(t);
  }
  throw PreconditionError("unknown family kind");
}

std::vector<std::string> oracle_names(const OracleFamily& family, std::size_t r) {
  std::vector<std::string> out;
  switch (family.kind) {
    case OracleFamily::Kind::veronese: {
      std::size_t n = family.dims[0];
      std::uint32_t d = family.degrees[0];
      std::size_t first = static_cast<std::size_t>(first_nonempty_r_veronese(d).r);
      out.push_back("collinear");
      if (r == first && r >= 3) out.insert(out.end(), {"non-collinear", "generic"});
      if (d >= 4 && r == first + 1) out.insert(out.end(), {"collinear-plus-free", "no-r-1-collinear", "generic"});
      if (d == 3 && r == 4 && n >= 3) out.insert(out.end(), {"coplanar", "non-coplanar", "generic"});
      break;
    }
    case OracleFamily::Kind::segre_veronese: {
      auto first = first_nonempty_r_segre_veronese(family.degrees);
      bool known = static_cast<int>(r) <= first.r;
      for (std::size_t i = 0; i < family.degrees.size(); ++i)
        if (known || 2 * r > family.degrees[i] + 1) out.push_back("T_" + std::to_string(i + 1));
      if (r == 2) out.push_back("pair");
      if (known) out.push_back("generic");
      break;
    }
    case OracleFamily::Kind::del_pezzo:
      if (r == 2) {
        for (int i = 1; i <= family.t; ++i) out.push_back("Y_" + std::to_string(i));
        if (family.t == 4) out.push_back("U");
        out.push_back("generic");
      } else if (r == 3 && family.t == 1) {
        out.insert(out.end(), {"Y", "B_12", "B_13", "B_23", "generic"});
      }
      break;
  }
  return out;
}

OracleCase oracle_config(const OracleFamily& family, std::string_view name, std::size_t r, std::uint64_t seed) {
  if (r < 2) throw PreconditionError("oracle configurations need r >= 2");
  // FNV-1a keeps the stream independent of the standard library's hash.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  std::seed_seq seq{seed, static_cast<std::uint64_t>(r), h};
  std::mt19937_64 rng(seq);
  for (int tries = 0; tries < kMaxTries; ++tries) {
    OracleCase out;
    switch (family.kind) {
      case OracleFamily::Kind::veronese:
        out = veronese_case(family, name, r, rng);
        break;
      case OracleFamily::Kind::segre_veronese:
        out = segre_veronese_case(family, name, r, rng);
        break;
      case OracleFamily::Kind::del_pezzo:
        out = del_pezzo_case(family, name, r, rng);
        break;
    }
    try {
      validate_config(out.config, family.dims);
      return out;
    } catch (const PreconditionError&) {
      // coincident points; draw again
    }
  }
  throw Error("oracle_config: no valid configuration after " + std::to_string(kMaxTries) + " draws");
}

}  // namespace terracini
