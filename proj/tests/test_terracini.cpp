#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "terracini/configs.hpp"
#include "terracini/errors.hpp"
#include "terracini/terracini.hpp"

using namespace terracini;

namespace {

std::vector<Rational> vec(std::initializer_list<long> coords) {
  std::vector<Rational> out;
  for (auto c : coords) out.emplace_back(c);
  return out;
}

PointConfig single(std::initializer_list<std::vector<Rational>> pts) {
  PointConfig s;
  for (const auto& p : pts) s.points.push_back({p});
  return s;
}

ParamMap monomial_curve(std::size_t d, const std::vector<std::size_t>& kept) {
  std::vector<std::vector<Rational>> rows;
  for (auto i : kept) {
    std::vector<Rational> row(d + 1, Rational(0));
    row[i] = Rational(1);
    rows.push_back(row);
  }
  return rational_curve(rows);
}

std::vector<Rational> cube(long s, long t) { return vec({s * s * s, s * s * t, s * t * t, t * t * t}); }

PointConfig rescale_and_shuffle(PointConfig s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 30);
  for (auto& point : s.points)
    for (auto& factor : point) {
      Rational c = Rational(num(rng)) / Rational(num(rng));
      if (num(rng) % 2) c = -c;
      for (auto& x : factor) x = x * c;
    }
  std::shuffle(s.points.begin(), s.points.end(), rng);
  return s;
}

}  // namespace

TEST(StackedJacobian, ShapeAndSinglePointRank) {
  auto v = veronese(1, 2);
  auto j = stacked_jacobian(v, single({vec({1, 0})}));
  EXPECT_EQ(j.rows(), 2u);
  EXPECT_EQ(j.cols(), 3u);
  EXPECT_EQ(rank(j), 2u);
  auto sv = segre_veronese({1, 2}, {1, 1});
  PointConfig two{{{vec({1, 2}), vec({1, 0, 3})}, {vec({0, 1}), vec({2, 1, 1})}}};
  EXPECT_EQ(stacked_jacobian(sv, two).rows(), 2u * 5u);
}

TEST(StackedJacobian, BasePointIsSingular) {
  auto dp = del_pezzo(1);
  EXPECT_THROW(stacked_jacobian(dp, single({vec({0, 0, 1}), vec({1, 2, 3})})), SingularPointError);
}

TEST(StackedJacobian, RescalingAndPermutationKeepTheRank) {
  std::mt19937_64 rng(11);
  auto family = OracleFamily::of_veronese(2, 4);
  auto map = family.map();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto c = oracle_config(family, seed % 2 ? "collinear" : "generic", 3, seed);
    EXPECT_EQ(rank(stacked_jacobian(map, c.config)), rank(stacked_jacobian(map, rescale_and_shuffle(c.config, rng))));
  }
}

TEST(Membership, VeroneseExamples) {
  auto v = veronese(2, 3);
  EXPECT_TRUE(membership_param(v, single({vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 2, 0})})).member);
  EXPECT_FALSE(membership_param(v, single({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})})).member);
}

TEST(Membership, RationalNormalCubicPairsAreNeverMembers) {
  auto c = monomial_curve(3, {0, 1, 2, 3});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int i = 0; i < 30;) {
    long a = dist(rng), b = dist(rng), x = dist(rng), y = dist(rng);
    if ((a == 0 && b == 0) || (x == 0 && y == 0) || a * y == b * x) continue;
    ++i;
    EXPECT_FALSE(membership_param(c, single({vec({a, b}), vec({x, y})})).member);
  }
}

TEST(Membership, PreconditionsAreEnforced) {
  auto v = veronese(2, 3);
  EXPECT_THROW(membership_param(v, single({vec({1, 0, 0}), vec({2, 0, 0})})), PreconditionError);
  EXPECT_THROW(membership_param(v, single({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})})),
               PreconditionError);
  EXPECT_THROW(membership_param(v, single({vec({0, 0, 0}), vec({0, 1, 0})})), PreconditionError);
  EXPECT_THROW(membership_param(v, single({vec({1, 0}), vec({0, 1})})), PreconditionError);
}

TEST(MembershipIdeal, TwistedCubicAndEllipticQuartic) {
  auto tc = twisted_cubic_ideal();
  EXPECT_FALSE(membership_ideal(tc, single({cube(1, 0), cube(1, 2)})).member);
  auto eq = elliptic_quartic();
  // The tangent lines at these two points meet.
  EXPECT_TRUE(membership_ideal(eq, single({vec({1, 1, 1, 1}), vec({1, 1, 1, -1})})).member);
  EXPECT_THROW(membership_ideal(eq, single({vec({1, 1, 1, 1}), vec({2, 2, 2, 2})})), PreconditionError);
  EXPECT_THROW(membership_ideal(eq, single({vec({1, 0, 0, 0}), vec({1, 1, 1, 1})})), PreconditionError);
  EXPECT_THROW(membership_ideal(tc, single({cube(1, 0), cube(1, 1), cube(1, 2)})), PreconditionError);
}

TEST(MembershipIdeal, TangentLinesOfTheEllipticPairMeet) {
  // Independent check of the pair above: the tangent line at p is the kernel
  // of the 2 x 4 Jacobian at p; the two kernels share a vector iff the 4
  // kernel vectors span at most a 3-space.
  auto eq = elliptic_quartic();
  auto jt = eq.jacobian_transpose();
  std::vector<std::vector<Scalar>> span;
  for (auto p : {vec({1, 1, 1, 1}), vec({1, 1, 1, -1})}) {
    std::vector<Scalar> at(p.begin(), p.end());
    for (auto& k : kernel_basis(jt.evaluate(at))) span.push_back(k);
  }
  ScalarMatrix m(Field::rationals(), span.size(), 4);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = span[i][j];
  EXPECT_EQ(span.size(), 4u);
  EXPECT_LE(rank(m), 3u);
}

TEST(Membership, SingletonsMeetTheThresholdExactly) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (const auto& map : {veronese(2, 4), segre_veronese({1, 2}, {2, 2}), del_pezzo(3)}) {
    for (int i = 0; i < 20; ++i) {
      std::vector<std::vector<Rational>> point;
      for (auto n : map.dims) {
        std::vector<Rational> v(n + 1);
        for (auto& x : v) x = Rational(dist(rng));
        // Nonzero first and last coordinates keep the point off the base points.
        v.front() = Rational(dist(rng) * 2 + 19);
        v.back() = Rational(dist(rng) * 2 + 19);
        point.push_back(v);
      }
      EXPECT_EQ(rank(stacked_jacobian(map, PointConfig{{point}})), map.ell);
    }
  }
}

TEST(Membership, AddingAPointKeepsMembership) {
  auto family = OracleFamily::of_veronese(2, 4);
  auto map = family.map();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = oracle_config(family, "collinear", 3, seed);
    ASSERT_TRUE(membership_param(map, c.config).member);
    auto bigger = c.config;
    bigger.points.push_back({vec({dist(rng), dist(rng), 37})});
    EXPECT_TRUE(membership_param(map, bigger).member);
  }
}

TEST(Membership, SegreVeroneseTwoPointRule) {
  // Oracle written from the definition: member iff some factor i with
  // ceil((d_i + 2) / 2) = 2 is the only factor where the points differ.
  for (auto d : std::vector<std::vector<std::uint32_t>>{{1, 3}, {2, 2}, {3, 3}}) {
    auto family = OracleFamily::of_segre_veronese({1, 1}, d);
    auto map = family.map();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto c = oracle_config(family, "pair", 2, seed);
      const auto& p = c.config.points;
      bool expected = false;
      for (std::size_t i = 0; i < 2; ++i) {
        bool others_equal = same_projective_point(p[0][1 - i], p[1][1 - i]);
        expected = expected || (others_equal && (d[i] + 3) / 2 == 2);
      }
      EXPECT_EQ(membership_param(map, c.config).member, expected) << "seed " << seed;
    }
  }
}

TEST(Membership, TwoRoutesAgreeOnTheTwistedCubic) {
  auto ideal = twisted_cubic_ideal();
  auto param = monomial_curve(3, {0, 1, 2, 3});
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int i = 0; i < 50;) {
    long s = dist(rng), t = dist(rng), u = dist(rng), v = dist(rng);
    if ((s == 0 && t == 0) || (u == 0 && v == 0) || s * v == t * u) continue;
    ++i;
    auto a = membership_ideal(ideal, single({cube(s, t), cube(u, v)}));
    auto b = membership_param(param, single({vec({s, t}), vec({u, v})}));
    EXPECT_EQ(a.member, b.member);
  }
}

TEST(TerraciniIdeal, RationalNormalCubicIsEmpty) {
  auto t = terracini_ideal(monomial_curve(3, {0, 1, 2, 3}), 2);
  EXPECT_TRUE(t.ideal.is_unit());
  auto rep = locus_dimension(t);
  EXPECT_TRUE(rep.empty);
  EXPECT_EQ(rep.krull_dim, -1);
  EXPECT_FALSE(rep.locus_dim);
}

TEST(TerraciniIdeal, VeroneseFirstNonempty) {
  auto t = terracini_ideal(veronese(2, 3), 3);
  EXPECT_EQ(t.ring->nvars(), 9u);
  auto rep = locus_dimension(t);
  EXPECT_EQ(rep.krull_dim, 8);
  ASSERT_TRUE(rep.locus_dim);
  EXPECT_EQ(*rep.locus_dim, rep.krull_dim - 3);
  EXPECT_EQ(rep.exactness, "lower-bound");
}

TEST(TerraciniIdeal, TextbookAndFactoredSaturationAgree) {
  TerraciniOptions factored, textbook;
  textbook.method = SaturationMethod::textbook;
  auto dp = del_pezzo(1);
  auto a = terracini_ideal(dp, 2, factored);
  auto b = terracini_ideal(dp, 2, textbook);
  EXPECT_EQ(a.ideal.krull_dimension(), b.ideal.krull_dimension());
  EXPECT_EQ(a.ideal.groebner_basis(), b.ideal.groebner_basis());
}

TEST(TerraciniIdeal, IdealRouteIsExact) {
  auto t = terracini_ideal(twisted_cubic_ideal(), 2);
  EXPECT_TRUE(t.exact);
  auto rep = locus_dimension(t);
  EXPECT_TRUE(rep.empty);
  EXPECT_EQ(rep.exactness, "exact");
  EXPECT_THROW(terracini_ideal(twisted_cubic_ideal(), 3), PreconditionError);
}

TEST(TerraciniIdeal, CappedRunsAreFlagged) {
  TerraciniOptions o;
  o.max_minors = 3;
  auto t = terracini_ideal(monomial_curve(5, {0, 1, 2, 4, 5}), 2, o);
  EXPECT_TRUE(t.capped);
  EXPECT_TRUE(locus_dimension(t).capped);
}

TEST(TerraciniIdeal, InadmissibleR) {
  EXPECT_THROW(terracini_ideal(veronese(2, 3), 4), PreconditionError);
  EXPECT_THROW(terracini_ideal(veronese(2, 3), 1), PreconditionError);
}

TEST(TerraciniIdeal, GeneratorsVanishOnMembersOnly) {
  auto family = OracleFamily::of_del_pezzo(1);
  auto t = terracini_ideal(family.map(), 2);
  const auto& gens = t.ideal.groebner_basis();
  for (const auto& name : oracle_names(family, 2)) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto c = oracle_config(family, name, 2, seed);
      auto at = config_assignment(t, c.config);
      bool all_zero = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.evaluate(at).is_zero(); });
      EXPECT_EQ(all_zero, c.member) << name << " seed " << seed;
    }
  }
}

TEST(Thresholds, FirstNonempty) {
  EXPECT_EQ(first_nonempty_r_veronese(3).r, 3);
  EXPECT_EQ(first_nonempty_r_veronese(4).r, 3);
  EXPECT_EQ(first_nonempty_r_veronese(5).r, 4);
  auto a = first_nonempty_r_segre_veronese({1, 3});
  EXPECT_EQ(a.r, 2);
  EXPECT_EQ(a.J, std::vector<std::size_t>{1});
  auto b = first_nonempty_r_segre_veronese({3, 3});
  EXPECT_EQ(b.r, 3);
  EXPECT_EQ(b.J, (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(first_nonempty_r_segre_veronese({1, 1, 2}), PreconditionError);
}

TEST(Thresholds, CurveEmptinessBounds) {
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(curve_emptiness_bounds(0, 2 * k + 1, k));
  for (int n : {4, 6, 8}) EXPECT_TRUE(curve_emptiness_bounds(1, n, n / 2));
  EXPECT_FALSE(curve_emptiness_bounds(1, 5, 3));
  EXPECT_TRUE(curve_emptiness_bounds(0, 9, 7, 2));
  EXPECT_FALSE(curve_emptiness_bounds(0, 9, 7, 3));
  EXPECT_FALSE(curve_emptiness_bounds(0, 9, 1));
}
