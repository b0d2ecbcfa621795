#include <gtest/gtest.h>

#include "support.hpp"
#include "terracini/errors.hpp"
#include "terracini/terracini.hpp"

using namespace terracini;

namespace {

std::vector<Scalar> q_point(std::initializer_list<long> coords) {
  std::vector<Scalar> out;
  for (auto c : coords) out.emplace_back(Rational(c));
  return out;
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

// Rank of the Hankel matrix of the coordinate vector e_i for binary forms of
// degree d. The point lies on a secant or tangent line of the rational normal
// curve iff this rank is at most 2.
std::size_t hankel_rank_of_coordinate_point(std::size_t d, std::size_t i) {
  std::size_t rows = d / 2 + 1, cols = d - d / 2 + 1;
  std::vector<std::vector<std::int64_t>> h(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b) h[a][b] = a + b == i ? 1 : 0;
  return rank(ScalarMatrix::from_ints(Field::rationals(), h));
}

}  // namespace

TEST(Veronese, ComponentCountAndRank) {
  // binomial(n + d, d) monomials; Jacobian rank n + 1.
  for (auto [n, d, count] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t>>{
           {1, 3, 4}, {2, 3, 10}, {2, 4, 15}, {3, 3, 20}}) {
    auto v = veronese(n, d);
    EXPECT_EQ(v.components.size(), count);
    EXPECT_EQ(v.ell, n + 1);
    EXPECT_EQ(v.m(), count - 1);
  }
}

TEST(SegreVeronese, ComponentsAreProductsOfFactorMonomials) {
  auto sv = segre_veronese({1, 2}, {2, 1});
  EXPECT_EQ(sv.components.size(), 3u * 3u);
  EXPECT_EQ(sv.ell, 4u);
  EXPECT_EQ(sv.k(), 2u);
  for (const auto& c : sv.components) {
    EXPECT_EQ(c.total_degree(), 3u);
    EXPECT_TRUE(c.is_homogeneous());
  }
  EXPECT_THROW(segre_veronese({1}, {1, 2}), PreconditionError);
}

TEST(DelPezzo, CubicsThroughTheBasePoints) {
  auto base = del_pezzo_base_points();
  for (int t = 1; t <= 4; ++t) {
    auto dp = del_pezzo(t);
    EXPECT_EQ(dp.components.size(), static_cast<std::size_t>(10 - t));
    EXPECT_EQ(dp.ell, 3u);
    for (int i = 0; i < t; ++i)
      for (const auto& c : dp.components)
        EXPECT_TRUE(c.evaluate(q_point({base[i][0], base[i][1], base[i][2]})).is_zero());
  }
  EXPECT_THROW(del_pezzo(0), PreconditionError);
  EXPECT_THROW(del_pezzo(5), PreconditionError);
}

TEST(RationalCurve, RejectsDependentRows) {
  EXPECT_THROW(rational_curve({{1, 0, 0}, {2, 0, 0}}), PreconditionError);
  auto c = monomial_curve(3, {0, 1, 2, 3});
  EXPECT_EQ(c.m(), 3u);
  EXPECT_EQ(c.ell, 2u);
}

TEST(FromIdeal, CodimensionFromKrullDimension) {
  auto tc = twisted_cubic_ideal();
  EXPECT_EQ(tc.ell, 2u);
  EXPECT_EQ(tc.dimension(), 1);
  auto eq = elliptic_quartic();
  EXPECT_EQ(eq.ell, 2u);
  EXPECT_TRUE(eq.jacobian_transpose().rows() == 2 && eq.jacobian_transpose().cols() == 4);
  auto ring = source_ring(Field::rationals(), {2});
  EXPECT_THROW(from_ideal(2, {Polynomial::parse(ring, "x_0_0+1")}), PreconditionError);
}

TEST(AdmissibleRange, Examples) {
  auto cubic = admissible_r_range(monomial_curve(3, {0, 1, 2, 3}));
  EXPECT_EQ(cubic.lo, 2);
  EXPECT_EQ(cubic.hi, 2);
  auto v23 = admissible_r_range(veronese(2, 3));
  EXPECT_EQ(v23.hi, 3);
  EXPECT_TRUE(admissible_r_range(segre_veronese({1, 1}, {1, 1})).empty());
  EXPECT_EQ(admissible_r_range(twisted_cubic_ideal()).hi, 2);
}

TEST(Smoothness, CurvesDecidedExactly) {
  auto fp = Field::prime(32003);
  EXPECT_TRUE(curve_is_smooth(monomial_curve(3, {0, 1, 2, 3}), fp));
  // [x^3 : x y^2 : y^3] has a cusp at [1:0].
  EXPECT_FALSE(curve_is_smooth(monomial_curve(3, {0, 2, 3}), fp));
  EXPECT_TRUE(curve_is_smooth(monomial_curve(4, {0, 1, 3, 4}), fp));
}

TEST(Smoothness, OcticProjectionsMatchHankelRank) {
  // Projecting the degree-8 normal curve from e_i is an isomorphism onto a
  // smooth curve exactly when e_i is off its secant variety.
  auto fp = Field::prime(32003);
  for (std::size_t drop = 0; drop <= 8; ++drop) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i <= 8; ++i)
      if (i != drop) kept.push_back(i);
    bool expected = hankel_rank_of_coordinate_point(8, drop) >= 3;
    EXPECT_EQ(curve_is_smooth(monomial_curve(8, kept), fp), expected) << "drop " << drop;
  }
}

TEST(Smoothness, OcticChoiceIsFrozen) {
  auto first = rational_octic(1);
  EXPECT_EQ(first.dropped, 5u);
  EXPECT_EQ(first.draws, 1);
  auto zero = rational_octic(0);
  EXPECT_EQ(zero.dropped, 6u);
  EXPECT_EQ(zero.map.m(), 7u);
}

TEST(Smoothness, IdealVarieties) {
  auto fp = Field::prime(32003);
  EXPECT_TRUE(ideal_variety_is_smooth(elliptic_quartic(), fp));
  EXPECT_TRUE(ideal_variety_is_smooth(twisted_cubic_ideal(), fp));
  auto ring = source_ring(Field::rationals(), {3});
  auto cone = from_ideal(3, {Polynomial::parse(ring, "x_0_0^2+x_0_1^2-x_0_2^2")});
  EXPECT_FALSE(ideal_variety_is_smooth(cone, fp));
}

TEST(GenericRank, MatchesSourceDimension) {
  EXPECT_EQ(validate_generic_rank(veronese(2, 3), 3, 7), 3u);
  EXPECT_EQ(validate_generic_rank(segre_veronese({1, 1}, {2, 2}), 3, 7), 3u);
  EXPECT_EQ(component_rank(del_pezzo(2)), 8u);
}
