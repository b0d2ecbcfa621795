#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "terracini/errors.hpp"

using namespace terracini;
using namespace terracini::testing;

namespace {

RingPtr xy(Field f = Field::rationals()) { return ring_with(f, {Block{"x", 1}, Block{"y", 1}}); }

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  std::size_t i = 0;
  for (int v : e) m.set(i++, static_cast<Monomial::Exponent>(v));
  return m;
}

}  // namespace

TEST(Order, Degrevlex) {
  auto r = xy();
  EXPECT_TRUE(compare(*r, mono({2, 0}), mono({1, 1})) > 0);
  EXPECT_TRUE(compare(*r, mono({1, 1}), mono({1, 1})) == 0);
  // x*z vs y^2 in three variables: degrevlex prefers y^2 (smaller power of last variable wins, then next).
  auto r3 = flat_ring(Field::rationals(), 3);
  EXPECT_TRUE(compare(*r3, mono({0, 2, 0}), mono({1, 0, 1})) > 0);
}

TEST(Order, EliminationBlockDominates) {
  VariableLayout layout({Block{"x", 2}, Block{"t", 1, true}});
  auto r = Ring::make(Field::rationals(), layout, MonomialOrder::elimination(layout));
  EXPECT_TRUE(compare(*r, mono({0, 0, 1}), mono({5, 0, 0})) > 0);
  EXPECT_THROW(compare(*flat_ring(Field::rationals(), 2), mono({0, 0, 1}), mono({1})), IncompatibleError);
}

TEST(Order, StrictTotalAndMultiplicative) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  VariableLayout layout({Block{"x", 3}, Block{"t", 2, true}});
  std::vector<RingPtr> rings{Ring::make(Field::rationals(), layout),
                             Ring::make(Field::rationals(), layout, MonomialOrder::elimination(layout)),
                             Ring::make(Field::rationals(), layout, MonomialOrder::weighted_degrevlex({1, 2, 1, 3, 1}))};
  auto rnd = [&] {
    Monomial m;
    for (std::size_t i = 0; i < 5; ++i) m.set(i, static_cast<Monomial::Exponent>(e(rng)));
    return m;
  };
  for (const auto& r : rings) {
    for (int i = 0; i < 2000; ++i) {
      Monomial a = rnd(), b = rnd(), c = rnd(), n = rnd();
      auto ab = r->compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_TRUE(ab == (0 <=> r->compare(b, a)));
      if (ab < 0 && r->compare(b, c) < 0) EXPECT_TRUE(r->compare(a, c) < 0);
      if (ab < 0) EXPECT_TRUE(r->compare(a * n, b * n) < 0);
    }
  }
}

TEST(Poly, Arithmetic) {
  auto r = xy();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  EXPECT_EQ(((x + y) * (x - y)).to_string(), "1*x_0^2-1*y_0^2");
  auto f = parse(r, "3*x_0^2*y_0-1/2*y_0+7");
  EXPECT_TRUE((f + Scalar(Rational(-1)) * f).is_zero());
  EXPECT_EQ(Scalar(Rational(1)) * f, f);
  EXPECT_THROW(x + Polynomial::variable(flat_ring(Field::rationals(), 2), 0), IncompatibleError);
}

TEST(Poly, TextRoundTrip) {
  auto r = ring_with(Field::prime(32003), {Block{"z_0_0", 3}, Block{"z_1_0", 3}});
  std::string text = "2*z_0_0_1^2*z_1_0_0+31999*z_0_0_0*z_1_0_2-1*z_1_0_1";
  // Prime-field coefficients print as residues, so the minus sign disappears.
  auto f = parse(r, text);
  EXPECT_EQ(parse(r, f.to_string()), f);
  EXPECT_EQ(f.to_string(), parse(r, f.to_string()).to_string());
  auto q = ring_with(Field::rationals(), {Block{"x", 2}});
  for (std::string s : {"1*x_0^2-1/3*x_0*x_1+5", "0", "-7*x_1", "1*x_0"}) EXPECT_EQ(parse(q, s).to_string(), s);
  EXPECT_THROW(parse(q, "+x_0"), ParseError);
  EXPECT_THROW(parse(q, "x_2"), ParseError);
  EXPECT_THROW(parse(q, "1/0*x_0"), ParseError);
}

TEST(Poly, PartialDerivative) {
  auto r = xy();
  EXPECT_EQ(partial_derivative(parse(r, "x_0^2*y_0"), 0), parse(r, "2*x_0*y_0"));
  EXPECT_TRUE(partial_derivative(parse(r, "y_0^3"), 0).is_zero());
  EXPECT_EQ(partial_derivative(parse(r, "x_0^5"), 0), parse(r, "5*x_0^4"));
  EXPECT_THROW(partial_derivative(parse(r, "x_0"), 5), PreconditionError);
}

TEST(Poly, Evaluate) {
  auto r = xy();
  auto q = Field::rationals();
  std::vector<Scalar> p{q.from_int(2), q.from_int(3)};
  EXPECT_EQ(parse(r, "x_0^2+y_0").evaluate(p), q.from_int(7));
  EXPECT_EQ(parse(r, "5").evaluate(std::map<std::size_t, Scalar>{}), q.from_int(5));
  EXPECT_THROW(parse(r, "x_0*y_0").evaluate(std::map<std::size_t, Scalar>{{0, q.one()}}), PreconditionError);
}

TEST(Poly, EvaluationIsMultiplicativeAndHomogeneous) {
  auto r = flat_ring(Field::rationals(), 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(r, rng, 6, 4), g = random_poly(r, rng, 6, 4);
    std::vector<Scalar> p;
    for (int k = 0; k < 4; ++k) p.push_back(r->field().random_int(rng, -20, 20));
    EXPECT_EQ((f * g).evaluate(p), f.evaluate(p) * g.evaluate(p));
    auto h = random_poly(r, rng, 5, 3, true);
    Scalar lambda = r->field().random_nonzero(rng);
    std::vector<Scalar> lp;
    for (const auto& c : p) lp.push_back(lambda * c);
    EXPECT_EQ(h.evaluate(lp), lambda.pow(h.total_degree()) * h.evaluate(p));
  }
}

TEST(Poly, SubstituteBlock) {
  auto source = ring_with(Field::rationals(), {Block{source_block_name(0), 2}});
  auto target = ring_with(Field::rationals(), {Block{point_block_name(0, 0), 2}, Block{point_block_name(1, 0), 2}});
  auto f = parse(source, "x_0_0*x_0_1");
  EXPECT_EQ(substitute_block(f, target, 1).to_string(), "1*z_1_0_0*z_1_0_1");
  EXPECT_EQ(substitute_block(Polynomial::constant(source, 4), target, 0), Polynomial::constant(target, 4));
  EXPECT_THROW(substitute_block(f, target, 2), Error);
}

TEST(Poly, SubstitutePreservesDegreeAndCoefficients) {
  auto source = ring_with(Field::rationals(), {Block{source_block_name(0), 3}, Block{source_block_name(1), 2}});
  std::vector<Block> blocks;
  for (int i = 0; i < 3; ++i) {
    blocks.push_back({point_block_name(i, 0), 3});
    blocks.push_back({point_block_name(i, 1), 2});
  }
  auto target = ring_with(Field::rationals(), blocks);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(source, rng, 5, 4);
    auto g = substitute_block(f, target, i % 3);
    EXPECT_EQ(g.total_degree(), f.total_degree());
    std::multiset<std::string> cf, cg;
    for (const auto& t : f.terms()) cf.insert(t.coefficient.to_string());
    for (const auto& t : g.terms()) cg.insert(t.coefficient.to_string());
    EXPECT_EQ(cf, cg);
  }
}

TEST(Poly, MultidegreeAndHomogeneity) {
  auto r = ring_with(Field::rationals(), {Block{"a", 2}, Block{"b", 2}});
  auto f = parse(r, "a_0^2*b_1+a_0*a_1*b_0");
  ASSERT_TRUE(f.multidegree());
  EXPECT_EQ(*f.multidegree(), (std::vector<std::uint32_t>{2, 1}));
  EXPECT_FALSE(parse(r, "a_0^2+a_1*b_0").multidegree());
  EXPECT_TRUE(parse(r, "a_0^2+a_1*b_0").is_homogeneous());
}

TEST(Poly, ExponentOverflowIsChecked) {
  auto r = flat_ring(Field::rationals(), 1);
  auto x = parse(r, "x_0^40000");
  EXPECT_THROW(x * x, Error);
}
