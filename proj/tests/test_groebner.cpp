#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "terracini/errors.hpp"
#include "terracini/ideal.hpp"

using namespace terracini;
using namespace terracini::testing;

namespace {

struct Xyz {
  RingPtr ring = ring_with(Field::prime(32003), {Block{"x", 1}, Block{"y", 1}, Block{"z", 1}});
  Polynomial p(const std::string& s) const { return parse(ring, s); }
  Ideal ideal(std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> v;
    for (auto g : gens) v.push_back(p(g));
    return Ideal(ring, v);
  }
};

class GroebnerTest : public ::testing::Test {
 protected:
  void SetUp() override { set_default_verification(true); }
  void TearDown() override { set_default_verification(false); }
  Xyz r;
};

}  // namespace

TEST_F(GroebnerTest, NormalForm) {
  auto f = r.p("x_0^2*y_0+3*z_0");
  EXPECT_TRUE(normal_form(f, {f.monic()}).is_zero());
  EXPECT_EQ(normal_form(r.p("x_0^2"), {r.p("x_0^2-1")}), r.p("1"));
  EXPECT_EQ(normal_form(r.p("y_0*z_0"), {r.p("x_0")}), r.p("y_0*z_0"));
  auto other = r.ring->with_order(MonomialOrder::weighted_degrevlex({1, 2, 3}));
  EXPECT_THROW(normal_form(r.p("x_0"), {Polynomial::variable(other, 0)}), IncompatibleError);
}

TEST_F(GroebnerTest, BuchbergerExamples) {
  auto b = buchberger({r.p("x_0"), r.p("y_0")}, r.ring);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], r.p("y_0"));
  EXPECT_EQ(b[1], r.p("x_0"));
  auto unit = buchberger({r.p("x_0*y_0-1"), r.p("x_0^2")}, r.ring);
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].is_constant());
  auto single = buchberger({r.p("3*x_0^2+y_0")}, r.ring);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], r.p("3*x_0^2+y_0").monic());
}

TEST_F(GroebnerTest, ReducedBasisProperties) {
  std::mt19937_64 rng(31);
  auto ring = flat_ring(Field::prime(32003), 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(ring, rng, 4, 2 + g % 2, t % 2 == 0));
    auto basis = buchberger(gens, ring);
    EXPECT_TRUE(satisfies_buchberger_criterion(basis));
    for (const auto& g : basis) {
      EXPECT_TRUE(g.leading_coefficient().is_one());
      for (const auto& h : basis) {
        if (&g == &h) continue;
        for (const auto& term : g.terms()) EXPECT_FALSE(h.leading_monomial().divides(term.monomial));
      }
    }
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, basis).is_zero());
  }
  EXPECT_EQ(groebner_stats().verification_failures, 0u);
}

TEST_F(GroebnerTest, MembershipIsOrderIndependent) {
  std::mt19937_64 rng(32);
  VariableLayout layout({Block{"x", 3}, Block{"t", 1, true}});
  auto grevlex = Ring::make(Field::prime(32003), layout);
  auto elim = Ring::make(Field::prime(32003), layout, MonomialOrder::elimination(layout));
  for (int t = 0; t < 30; ++t) {
    std::vector<Polynomial> gens{random_poly(grevlex, rng, 3, 2), random_poly(grevlex, rng, 3, 2)};
    Polynomial f = rng() % 2 ? gens[0] * random_poly(grevlex, rng, 3, 1) + gens[1] * random_poly(grevlex, rng, 2, 1)
                             : random_poly(grevlex, rng, 4, 3);
    bool a = Ideal(grevlex, gens).contains(f);
    bool b = Ideal(elim, gens).contains(f.map_to(elim));
    EXPECT_EQ(a, b);
  }
}

TEST_F(GroebnerTest, Eliminate) {
  VariableLayout layout({Block{"x", 1}, Block{"y", 1}, Block{"t", 1, true}});
  auto ring = Ring::make(Field::prime(32003), layout);
  auto p = [&](const char* s) { return parse(ring, s); };
  EXPECT_TRUE(eliminate(Ideal(ring, {p("t_0*x_0-1")}), "t").is_zero());
  auto e = eliminate(Ideal(ring, {p("t_0-x_0"), p("t_0-y_0")}), "t");
  ASSERT_EQ(e.groebner_basis().size(), 1u);
  EXPECT_EQ(e.groebner_basis()[0].to_string(), "1*x_0+32002*y_0");
  EXPECT_TRUE(eliminate(Ideal(ring, {p("t_0")}), "t").is_zero());
  EXPECT_THROW(eliminate(Ideal(ring, {p("t_0")}), "s"), PreconditionError);
  EXPECT_THROW(eliminate(Ideal(ring, {p("t_0")}), "x"), PreconditionError);
}

TEST_F(GroebnerTest, Intersection) {
  auto i = r.ideal({"x_0^2+y_0", "y_0*z_0"});
  EXPECT_EQ(ideal_intersection(i, i), i);
  EXPECT_EQ(ideal_intersection(r.ideal({"x_0"}), r.ideal({"y_0"})), r.ideal({"x_0*y_0"}));
  EXPECT_EQ(ideal_intersection(r.ideal({"x_0", "y_0"}), r.ideal({"x_0"})), r.ideal({"x_0"}));
  EXPECT_THROW(ideal_intersection(i, Ideal(flat_ring(Field::prime(32003), 3), {})), IncompatibleError);
}

TEST_F(GroebnerTest, Saturate) {
  EXPECT_EQ(saturate(r.ideal({"x_0*y_0"}), r.p("x_0")), r.ideal({"y_0"}));
  EXPECT_TRUE(saturate(r.ideal({"x_0^2"}), r.p("x_0")).is_unit());
  EXPECT_EQ(saturate(r.ideal({"x_0"}), r.p("y_0")), r.ideal({"x_0"}));
  EXPECT_THROW(saturate(r.ideal({"x_0"}), Polynomial(r.ring)), PreconditionError);
}

TEST_F(GroebnerTest, SaturateByIdeal) {
  EXPECT_EQ(saturate_by_ideal(r.ideal({"x_0*y_0", "x_0*z_0"}), r.ideal({"y_0", "z_0"})), r.ideal({"x_0"}));
  auto i = r.ideal({"x_0^2+y_0*z_0", "z_0^3"});
  EXPECT_EQ(saturate_by_ideal(i, r.ideal({"1"})), i);
  EXPECT_EQ(saturate_by_ideal(r.ideal({"x_0^2*y_0"}), r.ideal({"x_0"})), r.ideal({"y_0"}));
  EXPECT_THROW(saturate_by_ideal(i, Ideal::zero(r.ring)), PreconditionError);
}

TEST_F(GroebnerTest, SaturationContainsAndIsIdempotent) {
  std::mt19937_64 rng(33);
  auto ring = flat_ring(Field::prime(32003), 3);
  for (int t = 0; t < 20; ++t) {
    auto f = random_poly(ring, rng, 2, 1);
    if (f.is_constant()) continue;
    std::vector<Polynomial> gens{random_poly(ring, rng, 3, 2) * f, random_poly(ring, rng, 3, 2)};
    Ideal i(ring, gens);
    auto s = saturate(i, f);
    EXPECT_TRUE(s.contains(i));
    EXPECT_EQ(saturate(s, f), s);
  }
}

TEST_F(GroebnerTest, ProductSaturationIsSequential) {
  std::mt19937_64 rng(34);
  auto ring = flat_ring(Field::prime(32003), 3);
  for (int t = 0; t < 10; ++t) {
    auto a = random_poly(ring, rng, 2, 1), b = random_poly(ring, rng, 2, 1), c = random_poly(ring, rng, 2, 1);
    if (a.is_constant() || b.is_constant() || c.is_constant()) continue;
    Ideal i(ring, {a * b * random_poly(ring, rng, 2, 1), a * c * c, b * b * c + a});
    Ideal j1(ring, {a, c}), j2(ring, {b});
    Ideal product(ring, {a * b, c * b});
    EXPECT_EQ(saturate_by_ideal(i, product), saturate_by_ideal(saturate_by_ideal(i, j1), j2));
  }
}

TEST_F(GroebnerTest, KrullDimension) {
  EXPECT_EQ(krull_dimension(Ideal::zero(r.ring)), 3);
  EXPECT_EQ(krull_dimension(r.ideal({"x_0"})), 2);
  EXPECT_EQ(krull_dimension(r.ideal({"1"})), -1);
  EXPECT_EQ(krull_dimension(r.ideal({"x_0*y_0", "x_0*z_0"})), 2);
  EXPECT_EQ(krull_dimension(r.ideal({"x_0^2-y_0*z_0", "x_0*y_0", "y_0^2"})), 1);
}

TEST_F(GroebnerTest, KrullDimensionIgnoresGeneratorChoice) {
  std::mt19937_64 rng(35);
  auto ring = flat_ring(Field::prime(32003), 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> gens{random_poly(ring, rng, 3, 2, true), random_poly(ring, rng, 3, 2, true)};
    if (t % 3 == 0) gens.push_back(random_poly(ring, rng, 3, 1, true));
    std::vector<Polynomial> mixed;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Polynomial m = gens[i];
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i && gens[j].total_degree() == gens[i].total_degree()) m += gens[j] * ring->field().random_nonzero(rng);
      mixed.push_back(m);
    }
    EXPECT_EQ(krull_dimension(Ideal(ring, gens)), krull_dimension(Ideal(ring, mixed)));
  }
}
