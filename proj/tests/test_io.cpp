#include <gtest/gtest.h>

#include "support.hpp"
#include "terracini/configs.hpp"
#include "terracini/errors.hpp"
#include "terracini/ideal_file.hpp"
#include "terracini/point_io.hpp"
#include "terracini/variety_spec.hpp"

using namespace terracini;
using namespace terracini::testing;

TEST(IdealFile, RoundTripIsBitExact) {
  auto ring = ring_with(Field::prime(32003), {Block{"z_0_0", 3}, Block{"z_1_0", 3}});
  std::vector<Polynomial> gens{parse(ring, "z_0_0_0*z_1_0_1-z_0_0_1*z_1_0_0"), parse(ring, "3*z_0_0_2^2+32002")};
  auto text = write_ideal_file(ring, gens);
  EXPECT_EQ(text.substr(0, text.find("generators")), "field: fp:32003\nblocks: z_0_0:3 z_1_0:3\norder: degrevlex\n");
  auto back = read_ideal_file(text);
  EXPECT_EQ(*back.ring, *ring);
  ASSERT_EQ(back.generators.size(), 2u);
  EXPECT_EQ(write_ideal_file(back.ring, back.generators), text);
}

TEST(IdealFile, MalformedInput) {
  EXPECT_THROW(read_ideal_file("field: q\n"), ParseError);
  EXPECT_THROW(read_ideal_file("field: fp:12\nblocks: x:2\norder: degrevlex\ngenerators: 0\n"), ParseError);
  EXPECT_THROW(read_ideal_file("field: q\nblocks: x:2\norder: lex\ngenerators: 0\n"), ParseError);
  EXPECT_THROW(read_ideal_file("field: q\nblocks: x:2\norder: degrevlex\ngenerators: 2\nx_0\n"), ParseError);
  EXPECT_THROW(read_ideal_file("field: q\nblocks: x:2\norder: degrevlex\ngenerators: 1\ny_0\n"), ParseError);
}

TEST(PointJson, IntegersAndFractions) {
  auto s = read_points_json(R"({"points": [[[1, "2/3"], [0, -4, 5]], [[7, 8], ["-1/2", 0, 1]]]})");
  ASSERT_EQ(s.r(), 2u);
  EXPECT_EQ(s.points[0][0][1], Rational(2) / Rational(3));
  EXPECT_EQ(s.points[1][1][0], Rational(-1) / Rational(2));
  EXPECT_EQ(read_points_json(write_points_json(s)).points, s.points);
  EXPECT_EQ(write_points_json(s), "{\"points\":[[[1,\"2/3\"],[0,-4,5]],[[7,8],[\"-1/2\",0,1]]]}\n");
}

TEST(PointJson, MalformedInput) {
  EXPECT_THROW(read_points_json("{"), ParseError);
  EXPECT_THROW(read_points_json(R"({"pts": []})"), ParseError);
  EXPECT_THROW(read_points_json(R"({"points": [[[1.5, 2]]]})"), ParseError);
  EXPECT_THROW(read_points_json(R"({"points": [[[1, "x"]]]})"), ParseError);
}

TEST(VarietySpec, Kinds) {
  auto v = parse_variety_spec("[variety]\nkind = \"veronese\"  # plane cubics\nn = 2\nd = 3\n");
  EXPECT_EQ(std::get<ParamMap>(v).components.size(), 10u);
  auto sv = parse_variety_spec("[variety]\nkind = \"segre-veronese\"\nn = [1, 1]\nd = [\n  2,\n  2,\n]\n");
  EXPECT_EQ(std::get<ParamMap>(sv).k(), 2u);
  auto curve = parse_variety_spec(
      "[variety]\nkind = \"rational-curve\"\ncoefficients = [[1, 0, 0], [0, \"1/2\", 0], [0, 0, 1]]\n");
  EXPECT_EQ(std::get<ParamMap>(curve).m(), 2u);
  auto dp = parse_variety_spec("[variety]\nkind = \"del-pezzo\"\nt = 3\n");
  EXPECT_EQ(std::get<ParamMap>(dp).components.size(), 7u);
  auto ideal = parse_variety_spec(
      "[variety]\nkind = \"ideal\"\nn = 3\ngenerators = [\"x_0_0*x_0_2-x_0_1^2\", \"x_0_0*x_0_3-x_0_1*x_0_2\", "
      "\"x_0_1*x_0_3-x_0_2^2\"]\n");
  EXPECT_EQ(std::get<IdealVariety>(ideal).ell, 2u);
}

TEST(VarietySpec, MalformedInput) {
  EXPECT_THROW(parse_variety_spec("kind = \"veronese\"\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nkind = \"torus\"\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nkind = \"veronese\"\nn = 2\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nkind = \"veronese\"\nn = \"two\"\nd = 3\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nkind = \"veronese\nn = 2\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nkind = \"veronese\"\nn = [1, 2\n"), ParseError);
  EXPECT_THROW(parse_variety_spec("[variety]\nn = 1\nn = 2\n"), ParseError);
}

TEST(OracleConfig, DeterministicAndValidated) {
  auto family = OracleFamily::of_veronese(2, 4);
  auto a = oracle_config(family, "collinear", 3, 42);
  auto b = oracle_config(family, "collinear", 3, 42);
  EXPECT_EQ(a.config.points, b.config.points);
  EXPECT_NE(a.config.points, oracle_config(family, "collinear", 3, 43).config.points);
  EXPECT_THROW(oracle_config(family, "no-such-family", 3, 0), PreconditionError);
  EXPECT_THROW(oracle_config(family, "non-collinear", 4, 0), PreconditionError);
  EXPECT_THROW(oracle_config(OracleFamily::of_del_pezzo(2), "U", 2, 0), PreconditionError);
  EXPECT_THROW(oracle_config(OracleFamily::of_del_pezzo(1), "Y_2", 2, 0), PreconditionError);
}

TEST(OracleConfig, FamiliesSatisfyTheirDefiningConditions) {
  auto q = Field::rationals();
  auto rank_of = [&](const std::vector<std::vector<Rational>>& rows) {
    ScalarMatrix m(q, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return rank(m);
  };
  auto plane = [](const PointConfig& s) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : s.points) rows.push_back(p[0]);
    return rows;
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(rank_of(plane(oracle_config(OracleFamily::of_veronese(3, 3), "collinear", 3, seed).config)), 2u);
    EXPECT_EQ(rank_of(plane(oracle_config(OracleFamily::of_veronese(3, 3), "coplanar", 4, seed).config)), 3u);
    EXPECT_EQ(rank_of(plane(oracle_config(OracleFamily::of_veronese(3, 3), "non-coplanar", 4, seed).config)), 4u);
    auto free = plane(oracle_config(OracleFamily::of_veronese(2, 4), "collinear-plus-free", 4, seed).config);
    EXPECT_EQ(rank_of({free[0], free[1], free[2]}), 2u);
    EXPECT_EQ(rank_of(free), 3u);

    // Y_i: the two plane points and z_i are collinear.
    auto y = plane(oracle_config(OracleFamily::of_del_pezzo(4), "Y_3", 2, seed).config);
    EXPECT_EQ(rank_of({y[0], y[1], {Rational(1), Rational(0), Rational(0)}}), 2u);
    // U: the four base points and the two points lie on a conic.
    auto u = plane(oracle_config(OracleFamily::of_del_pezzo(4), "U", 2, seed).config);
    std::vector<std::vector<Rational>> six{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}, u[0], u[1]};
    std::vector<std::vector<Rational>> conic_rows;
    for (const auto& p : six)
      conic_rows.push_back({p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]});
    EXPECT_LT(rank_of(conic_rows), 6u);

    // T_1 on P^1 x P^1: the second factor is constant.
    auto t1 = oracle_config(OracleFamily::of_segre_veronese({1, 1}, {3, 3}), "T_1", 3, seed).config;
    for (std::size_t i = 1; i < 3; ++i) EXPECT_TRUE(same_projective_point(t1.points[0][1], t1.points[i][1]));
  }
}
