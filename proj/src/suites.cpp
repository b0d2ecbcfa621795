#include "terracini/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <tuple>

#include "terracini/configs.hpp"
#include "terracini/errors.hpp"
#include "terracini/terracini.hpp"

namespace terracini {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Case {
  std::string name;
  std::string anchor;
  std::function<Outcome()> run;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  std::array<std::uint32_t, 2> words;
  seq.generate(words.begin(), words.end());
  return (std::uint64_t{words[0]} << 32) | words[1];
}

TerraciniOptions ideal_options(const SuiteOptions& o) {
  TerraciniOptions t;
  t.field = o.field;
  t.max_minors = o.max_minors;
  t.seed = o.seed;
  return t;
}

enum class Expect { unit, proper };

Outcome expect_ideal(const Variety& v, std::size_t r, Expect expect, const SuiteOptions& o) {
  auto t = terracini_ideal(v, r, ideal_options(o));
  auto rep = locus_dimension(t);
  if (rep.capped) return {false, "capped minor enumeration; no verdict is certified"};
  bool ok = expect == Expect::unit ? rep.empty : !rep.empty;
  return {ok, "krull_dim " + std::to_string(rep.krull_dim) + (rep.empty ? " (unit ideal)" : " (proper ideal)")};
}

Outcome expect_locus(const Variety& v, std::size_t r, int want, const SuiteOptions& o) {
  auto t = terracini_ideal(v, r, ideal_options(o));
  auto rep = locus_dimension(t);
  if (rep.capped) return {false, "capped minor enumeration; no verdict is certified"};
  if (rep.empty) return {false, "unit ideal, expected locus dimension " + std::to_string(want)};
  return {*rep.locus_dim == want, "locus_dim " + std::to_string(*rep.locus_dim) + " (" + rep.exactness +
                                      "), expected " + std::to_string(want)};
}

// `count` configurations of one oracle family; every verdict must match.
Outcome oracle_batch(const OracleFamily& family, const std::string& name, std::size_t r, int count,
                     std::uint64_t seed) {
  auto map = family.map();
  int agree = 0, members = 0;
  std::string first_miss;
  for (int i = 0; i < count; ++i) {
    auto c = oracle_config(family, name, r, mix(seed, static_cast<std::uint64_t>(i)));
    auto m = membership_param(map, c.config);
    members += m.member;
    if (m.member == c.member)
      ++agree;
    else if (first_miss.empty())
      first_miss = "; first mismatch at sample " + std::to_string(i) + " (rank " + std::to_string(m.rank) +
                   ", threshold " + std::to_string(m.threshold) + ")";
  }
  return {agree == count, std::to_string(agree) + "/" + std::to_string(count) + " agree, " + std::to_string(members) +
                              " members" + first_miss};
}

ParamMap curve_from_rows(std::size_t d, const std::vector<std::size_t>& kept) {
  std::vector<std::vector<Rational>> rows;
  for (auto i : kept) {
    std::vector<Rational> row(d + 1, Rational(0));
    row[i] = Rational(1);
    rows.push_back(row);
  }
  return rational_curve(rows);
}

std::vector<Case> curves_suite(const SuiteOptions& o) {
  std::vector<Case> cases;
  cases.push_back({"rational normal cubic, r = 2", "curves:rational-normal-empty",
                   [o] { return expect_ideal(curve_from_rows(3, {0, 1, 2, 3}), 2, Expect::unit, o); }});
  cases.push_back({"quintic [x^5:x^4y:x^3y^2:xy^4:y^5], r = 2", "curves:quintic-ter2-empty",
                   [o] { return expect_ideal(curve_from_rows(5, {0, 1, 2, 4, 5}), 2, Expect::unit, o); }});
  for (std::size_t r : {2, 3, 4}) {
    cases.push_back({"rational octic in P^7, r = " + std::to_string(r),
                     r < 4 ? "curves:octic-ter2-ter3-empty" : "curves:odd-ambient-nonempty", [o, r] {
                       auto octic = rational_octic(o.seed);
                       auto out = expect_ideal(octic.map, r, r < 4 ? Expect::unit : Expect::proper, o);
                       out.detail = octic.map.name + ": " + out.detail;
                       return out;
                     }});
  }
  cases.push_back({"emptiness bounds, rational and elliptic normal curves, N = 3..9", "curves:normal-curve-bounds", [] {
                     int checked = 0;
                     for (int n = 3; n <= 9; ++n) {
                       for (int r = 2; r <= (n + 1) / 2; ++r) {
                         ++checked;
                         if (!curve_emptiness_bounds(0, n, r))
                           return Outcome{false, "rational normal curve N=" + std::to_string(n) + " r=" +
                                                     std::to_string(r) + " not certified empty"};
                         if (curve_emptiness_bounds(1, n, r) != (r <= n / 2))
                           return Outcome{false, "elliptic normal curve N=" + std::to_string(n) + " r=" +
                                                     std::to_string(r) + " mismatch"};
                       }
                     }
                     return Outcome{true, std::to_string(checked) + " (N, r) pairs"};
                   }});
  cases.push_back({"octic non-complete bound", "curves:non-complete-bound", [] {
                     bool r2 = curve_emptiness_bounds(0, 9, 7, 2), r3 = curve_emptiness_bounds(0, 9, 7, 3);
                     return Outcome{r2 && !r3, std::string("r=2 ") + (r2 ? "empty" : "silent") + ", r=3 " +
                                                   (r3 ? "empty" : "silent")};
                   }});
  return cases;
}

std::vector<Case> veronese_suite(const SuiteOptions& o) {
  std::vector<Case> cases;
  const int samples = 50;
  for (auto [n, d] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 3}}) {
    auto family = OracleFamily::of_veronese(n, d);
    std::size_t r = static_cast<std::size_t>(first_nonempty_r_veronese(d).r);
    std::string tag = "veronese(" + std::to_string(n) + "," + std::to_string(d) + ") r=" + std::to_string(r);
    for (std::string name : {"collinear", "non-collinear"})
      cases.push_back({tag + " " + name, "veronese:first-nonempty-is-collinear",
                       [=] { return oracle_batch(family, name, r, samples, mix(o.seed, 1)); }});
  }
  {
    auto family = OracleFamily::of_veronese(2, 4);
    for (std::string name : {"collinear-plus-free", "no-r-1-collinear"})
      cases.push_back({"veronese(2,4) r=4 " + name, "veronese:second-nonempty-line-plus-point",
                       [=] { return oracle_batch(family, name, 4, samples, mix(o.seed, 2)); }});
  }
  {
    auto family = OracleFamily::of_veronese(3, 3);
    for (std::string name : {"coplanar", "non-coplanar"})
      cases.push_back({"veronese(3,3) r=4 " + name, "veronese:cubic-ter4-is-coplanar",
                       [=] { return oracle_batch(family, name, 4, samples, mix(o.seed, 3)); }});
  }
  cases.push_back({"veronese(2,3) r=3 locus dimension", "veronese:first-nonempty-dimension",
                   [o] { return expect_locus(veronese(2, 3), 3, 2 * 2 + 3 - 2, o); }});
  return cases;
}

std::vector<Case> delpezzo_suite(const SuiteOptions& o) {
  std::vector<Case> cases;
  const int samples = 20;
  for (int t = 1; t <= 4; ++t) {
    auto family = OracleFamily::of_del_pezzo(t);
    for (const auto& name : oracle_names(family, 2))
      cases.push_back({"del_pezzo(" + std::to_string(t) + ") r=2 " + name,
                       name == "U" ? "delpezzo:ter2-conic-component" : "delpezzo:ter2-line-components",
                       [=] { return oracle_batch(family, name, 2, samples, mix(o.seed, 10 + t)); }});
  }
  auto dp1 = OracleFamily::of_del_pezzo(1);
  for (const auto& name : oracle_names(dp1, 3))
    cases.push_back({"del_pezzo(1) r=3 " + name, "delpezzo:ter3-components",
                     [=] { return oracle_batch(dp1, name, 3, samples, mix(o.seed, 20)); }});
  cases.push_back({"del_pezzo(1) r=2 locus dimension", "delpezzo:ter2-components",
                   [o] { return expect_locus(del_pezzo(1), 2, 3, o); }});
  cases.push_back({"del_pezzo(1) r=3 locus dimension", "delpezzo:ter3-components",
                   [o] { return expect_locus(del_pezzo(1), 3, 5, o); }});
  return cases;
}

std::vector<Case> segre_veronese_suite(const SuiteOptions& o) {
  std::vector<Case> cases;
  struct Threshold {
    std::vector<std::uint32_t> d;
    int r;
    std::vector<std::size_t> J;
  };
  // ceil((d_i + 2) / 2) minimized, worked out per degree vector.
  std::vector<Threshold> table{{{1, 3}, 2, {1}}, {{2, 2}, 2, {1, 2}}, {{3, 3}, 3, {1, 2}}, {{2, 3}, 2, {1}}};
  for (const auto& row : table) {
    std::string tag;
    for (auto d : row.d) tag += (tag.empty() ? "" : ",") + std::to_string(d);
    cases.push_back({"first nonempty r for d=(" + tag + ")", "segre-veronese:first-r-and-J", [row] {
                       auto got = first_nonempty_r_segre_veronese(row.d);
                       bool ok = got.r == row.r && got.J == row.J;
                       return Outcome{ok, "r=" + std::to_string(got.r) + ", |J|=" + std::to_string(got.J.size())};
                     }});
  }
  for (auto d : std::vector<std::vector<std::uint32_t>>{{1, 3}, {2, 2}, {3, 3}, {2, 3}}) {
    auto family = OracleFamily::of_segre_veronese({1, 1}, d);
    cases.push_back({"two-point rule, d=(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "), 200 pairs",
                     "segre-veronese:two-point-rule",
                     [=] { return oracle_batch(family, "pair", 2, 200, mix(o.seed, 30 + d[0] * 4 + d[1])); }});
  }
  auto sv33 = OracleFamily::of_segre_veronese({1, 1}, {3, 3});
  for (const auto& name : oracle_names(sv33, 3))
    cases.push_back({"segre_veronese(1,1;3,3) r=3 " + name, "segre-veronese:ruling-components",
                     [=] { return oracle_batch(sv33, name, 3, 50, mix(o.seed, 40)); }});
  cases.push_back({"segre_veronese(1,1;2,2) r=2 locus dimension", "segre-veronese:ruling-dimension",
                   [o] { return expect_locus(segre_veronese({1, 1}, {2, 2}), 2, 2 + 1 + 2 - 2, o); }});
  return cases;
}

// Multiply every factor of every point by a random nonzero rational, then
// permute the points.
PointConfig rescaled_permutation(const PointConfig& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 50);
  std::bernoulli_distribution sign(0.5);
  PointConfig out = s;
  for (auto& point : out.points)
    for (auto& factor : point) {
      Rational c = Rational(sign(rng) ? num(rng) : -num(rng)) / Rational(num(rng));
      for (auto& x : factor) x = x * c;
    }
  std::shuffle(out.points.begin(), out.points.end(), rng);
  return out;
}

struct Sample {
  OracleFamily family;
  std::string name;
  std::size_t r;
};

std::vector<Sample> property_samples() {
  return {{OracleFamily::of_veronese(2, 4), "collinear", 3},     {OracleFamily::of_veronese(2, 4), "generic", 3},
          {OracleFamily::of_veronese(3, 3), "coplanar", 4},      {OracleFamily::of_del_pezzo(1), "Y_1", 2},
          {OracleFamily::of_del_pezzo(4), "U", 2},               {OracleFamily::of_del_pezzo(1), "B_12", 3},
          {OracleFamily::of_segre_veronese({1, 1}, {2, 2}), "pair", 2},
          {OracleFamily::of_segre_veronese({1, 1}, {3, 3}), "T_1", 3}};
}

// A point of P^2 off the del Pezzo base points, or any point otherwise.
std::vector<std::vector<Rational>> random_source_point(const OracleFamily& family, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  auto base = del_pezzo_base_points();
  for (;;) {
    std::vector<std::vector<Rational>> point;
    bool ok = true;
    for (auto n : family.dims) {
      std::vector<Rational> v(n + 1);
      bool nonzero = false;
      for (auto& x : v) {
        x = Rational(dist(rng));
        nonzero = nonzero || !x.is_zero();
      }
      ok = ok && nonzero;
      point.push_back(v);
    }
    if (!ok) continue;
    if (family.kind == OracleFamily::Kind::del_pezzo)
      for (int i = 0; i < family.t; ++i) {
        std::vector<Rational> z;
        for (auto c : base[i]) z.emplace_back(static_cast<long>(c));
        ok = ok && !same_projective_point(point[0], z);
      }
    if (ok) return point;
  }
}

std::vector<Case> properties_suite(const SuiteOptions& o) {
  std::vector<Case> cases;
  cases.push_back({"permutation and rescaling invariance, 100 configurations", "properties:alternating-multilinear", [o] {
                     auto samples = property_samples();
                     std::mt19937_64 rng(mix(o.seed, 50));
                     int violations = 0;
                     for (int i = 0; i < 100; ++i) {
                       const auto& s = samples[static_cast<std::size_t>(i) % samples.size()];
                       auto map = s.family.map();
                       auto c = oracle_config(s.family, s.name, s.r, mix(o.seed, 100 + i));
                       auto a = membership_param(map, c.config);
                       auto b = membership_param(map, rescaled_permutation(c.config, rng));
                       violations += a.member != b.member || a.rank != b.rank;
                     }
                     return Outcome{violations == 0, std::to_string(violations) + " violations"};
                   }});
  cases.push_back({"single points are never members", "properties:ter1-empty", [o] {
                     std::mt19937_64 rng(mix(o.seed, 51));
                     int bad = 0;
                     for (const auto& s : property_samples()) {
                       auto map = s.family.map();
                       PointConfig one{{random_source_point(s.family, rng)}};
                       bad += rank(stacked_jacobian(map, one)) != map.ell;
                     }
                     return Outcome{bad == 0, std::to_string(bad) + " single points with rank below ell"};
                   }});
  cases.push_back({"monotonicity S in Ter_r => S + x in Ter_{r+1}, 50 configurations", "properties:nested-loci", [o] {
                     std::vector<Sample> members{{OracleFamily::of_veronese(2, 4), "collinear", 3},
                                                 {OracleFamily::of_veronese(3, 3), "collinear", 3},
                                                 {OracleFamily::of_del_pezzo(1), "Y_1", 2}};
                     std::mt19937_64 rng(mix(o.seed, 52));
                     int bad = 0;
                     for (int i = 0; i < 50; ++i) {
                       const auto& s = members[static_cast<std::size_t>(i) % members.size()];
                       auto map = s.family.map();
                       auto c = oracle_config(s.family, s.name, s.r, mix(o.seed, 200 + i));
                       if (!membership_param(map, c.config).member) {
                         ++bad;
                         continue;
                       }
                       PointConfig bigger = c.config;
                       do {
                         bigger.points = c.config.points;
                         bigger.points.push_back(random_source_point(s.family, rng));
                         try {
                           validate_config(bigger, map.dims);
                           break;
                         } catch (const PreconditionError&) {
                         }
                       } while (true);
                       bad += !membership_param(map, bigger).member;
                     }
                     return Outcome{bad == 0, std::to_string(bad) + " violations"};
                   }});
  cases.push_back({"points on a line are members once 2r > d + 1", "properties:subvariety-inclusion", [o] {
                     int bad = 0, total = 0;
                     for (auto [n, d, r] : std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t>>{
                              {2, 3, 3}, {2, 4, 3}, {2, 4, 4}, {2, 4, 5}, {3, 3, 4}, {3, 4, 5}}) {
                       auto family = OracleFamily::of_veronese(n, d);
                       auto map = family.map();
                       for (int i = 0; i < 5; ++i, ++total) {
                         auto c = oracle_config(family, "collinear", r, mix(o.seed, 300 + i));
                         bad += !c.member || !membership_param(map, c.config).member;
                       }
                     }
                     return Outcome{bad == 0, std::to_string(total - bad) + "/" + std::to_string(total)};
                   }});
  cases.push_back({"twisted cubic: ideal route agrees with parametrization, 50 pairs", "properties:two-routes", [o] {
                     auto ideal = twisted_cubic_ideal();
                     auto param = curve_from_rows(3, {0, 1, 2, 3});
                     std::mt19937_64 rng(mix(o.seed, 53));
                     std::uniform_int_distribution<long> dist(-9, 9);
                     int agree = 0;
                     for (int i = 0; i < 50;) {
                       long s = dist(rng), t = dist(rng), u = dist(rng), v = dist(rng);
                       if ((s == 0 && t == 0) || (u == 0 && v == 0) || s * v == t * u) continue;
                       ++i;
                       auto cube = [](long a, long b) {
                         return std::vector<Rational>{Rational(a * a * a), Rational(a * a * b), Rational(a * b * b),
                                                      Rational(b * b * b)};
                       };
                       PointConfig on_curve{{{cube(s, t)}, {cube(u, v)}}};
                       PointConfig source{{{{Rational(s), Rational(t)}}, {{Rational(u), Rational(v)}}}};
                       agree += membership_ideal(ideal, on_curve).member == membership_param(param, source).member;
                     }
                     return Outcome{agree == 50, std::to_string(agree) + "/50 agree"};
                   }});
  cases.push_back({"ideal generators vanish on members and not on controls", "properties:ideal-matches-rank", [o] {
                     struct Job {
                       OracleFamily family;
                       std::size_t r;
                     };
                     std::vector<Job> jobs{{OracleFamily::of_veronese(2, 3), 3},
                                           {OracleFamily::of_del_pezzo(1), 2},
                                           {OracleFamily::of_del_pezzo(1), 3},
                                           {OracleFamily::of_segre_veronese({1, 1}, {2, 2}), 2}};
                     int members = 0, controls = 0, bad = 0;
                     for (const auto& job : jobs) {
                       auto map = job.family.map();
                       auto t = terracini_ideal(map, job.r, ideal_options(o));
                       auto gens = t.ideal.groebner_basis();
                       for (const auto& name : oracle_names(job.family, job.r)) {
                         for (int i = 0; i < 5; ++i) {
                           auto c = oracle_config(job.family, name, job.r, mix(o.seed, 400 + i));
                           auto at = config_assignment(t, c.config);
                           bool all_zero = true;
                           for (const auto& g : gens) all_zero = all_zero && g.evaluate(at).is_zero();
                           if (c.member) {
                             ++members;
                             bad += !all_zero;
                           } else {
                             ++controls;
                             bad += all_zero;
                           }
                         }
                       }
                     }
                     return Outcome{bad == 0, std::to_string(members) + " members, " + std::to_string(controls) +
                                                  " controls, " + std::to_string(bad) + " violations"};
                   }});
  return cases;
}

std::vector<Case> suite_cases(std::string_view name, const SuiteOptions& o) {
  if (name == "curves") return curves_suite(o);
  if (name == "veronese") return veronese_suite(o);
  if (name == "delpezzo") return delpezzo_suite(o);
  if (name == "segre-veronese") return segre_veronese_suite(o);
  if (name == "properties") return properties_suite(o);
  std::string known;
  for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  throw PreconditionError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
}

CaseResult run_case(const Case& c) {
  CaseResult out{c.name, c.anchor, false, ""};
  try {
    auto r = c.run();
    out.passed = r.ok;
    out.detail = r.detail;
  } catch (const std::exception& e) {
    out.detail = std::string("error: ") + e.what();
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::string SuiteReport::table() const {
  std::ostringstream out;
  std::size_t passed_count = 0;
  for (const auto& c : cases) {
    passed_count += c.passed;
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.detail << "]";
    if (!c.passed) out << "  violates " << c.anchor;
    out << "\n";
  }
  out << suite << ": " << passed_count << "/" << cases.size() << " passed\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"curves", "delpezzo", "veronese", "segre-veronese", "properties"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  auto cases = suite_cases(name, options);
  SuiteReport report{std::string(name), {}};
  if (options.parallel) {
    std::vector<std::future<CaseResult>> futures;
    for (const auto& c : cases) futures.push_back(std::async(std::launch::async, run_case, std::cref(c)));
    for (auto& f : futures) report.cases.push_back(f.get());
  } else {
    for (const auto& c : cases) report.cases.push_back(run_case(c));
  }
  return report;
}

}  // namespace terracini
