#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "terracini/errors.hpp"
#include "terracini/ideal_file.hpp"
#include "terracini/point_io.hpp"
#include "terracini/suites.hpp"
#include "terracini/terracini.hpp"
#include "terracini/variety_spec.hpp"

using namespace terracini;

namespace {

struct Job {
  std::string variety_path;
  std::string points_path;
  int r = 0;
  std::string field = "fp:32003";
  std::uint64_t seed = 0;
  std::int64_t max_minors = -1;
  std::string order = "degrevlex";
  std::string out;
  std::string suite;
  bool no_timing = false;
  bool parallel = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw ParseError("cannot write '" + path + "'");
}

void emit(const Job& job, const std::string& text) {
  if (job.out.empty())
    std::cout << text;
  else
    write_file(job.out, text);
}

TerraciniOptions ideal_options(const Job& job) {
  if (job.order != "degrevlex") throw ParseError("unsupported order '" + job.order + "' (only degrevlex)");
  TerraciniOptions o;
  o.field = Field::parse(job.field);
  o.seed = job.seed;
  if (job.max_minors >= 0) o.max_minors = static_cast<std::uint64_t>(job.max_minors);
  return o;
}

void warn_capped(bool capped) {
  if (capped) std::cerr << "warning: minor enumeration was capped; the result is not certified\n";
}

int run_membership(const Job& job) {
  auto v = load_variety_spec(job.variety_path);
  auto s = read_points_json(read_file(job.points_path));
  if (job.r != 0 && static_cast<std::size_t>(job.r) != s.r())
    throw PreconditionError("--r " + std::to_string(job.r) + " does not match the " + std::to_string(s.r()) +
                            " points given");
  Membership m = std::holds_alternative<ParamMap>(v) ? membership_param(std::get<ParamMap>(v), s)
                                                     : membership_ideal(std::get<IdealVariety>(v), s);
  std::ostringstream out;
  out << (m.member ? "MEMBER" : "NON-MEMBER") << "\n";
  out << "rank " << m.rank << ", threshold " << m.threshold << " (member iff rank < threshold, over Q)\n";
  emit(job, out.str());
  return 0;
}

int run_ideal(const Job& job) {
  auto options = ideal_options(job);
  auto v = load_variety_spec(job.variety_path);
  auto t = terracini_ideal(v, static_cast<std::size_t>(job.r), options);
  warn_capped(t.capped);
  emit(job, write_ideal_file(t.ring, t.ideal.groebner_basis()));
  return 0;
}

int run_dimension(const Job& job) {
  auto options = ideal_options(job);
  auto v = load_variety_spec(job.variety_path);
  auto start = std::chrono::steady_clock::now();
  auto t = terracini_ideal(v, static_cast<std::size_t>(job.r), options);
  auto rep = locus_dimension(t);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  warn_capped(rep.capped);

  nlohmann::ordered_json j;
  j["mode"] = "dimension";
  j["field"] = rep.field;
  j["seed"] = rep.seed;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["krull_dim"] = rep.krull_dim;
  if (rep.locus_dim)
    j["locus_dim"] = *rep.locus_dim;
  else
    j["locus_dim"] = "empty";
  j["empty"] = rep.empty;
  j["exactness"] = rep.exactness;
  j["capped"] = rep.capped;
  j["wall_ms"] = job.no_timing ? 0.0 : ms;
  if (job.out.empty()) {
    j["generators_path"] = nullptr;
  } else {
    auto path = std::filesystem::path(job.out).replace_extension(".ideal").string();
    write_file(path, write_ideal_file(t.ring, t.ideal.groebner_basis()));
    j["generators_path"] = path;
  }
  emit(job, j.dump(2) + "\n");
  return 0;
}

int run_range(const Job& job) {
  auto v = load_variety_spec(job.variety_path);
  auto range = admissible_r_range(v);
  std::ostringstream out;
  out << variety_name(v) << ": dim " << variety_dimension(v) << " in P^" << ambient_dimension(v) << "\n";
  if (range.empty())
    out << "admissible r: empty\n";
  else
    out << "admissible r: " << range.lo << ".." << range.hi << "\n";
  emit(job, out.str());
  return 0;
}

int run_verify(const Job& job) {
  SuiteOptions o;
  o.seed = job.seed;
  o.field = Field::parse(job.field);
  if (job.max_minors >= 0) o.max_minors = static_cast<std::uint64_t>(job.max_minors);
  o.parallel = job.parallel;
  std::vector<std::string> names;
  if (job.suite == "all")
    names = suite_names();
  else
    names = {job.suite};
  bool ok = true;
  std::ostringstream out;
  for (const auto& name : names) {
    auto report = run_suite(name, o);
    out << report.table();
    ok = ok && report.passed();
  }
  emit(job, out.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Terracini loci: membership, defining ideals and dimensions"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", job.out, "Output path (default: stdout)");
  };
  auto add_ideal_flags = [&](CLI::App* c) {
    c->add_option("--variety", job.variety_path, "Variety spec (TOML)")->required();
    c->add_option("--r", job.r, "Number of points")->required();
    c->add_option("--field", job.field, "q or fp:<prime>");
    c->add_option("--seed", job.seed, "Seed for randomized steps");
    c->add_option("--max-minors", job.max_minors, "Cap on the number of minors (default: unlimited)");
    c->add_option("--order", job.order, "Monomial order (degrevlex)");
    add_common(c);
  };

  auto* membership = app.add_subcommand("membership", "Decide whether a point configuration lies in Ter_r");
  membership->add_option("--variety", job.variety_path, "Variety spec (TOML)")->required();
  membership->add_option("--points", job.points_path, "Point configuration (JSON)")->required();
  membership->add_option("--r", job.r, "Expected number of points");
  add_common(membership);

  auto* ideal = app.add_subcommand("ideal", "Write the Terracini ideal");
  add_ideal_flags(ideal);
  auto* dimension = app.add_subcommand("dimension", "Write the locus dimension report (JSON)");
  add_ideal_flags(dimension);
  dimension->add_flag("--no-timing", job.no_timing, "Report wall_ms as 0 for byte-identical output");

  auto* range = app.add_subcommand("range", "Print the admissible range of r");
  range->add_option("--variety", job.variety_path, "Variety spec (TOML)")->required();
  add_common(range);

  auto* verify = app.add_subcommand("verify", "Run a classification suite");
  auto suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", job.suite, "curves, delpezzo, veronese, segre-veronese, properties or all")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--seed", job.seed, "Suite seed");
  verify->add_option("--field", job.field, "q or fp:<prime>");
  verify->add_option("--max-minors", job.max_minors, "Cap on the number of minors");
  verify->add_flag("--parallel", job.parallel, "Run cases concurrently");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*membership) return run_membership(job);
    if (*ideal) return run_ideal(job);
    if (*dimension) return run_dimension(job);
    if (*range) return run_range(job);
    if (*verify) return run_verify(job);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
