// verify: command-line front end for the scenario checks.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "shadowkit/cli/scenarios.hpp"

using namespace shadowkit;

namespace {

struct Globals {
  std::string primes;
  std::string report;
  bool quiet = false;
  bool timing = false;
  std::string fixtures = SHADOWKIT_FIXTURE_DIR;
  long sieve_bound = 20;
};

ScenarioConfig make_config(const Globals& g, const std::string& list = "") {
  ScenarioConfig cfg;
  cfg.primes = g.primes.empty() ? default_prime_pool() : parse_prime_list(g.primes);
  cfg.sieve_bound = g.sieve_bound;
  cfg.fixtures = g.fixtures;
  cfg.list = list;
  return cfg;
}

int emit(const Report& rep, const Globals& g) {
  std::string text = rep.to_json(g.timing).dump(2) + "\n";
  if (!g.report.empty()) {
    std::ofstream out(g.report);
    if (!out) throw Error("cannot write report to " + g.report);
    out << text;
  }
  if (g.quiet || !g.report.empty()) std::cout << rep.summary_text();
  else std::cout << text;
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the shadow divisor constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Globals g;
  app.add_option("--primes", g.primes, "comma-separated reduction primes (overrides SHADOWKIT_PRIMES)");
  app.add_option("--report", g.report, "write the JSON report here");
  app.add_flag("--quiet", g.quiet, "print the one-line-per-entry summary instead of the JSON report");
  app.add_flag("--timing", g.timing, "include per-entry wall times in the report");
  app.add_option("--fixtures", g.fixtures, "fixture directory");
  app.add_option("--sieve-bound", g.sieve_bound, "coefficient bound for the dependence sieve")->check(CLI::PositiveNumber);

  std::string t_str, u_str, w_str, fixture, list;
  auto* d12 = app.add_subcommand("d12", "the dihedral family at a rational t");
  d12->add_option("--t", t_str, "parameter, an exact rational")->required();
  auto* s3 = app.add_subcommand("s3", "the S3 family at rational (u, w)");
  s3->add_option("--u", u_str, "exact rational")->required();
  s3->add_option("--w", w_str, "exact rational")->required();
  auto* sh = app.add_subcommand("shadow", "shadow divisor of a formal cover");
  sh->add_option("--fixture", fixture, "cover description (JSON)")->required();
  auto* st = app.add_subcommand("stoll", "simultaneous-torsion exclusion");
  st->add_option("--list", list, "polynomial list file");
  auto* suite = app.add_subcommand("suite", "everything at the default parameters");
  suite->add_option("--list", list, "polynomial list file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*d12) return emit(run_d12(parse_rational_param(t_str), make_config(g)), g);
    if (*s3) return emit(run_s3(parse_rational_param(u_str), parse_rational_param(w_str), make_config(g)), g);
    if (*sh) return emit(run_shadow(fixture, make_config(g)), g);
    if (*st) return emit(run_stoll(make_config(g, list)), g);
    return emit(run_suite(make_config(g, list)), g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
