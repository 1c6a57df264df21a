#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shadowkit/cli/scenarios.hpp"

using namespace shadowkit;

namespace {

const Entry* find_entry(const Report& r, const std::string& name) {
  for (const auto& e : r.entries())
    if (e.name == name) return &e;
  return nullptr;
}

bool all_pass(const Report& r) {
  for (const auto& e : r.entries())
    if (e.status != Status::Pass) return false;
  return true;
}

bool has_float(const ojson& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& x : j)
      if (has_float(x)) return true;
  return false;
}

std::string scratch(const std::string& leaf) {
  auto dir = std::filesystem::temp_directory_path() / "shadowkit_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / leaf).string();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_verify(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("VERIFY_BIN");
  if (!bin) throw std::runtime_error("VERIFY_BIN is not set; run through ctest");
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + bin + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ---------- parameters

TEST(Params, ExactRationalsOnly) {
  EXPECT_EQ(parse_rational_param("7/9"), BigRational(7, 9));
  EXPECT_EQ(parse_rational_param("14/18"), BigRational(7, 9));
  EXPECT_EQ(parse_rational_param("-3"), BigRational(-3));
  for (const char* bad : {"0.5", "1e3", "z24", "", "sqrt(2)", "t"}) EXPECT_THROW(parse_rational_param(bad), Error) << bad;
  EXPECT_EQ(rational_string(BigRational(-7, 9)), "-7/9");
}

TEST(Params, ExcludedAndSingular) {
  for (long t : {0L, 1L, -1L}) EXPECT_THROW(run_d12(BigRational(t)), ExcludedParameter);
  EXPECT_THROW(run_s3(BigRational(0), BigRational(0)), SingularFiber);
}

// ---------- d12

TEST(ScenarioD12, SevenNinthsAllPass) {
  auto rep = run_d12(BigRational(7, 9));
  std::vector<std::string> names;
  for (const auto& e : rep.entries()) names.push_back(e.name);
  std::vector<std::string> expected{"d12.section_points_on_curve", "d12.first_principal_divisor", "d12.second_principal_divisor",
                                    "d12.sections_simplify",       "d12.pushed_shadow_class_is_zero", "d12.two_torsion_roots",
                                    "d12.shadow_pushforwards",     "d12.sections",       "d12.nontorsion.D1",
                                    "d12.nontorsion.D2",           "d12.independence"};
  EXPECT_EQ(names, expected);
  for (const auto& e : rep.entries()) EXPECT_EQ(e.status, Status::Pass) << e.name << ": " << e.reason;
  EXPECT_EQ(rep.exit_code(), 0);
  EXPECT_EQ(find_entry(rep, "d12.independence")->certificate["strategy"], "galois-involution");
}

TEST(ScenarioD12, OtherParameters) {
  for (auto t : {BigRational(3), BigRational(5, 7)}) {
    auto rep = run_d12(t);
    for (const char* n : {"d12.section_points_on_curve", "d12.first_principal_divisor", "d12.second_principal_divisor",
                          "d12.sections_simplify", "d12.pushed_shadow_class_is_zero"})
      EXPECT_EQ(find_entry(rep, n)->status, Status::Pass) << n;
  }
}

TEST(ScenarioD12, PayloadsRecheckFromJson) {
  auto rep = run_d12(BigRational(7, 9));
  auto secs = d12_sections(CycNum(BigRational(7, 9)));
  const auto& W = secs.E.weierstrass();
  auto doc = rep.to_json();
  for (const auto& e : doc["entries"]) {
    if (e["name"] == "d12.nontorsion.D1")
      EXPECT_TRUE(recheck(W, secs.D1, torsion_certificate_from_json(e["certificate"])));
    if (e["name"] == "d12.nontorsion.D2")
      EXPECT_TRUE(recheck(W, secs.D2, torsion_certificate_from_json(e["certificate"])));
    if (e["name"] == "d12.independence") {
      auto c = independence_certificate_from_json(e["certificate"]);
      EXPECT_TRUE(recheck(W, secs.D1, secs.D2, c));
      // the same payload must not certify the pair in the other order
      EXPECT_FALSE(recheck(W, secs.D2, secs.D1, c));
    }
  }
}

TEST(ScenarioD12, SinglePrimeIsUnverified) {
  ScenarioConfig cfg;
  cfg.primes = {73};
  auto rep = run_d12(BigRational(7, 9), cfg);
  for (const char* n : {"d12.nontorsion.D1", "d12.nontorsion.D2", "d12.independence"})
    EXPECT_EQ(find_entry(rep, n)->status, Status::Unverified) << n;
  EXPECT_EQ(find_entry(rep, "d12.first_principal_divisor")->status, Status::Pass);
  EXPECT_EQ(rep.exit_code(), 2);
}

// ---------- s3

TEST(ScenarioS3, TwoOneAllPassWithNotes) {
  auto rep = run_s3(BigRational(2), BigRational(1));
  for (const auto& e : rep.entries()) EXPECT_EQ(e.status, Status::Pass) << e.name << ": " << e.reason;
  ASSERT_EQ(rep.notes().size(), 4u);
  EXPECT_EQ(rep.notes()[0]["name"], "s3.discrepancy.P1");
  EXPECT_EQ(rep.notes()[2]["name"], "s3.listed_degree.P1");
  EXPECT_EQ(rep.notes()[3]["name"], "s3.listed_degree.P2");
  EXPECT_NE(rep.notes()[0]["text"].get<std::string>().find("[\"-2*z3\",\"0\",\"-1\"]"), std::string::npos);

  const auto* listed = find_entry(rep, "s3.listed_images");
  int flagged = 0;
  for (const auto& row : listed->certificate["images"]) {
    if (row.value("flagged", false)) {
      ++flagged;
      EXPECT_FALSE(row["listed_on_target"].get<bool>());
      EXPECT_TRUE(row["on_target"].get<bool>());
      EXPECT_EQ(row["recomputed"][2], "1");
    } else {
      EXPECT_TRUE(row["agrees"].get<bool>());
    }
  }
  EXPECT_EQ(flagged, 2);
}

TEST(ScenarioS3, PayloadsRecheckFromJson) {
  auto rep = run_s3(BigRational(2), BigRational(1));
  auto secs = s3_sections(CycNum(2), CycNum(1));
  const auto& W = secs.E.weierstrass();
  const auto& Wp = secs.Eprime.weierstrass();
  for (const auto& e : rep.to_json()["entries"]) {
    const auto& c = e["certificate"];
    if (e["name"] == "s3.independence") {
      auto ic = independence_certificate_from_json(c);
      EXPECT_EQ(ic.strategy, IndependenceStrategy::GaloisSwap);
      EXPECT_TRUE(recheck(W, secs.P1, secs.P2, ic));
    }
    if (e["name"] == "s3.nontorsion.Ptau") EXPECT_TRUE(recheck(Wp, secs.Ptau, torsion_certificate_from_json(c)));
    if (e["name"] == "s3.nonisogeny") {
      auto nc = nonisogeny_certificate_from_json(c);
      EXPECT_EQ(nc.p, 73u);
      EXPECT_TRUE(recheck(W, Wp, nc));
      EXPECT_FALSE(recheck(Wp, W, nc));
    }
  }
}

TEST(ScenarioS3, SinglePrimeIsUnverified) {
  ScenarioConfig cfg;
  cfg.primes = {73};
  auto rep = run_s3(BigRational(2), BigRational(1), cfg);
  for (const char* n : {"s3.nontorsion.P1+P2", "s3.nontorsion.P1-P2", "s3.independence", "s3.nontorsion.Ptau"})
    EXPECT_EQ(find_entry(rep, n)->status, Status::Unverified) << n;
  EXPECT_EQ(find_entry(rep, "s3.nonisogeny")->status, Status::Pass);
  EXPECT_EQ(rep.exit_code(), 2);
}

TEST(ScenarioS3, ListedComparisonOnlyAtListedParameters) {
  auto rep = run_s3(BigRational(3), BigRational(1));
  EXPECT_EQ(find_entry(rep, "s3.listed_images"), nullptr);
  ASSERT_FALSE(rep.notes().empty());
  EXPECT_EQ(rep.notes()[0]["name"], "s3.listed_images");
}

// ---------- shadow / stoll / suite

TEST(ScenarioShadow, EtaleIsIdenticallyZero) {
  auto rep = run_shadow(std::string(SHADOWKIT_FIXTURE_DIR) + "/covers/etale.json");
  EXPECT_TRUE(all_pass(rep));
  const auto* e = find_entry(rep, "shadow.etale-double-cover.shadow");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->certificate["classification"], "identically-zero");
}

TEST(ScenarioShadow, InconsistentFixtureFails) {
  auto rep = run_shadow(std::string(SHADOWKIT_FIXTURE_DIR) + "/covers/inconsistent.json");
  EXPECT_EQ(find_entry(rep, "shadow.inconsistent.riemann_hurwitz")->status, Status::Fail);
  EXPECT_EQ(rep.exit_code(), 1);
}

TEST(ScenarioShadow, BadFixtureThrows) {
  auto path = scratch("broken.json");
  std::ofstream(path) << "{\"name\": \"x\", \"degree\": ";
  EXPECT_ANY_THROW(run_shadow(path));
  EXPECT_ANY_THROW(run_shadow(scratch("does_not_exist.json")));
}

TEST(ScenarioStoll, NoListIsUnverified) {
  auto rep = run_stoll();
  EXPECT_EQ(find_entry(rep, "stoll.identity")->status, Status::Pass);
  EXPECT_EQ(find_entry(rep, "stoll.closed_forms")->status, Status::Pass);
  EXPECT_EQ(find_entry(rep, "stoll.negative_control")->status, Status::Pass);
  const auto* ex = find_entry(rep, "stoll.exclusion");
  EXPECT_EQ(ex->status, Status::Unverified);
  EXPECT_EQ(ex->reason, "UNVERIFIED-NO-LIST");
  EXPECT_EQ(rep.exit_code(), 2);
}

TEST(ScenarioStoll, ListOutcomes) {
  ScenarioConfig cfg;
  cfg.list = scratch("clean.txt");
  std::ofstream(cfg.list) << "# two harmless entries\na^2 - b\n3*a*b + 1\n";
  EXPECT_EQ(run_stoll(cfg).exit_code(), 0);

  cfg.list = scratch("hit.txt");
  std::ofstream(cfg.list) << "a - 1\n2*a^4*b - a^4 - 12*a^3*b^2 + 9*a^3*b + 18*a^2*b^3 - 15*a^2*b^2 - 9*a*b^3 + 8*a*b^2\n";
  auto hit = run_stoll(cfg);
  EXPECT_EQ(find_entry(hit, "stoll.exclusion")->status, Status::Fail);

  cfg.list = scratch("bad.txt");
  std::ofstream(cfg.list) << "a + + b\n";
  EXPECT_EQ(find_entry(run_stoll(cfg), "stoll.exclusion")->status, Status::Fail);
}

TEST(ScenarioSuite, AggregatesEverything) {
  auto rep = run_suite();
  std::size_t d12 = 0, s3 = 0, shadow = 0, stoll = 0;
  for (const auto& e : rep.entries()) {
    d12 += e.name.rfind("d12.", 0) == 0;
    s3 += e.name.rfind("s3.", 0) == 0;
    shadow += e.name.rfind("shadow.", 0) == 0;
    stoll += e.name.rfind("stoll.", 0) == 0;
    if (e.name != "stoll.exclusion") EXPECT_EQ(e.status, Status::Pass) << e.name;
  }
  EXPECT_EQ(d12, 11u);
  EXPECT_EQ(s3, 8u);
  EXPECT_EQ(shadow, 20u);
  EXPECT_EQ(stoll, 5u);
  EXPECT_EQ(rep.exit_code(), 2);
}

TEST(Reports, DeterministicAndFloatFree) {
  auto a = run_suite().to_json().dump(2);
  auto b = run_suite().to_json().dump(2);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(has_float(ojson::parse(a)));
  EXPECT_FALSE(has_float(run_d12(BigRational(7, 9)).to_json(true)));
  auto doc = ojson::parse(a);
  for (const char* k : {"toolkit", "version", "scenario", "entries", "notes", "summary"}) EXPECT_TRUE(doc.contains(k)) << k;
  EXPECT_EQ(doc["version"], kToolkitVersion);
}

TEST(Reports, ExitCodes) {
  Report r(ojson{{"kind", "test"}});
  EXPECT_EQ(r.exit_code(), 0);
  r.check("a", [](Entry&) { return Status::Pass; });
  EXPECT_EQ(r.exit_code(), 0);
  r.check("b", [](Entry&) -> Status { throw InsufficientPrimes("only one prime"); });
  EXPECT_EQ(r.exit_code(), 2);
  r.check("c", [](Entry&) -> Status { throw Error("boom"); });
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.entries()[2].reason, "boom");
}

// ---------- the binary

TEST(Binary, ExitCodesPerOutcome) {
  EXPECT_EQ(run_verify("d12 --t 7/9 --quiet").code, 0);
  EXPECT_EQ(run_verify("s3 --u 2 --w 1 --quiet").code, 0);
  EXPECT_EQ(run_verify("s3 --u 2 --w 1 --primes 73 --quiet").code, 2);
  EXPECT_EQ(run_verify("stoll --quiet").code, 2);
  EXPECT_EQ(run_verify("shadow --fixture '" + std::string(SHADOWKIT_FIXTURE_DIR) + "/covers/etale.json' --quiet").code, 0);
  EXPECT_EQ(run_verify("shadow --fixture '" + std::string(SHADOWKIT_FIXTURE_DIR) + "/covers/inconsistent.json' --quiet").code, 1);
  EXPECT_EQ(run_verify("suite --quiet").code, 2);
}

TEST(Binary, ErrorsExitOne) {
  for (const char* args : {"d12 --t 1", "d12 --t 0", "d12 --t 0.5", "s3 --u 0 --w 0", "d12", "nonsense",
                           "d12 --t 7/9 --primes 4,9", "shadow --fixture /nonexistent.json"}) {
    auto r = run_verify(args);
    EXPECT_EQ(r.code, 1) << args << "\n" << r.out;
  }
}

TEST(Binary, EnvironmentPrimePool) {
  EXPECT_EQ(run_verify("d12 --t 7/9 --quiet", "SHADOWKIT_PRIMES=73").code, 2);
  // the flag beats the environment
  EXPECT_EQ(run_verify("d12 --t 7/9 --quiet --primes 73,97,193", "SHADOWKIT_PRIMES=73").code, 0);
}

TEST(Binary, ReportFileAndStdout) {
  auto path = scratch("d12.json");
  auto r = run_verify("--report '" + path + "' d12 --t 7/9");
  ASSERT_EQ(r.code, 0) << r.out;
  auto doc = ojson::parse(slurp(path));
  EXPECT_EQ(doc["scenario"]["t"], "7/9");
  EXPECT_EQ(doc["summary"]["pass"], 11);
  EXPECT_EQ(doc["summary"]["exit_code"], 0);
  for (const auto& e : doc["entries"]) {
    EXPECT_EQ(e["status"], "PASS");
    EXPECT_FALSE(e.contains("timing_ms"));
  }
  // without --report the JSON goes to stdout
  auto plain = run_verify("d12 --t 7/9");
  EXPECT_EQ(ojson::parse(plain.out), doc);
  auto quiet = run_verify("d12 --t 7/9 --quiet");
  EXPECT_NE(quiet.out.find("PASS  d12.independence"), std::string::npos);

  auto timed = ojson::parse(run_verify("d12 --t 7/9 --timing").out);
  EXPECT_TRUE(timed["entries"][0]["timing_ms"].is_number_integer());
}

TEST(Binary, ByteForByteDeterministic) {
  auto a = scratch("s3a.json"), b = scratch("s3b.json");
  run_verify("s3 --u 2 --w 1 --report '" + a + "'");
  run_verify("s3 --u 2 --w 1 --report '" + b + "'");
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}
