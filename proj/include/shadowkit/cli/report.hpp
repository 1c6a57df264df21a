#pragma once

// Report assembly. Entries keep insertion order; nothing time-dependent is written unless
// timing was asked for, so identical runs give identical bytes.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowkit/certify/independence.hpp"
#include "shadowkit/certify/isogeny.hpp"
#include "shadowkit/certify/stoll.hpp"
#include "shadowkit/shadow/cover.hpp"

namespace shadowkit {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class Status { Pass, Fail, Unverified };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    default:
      return "UNVERIFIED";
  }
}

struct Entry {
  std::string name;
  Status status = Status::Fail;
  std::string reason;
  ojson certificate = ojson::object();
  double millis = 0;
};

class Report {
 public:
  explicit Report(ojson scenario) : scenario_(std::move(scenario)) {}

  /// Runs body; an exception becomes a FAIL entry carrying the message, except the ones
  /// listed as "cannot decide", which become UNVERIFIED.
  void check(const std::string& name, const std::function<Status(Entry&)>& body) {
    Entry e;
    e.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.status = body(e);
    } catch (const InsufficientPrimes& err) {
      e.status = Status::Unverified;
      e.reason = err.what();
    } catch (const Inconclusive& err) {
      e.status = Status::Unverified;
      e.reason = err.what();
    } catch (const BudgetExhausted& err) {
      e.status = Status::Unverified;
      e.reason = err.what();
    } catch (const std::exception& err) {
      e.status = Status::Fail;
      e.reason = err.what();
    }
    e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    entries_.push_back(std::move(e));
  }

  void note(const std::string& name, const std::string& text) { notes_.push_back({{"name", name}, {"text", text}}); }

  void absorb(const Report& other) {
    for (const auto& e : other.entries_) entries_.push_back(e);
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<ojson>& notes() const { return notes_; }

  int exit_code() const {
    bool unverified = false;
    for (const auto& e : entries_) {
      if (e.status == Status::Fail) return 1;
      if (e.status == Status::Unverified) unverified = true;
    }
    return unverified ? 2 : 0;
  }

  ojson to_json(bool timing = false) const {
    ojson j;
    j["toolkit"] = "shadowkit";
    j["version"] = kToolkitVersion;
    j["scenario"] = scenario_;
    ojson es = ojson::array();
    long pass = 0, fail = 0, unv = 0;
    for (const auto& e : entries_) {
      ojson x;
      x["name"] = e.name;
      x["status"] = shadowkit::to_string(e.status);
      if (!e.reason.empty()) x["reason"] = e.reason;
      x["certificate"] = e.certificate;
      if (timing) x["timing_ms"] = static_cast<long>(e.millis + 0.5);
      es.push_back(std::move(x));
      (e.status == Status::Pass ? pass : e.status == Status::Fail ? fail : unv)++;
    }
    j["entries"] = std::move(es);
    j["notes"] = notes_;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"unverified", unv}, {"exit_code", exit_code()}};
    return j;
  }

  std::string summary_text() const {
    std::string s;
    for (const auto& e : entries_) {
      s += shadowkit::to_string(e.status) + "  " + e.name;
      if (!e.reason.empty()) s += "  (" + e.reason + ")";
      s += "\n";
    }
    for (const auto& n : notes_) s += "NOTE  " + n["name"].get<std::string>() + ": " + n["text"].get<std::string>() + "\n";
    return s;
  }

 private:
  ojson scenario_;
  std::vector<Entry> entries_;
  std::vector<ojson> notes_;
};

// ---------- certificate payloads

inline ojson to_json(const ReductionWitness& w) {
  return {{"prime", w.p}, {"degree", w.degree}, {"group_order", w.group_order}, {"point_order", w.point_order}};
}

inline ojson to_json(const TorsionCertificate& c) {
  ojson j;
  j["verdict"] = c.is_torsion() ? "torsion" : "nontorsion";
  if (c.is_torsion()) j["order"] = c.order;
  j["bound"] = c.bound;
  ojson ws = ojson::array();
  for (const auto& w : c.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["method"] = c.method;
  if (c.separating) j["separating"] = to_json(*c.separating);
  j["transcript"] = c.transcript;
  return j;
}

inline ojson to_json(const SieveResult& s) {
  ojson j{{"dependent", s.dependent}, {"bound", s.bound}, {"primes", s.primes}, {"survivors", s.survivors}};
  if (s.dependent) j["relation"] = {s.m, s.n};
  return j;
}

inline ojson to_json(const IndependenceCertificate& c) {
  ojson j;
  j["strategy"] = to_string(c.strategy);
  j["automorphism"] = "z24 -> z24^" + std::to_string(c.automorphism);
  j["independent"] = c.independent;
  ojson subs = ojson::object();
  for (const auto& [n, cert] : c.subs) subs[n] = to_json(cert);
  j["nontorsion"] = subs;
  if (c.sieve) j["sieve"] = to_json(*c.sieve);
  j["transcript"] = c.transcript;
  return j;
}

inline ojson to_json(const CurveReductionData& d) {
  return {{"degree", d.degree},
          {"count", d.count},
          {"trace", d.trace},
          {"ordinary", d.ordinary},
          {"disc_squarefree", d.disc_squarefree.get_str()}};
}

inline ojson to_json(const NonIsogenyCertificate& c) {
  return {{"prime", c.p}, {"first", to_json(c.first)}, {"second", to_json(c.second)}, {"transcript", c.transcript}};
}

// ---------- reading payloads back, so a stored report can be rechecked

inline ReductionWitness witness_from_json(const ojson& j) {
  return {j.at("prime").get<std::uint64_t>(), j.at("degree").get<int>(), j.at("group_order").get<std::uint64_t>(),
          j.at("point_order").get<std::uint64_t>()};
}

inline TorsionCertificate torsion_certificate_from_json(const ojson& j) {
  TorsionCertificate c;
  c.verdict = j.at("verdict") == "torsion" ? TorsionVerdict::Torsion : TorsionVerdict::Nontorsion;
  if (j.contains("order")) c.order = j["order"].get<std::uint64_t>();
  c.bound = j.at("bound").get<std::uint64_t>();
  for (const auto& w : j.at("witnesses")) c.witnesses.push_back(witness_from_json(w));
  c.method = j.at("method").get<std::string>();
  if (j.contains("separating")) c.separating = witness_from_json(j["separating"]);
  return c;
}

inline IndependenceCertificate independence_certificate_from_json(const ojson& j) {
  IndependenceCertificate c;
  const std::string s = j.at("strategy");
  c.strategy = s == "galois-involution" ? IndependenceStrategy::GaloisInvolution
               : s == "galois-swap"     ? IndependenceStrategy::GaloisSwap
                                        : IndependenceStrategy::Sieve;
  const std::string aut = j.at("automorphism");
  c.automorphism = std::stoi(aut.substr(aut.rfind('^') + 1));
  c.independent = j.at("independent").get<bool>();
  for (const auto& [name, cert] : j.at("nontorsion").items()) c.subs.emplace_back(name, torsion_certificate_from_json(cert));
  if (c.strategy == IndependenceStrategy::GaloisInvolution)
    for (const auto& line : j.at("transcript"))
      if (line.get<std::string>().find("negates Q") != std::string::npos) c.swapped_roles = true;
  if (j.contains("sieve")) {
    const auto& sv = j["sieve"];
    SieveResult r;
    r.dependent = sv.at("dependent").get<bool>();
    r.bound = sv.at("bound").get<long>();
    r.primes = sv.at("primes").get<std::vector<std::uint64_t>>();
    r.survivors = sv.at("survivors").get<long>();
    if (r.dependent) {
      r.m = sv["relation"][0].get<long>();
      r.n = sv["relation"][1].get<long>();
    }
    c.sieve = r;
  }
  return c;
}

inline CurveReductionData reduction_data_from_json(const ojson& j) {
  return {j.at("degree").get<int>(), j.at("count").get<std::uint64_t>(), j.at("trace").get<long>(),
          j.at("ordinary").get<bool>(), mpz_class(j.at("disc_squarefree").get<std::string>())};
}

inline NonIsogenyCertificate nonisogeny_certificate_from_json(const ojson& j) {
  NonIsogenyCertificate c;
  c.p = j.at("prime").get<std::uint64_t>();
  c.first = reduction_data_from_json(j.at("first"));
  c.second = reduction_data_from_json(j.at("second"));
  return c;
}

inline ojson label_json(const LabelDivisor& d) {
  ojson j = ojson::object();
  for (const auto& [p, n] : d.terms()) j[p] = n;
  return j;
}

inline ojson to_json(const SymbolicCover& c, const SourceExpr& e) {
  return {{"points", label_json(e.pts)}, {c.k_src_name, e.k_src}, {"pullback(" + c.k_tgt_name + ")", e.k_tgt_pull}};
}

inline ojson to_json(const SymbolicCover& c, const TargetExpr& e) {
  return {{"points", label_json(e.pts)}, {c.k_tgt_name, e.k_tgt}};
}

}  // namespace shadowkit
