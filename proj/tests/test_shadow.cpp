#include <gtest/gtest.h>

#include <random>

#include "cover_gen.hpp"
#include "shadowkit/shadow/cover.hpp"

using namespace shadowkit;

namespace {

std::string fixture(const std::string& f) { return std::string(SHADOWKIT_FIXTURE_DIR) + "/covers/" + f; }

LabelDivisor L(std::initializer_list<std::pair<const char*, long>> xs) {
  LabelDivisor d;
  for (auto [p, n] : xs) d.add(p, n);
  return d;
}

LabelDivisor ab_sum() { return L({{"A1", 1}, {"A2", 1}, {"A3", 1}, {"B1", 1}, {"B2", 1}, {"B3", 1}}); }

}  // namespace

TEST(ShadowFixtures, EtaleIsZero) {
  auto c = load_cover(fixture("etale.json"));
  auto s = shadow(c);
  EXPECT_TRUE(s.div.is_zero());
  EXPECT_EQ(s.cls, ShadowClass::IdenticallyZero);
  EXPECT_TRUE(shadow_pushforward(c).closed.is_zero());
  EXPECT_TRUE(galois_identity_check(c).holds);
  EXPECT_TRUE(rh_check(c));
}

TEST(ShadowFixtures, D12PhiGaloisForm) {
  auto c = load_cover(fixture("d12_phi.json"));
  auto s = shadow(c);
  // 8R - 2 phi^* K' on the nose, 10R - 2K_C once K_C is rewritten
  EXPECT_EQ(s.div, (SourceExpr{8 * c.R, 0, -2}));
  ASSERT_TRUE(s.galois_form.has_value());
  EXPECT_EQ(*s.galois_form, (SourceExpr{10 * c.R, -2, 0}));
  EXPECT_EQ(s.cls, ShadowClass::General);
  EXPECT_TRUE(galois_identity_check(c).holds);
}

TEST(ShadowFixtures, S3DoubleCover) {
  auto c = load_cover(fixture("s3_pi.json"));
  auto s = shadow(c);
  EXPECT_EQ(s.div, (SourceExpr{8 * L({{"A~", 1}, {"A'~", 1}}), 0, -2}));
  auto pf = shadow_pushforward(c);
  EXPECT_TRUE(pf.agree);
  // 8(A + A') - 4 K_C, the divisor pushed to the elliptic quotients
  EXPECT_EQ(pf.closed, (TargetExpr{8 * L({{"A", 1}, {"A'", 1}}), -4}));
}

TEST(PushAlong, PsiOfPhiShadow) {
  auto phi = load_cover(fixture("d12_phi.json"));
  auto psi = load_cover(fixture("d12_psi.json"));
  SourceExpr D{10 * phi.R, -2, 0};
  std::vector<std::string> log;
  auto r = push_along(D, psi, &log);
  EXPECT_EQ(r, (TargetExpr{20 * L({{"(1/x=0,y1=1)", 1}}) - 2 * ab_sum(), -4}));
  ASSERT_EQ(log.size(), 1u);
  EXPECT_NE(log[0].find("rewrote"), std::string::npos);
}

TEST(PushAlong, PsiOfPhiPrimeShadow) {
  auto phi2 = load_cover(fixture("d12_phi_prime.json"));
  auto psi = load_cover(fixture("d12_psi.json"));
  auto s = shadow(phi2);
  ASSERT_TRUE(s.galois_form.has_value());
  auto r = push_along(*s.galois_form, psi);
  EXPECT_EQ(r, (TargetExpr{20 * L({{"(x=0,y1=z12)", 1}}) - 2 * ab_sum(), -4}));
}

TEST(PushAlong, ZeroAndUnmapped) {
  auto psi = load_cover(fixture("d12_psi.json"));
  std::vector<std::string> log;
  EXPECT_TRUE(push_along(SourceExpr{}, psi, &log).is_zero());
  EXPECT_TRUE(log.empty());
  EXPECT_THROW(push_along(SourceExpr{L({{"nowhere", 1}}), 0, 0}, psi), CoverError);
}

TEST(RiemannHurwitz, PsiTargetGenusIsTwo) {
  auto psi = load_cover(fixture("d12_psi.json"));
  EXPECT_TRUE(rh_check(psi));
  std::vector<int> fits;
  for (int g = 0; g <= 10; ++g) {
    auto c = psi;
    c.g_tgt = g;
    if (rh_check(c)) fits.push_back(g);
  }
  EXPECT_EQ(fits, std::vector<int>{2});
}

TEST(RiemannHurwitz, InconsistentFixture) {
  auto c = load_cover(fixture("inconsistent.json"));
  EXPECT_FALSE(rh_check(c));
  c.consistency = true;
  EXPECT_THROW(c.validate(), CoverError);
  EXPECT_THROW(shadow(c), CoverError);
}

TEST(CoverValidation, Errors) {
  SymbolicCover c;
  c.d = 2, c.g_src = 1, c.g_tgt = 1, c.consistency = true;
  c.push = {{"p", "q"}, {"p2", "q"}};
  c.pull = {{"q", L({{"p", 1}})}};
  EXPECT_THROW(c.validate(), CoverError);  // fibre of degree 1
  c.pull = {{"q", L({{"p", 1}, {"p2", 1}})}};
  EXPECT_NO_THROW(c.validate());
  c.R.add("p", 1);
  c.pull.clear();
  c.g_src = 2;
  c.R.add("p2", 1);
  EXPECT_THROW(shadow(c), CoverError);  // pullback of q is needed
  EXPECT_THROW(cover_from_json(nlohmann::json::parse(R"({"degree": 2})")), ParseError);
}

TEST(ShadowSpecial, NonGaloisWitness) {
  SymbolicCover c;
  c.d = 3, c.g_tgt = 1, c.g_src = 2;
  c.R = L({{"p0", 1}, {"r0", 1}});
  c.push = {{"p0", "q"}, {"p1", "q"}, {"r0", "s"}, {"r1", "s"}};
  c.pull = {{"q", L({{"p0", 2}, {"p1", 1}})}, {"s", L({{"r0", 2}, {"r1", 1}})}};
  auto w = galois_identity_check(c);
  EXPECT_FALSE(w.holds);
  EXPECT_NE(w.witness.find("p1"), std::string::npos);
  // genus-1 target, not Galois: 2dR - 2 phi^* phi_* R survives
  auto s = shadow(c);
  EXPECT_EQ(s.div, (SourceExpr{6 * c.R - 2 * c.pull_points(c.push_points(c.R)), 0, 0}));
  EXPECT_FALSE(s.div.is_zero());
  EXPECT_FALSE(s.galois_form.has_value());
  EXPECT_TRUE(shadow_pushforward(c).closed.is_zero());
}

TEST(ShadowProperty, RandomCoversPushforward) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 100; ++i) {
    auto c = covergen::random_cover(rng, {.galois = i % 2 == 0});
    auto s = shadow(c);
    EXPECT_EQ(c.source_degree(s.div), 0) << c.name;
    auto pf = shadow_pushforward(c);
    EXPECT_TRUE(pf.agree) << c.name << ": " << c.show(pf.closed) << " vs " << c.show(pf.term_by_term);
    TargetExpr expect{(static_cast<long>(c.d) * (2 * c.g_tgt - 2)) * c.push_points(c.R),
                      c.g_tgt == 1 ? 0 : -static_cast<long>(c.d) * c.deg_R()};
    EXPECT_EQ(pf.closed, expect) << c.name;
  }
}

TEST(ShadowProperty, GaloisIdentityOnRandomGaloisCovers) {
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto c = covergen::random_cover(rng, {.galois = true});
    auto r = galois_identity_check(c);
    EXPECT_TRUE(r.holds) << c.name << " " << r.witness;
  }
}

TEST(ShadowProperty, SpecialCases) {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto g0 = covergen::random_cover(rng, {.galois = i % 2 == 0, .fixed_g_tgt = 0});
    auto s0 = shadow(g0);
    EXPECT_EQ(s0.cls, ShadowClass::PullbackClass) << g0.name;

    auto g1 = covergen::random_cover(rng, {.galois = true, .fixed_g_tgt = 1});
    auto s1 = shadow(g1);
    EXPECT_TRUE(s1.div.is_zero()) << g1.name;
    EXPECT_EQ(s1.cls, ShadowClass::IdenticallyZero);
    EXPECT_TRUE(shadow_pushforward(g1).closed.is_zero());

    auto et = covergen::random_cover(rng, {.fixed_g_tgt = 1 + i % 3, .etale = true});
    EXPECT_TRUE(et.R.empty());
    EXPECT_EQ(shadow(et).cls, ShadowClass::IdenticallyZero);
    EXPECT_TRUE(shadow_pushforward(et).closed.is_zero());
    EXPECT_TRUE(galois_identity_check(et).holds);
  }
}

TEST(ShadowProperty, LinearInRamification) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    auto c = covergen::random_cover(rng);
    auto base = shadow(c).div;
    for (long k : {2L, 3L}) {
      auto scaled = c;
      scaled.R = k * c.R;
      scaled.consistency = false;
      EXPECT_EQ(shadow(scaled).div, k * base) << c.name;
    }
  }
}

TEST(ShadowProperty, ClassificationMatchesShape) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto c = covergen::random_cover(rng);
    auto s = shadow(c);
    if (s.cls == ShadowClass::IdenticallyZero) EXPECT_TRUE(s.div.is_zero());
    else EXPECT_FALSE(s.div.is_zero());
    if (s.cls == ShadowClass::PullbackClass) EXPECT_EQ(c.g_tgt, 0);
  }
}
