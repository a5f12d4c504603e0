#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stickel/tame.hpp"

using namespace stickel;

namespace {

Rational q(long a, long b = 1) { return ratio(a, b); }

bool passed(const Factorisation& f, const std::string& name) {
  for (const auto& c : f.checks) {
    if (c.name == name) return c.passed;
  }
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Tame, QuotientTwoThreeTwoIsS3) {
  const TameQuotient t(2, 3, 2);
  const FiniteGroup g = t.to_group();
  EXPECT_EQ(g.order(), 6);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_TRUE(are_isomorphic(g, builtin_group("S3")));
}

TEST(Tame, TrivialActionGivesDirectProduct) {
  const TameQuotient t(7, 3, 4);  // 7 = 1 (mod 3)
  const FiniteGroup g = t.to_group();
  EXPECT_TRUE(g.is_abelian());
  EXPECT_TRUE(are_isomorphic(g, cyclic_group(12)));
  const TameQuotient u(5, 2, 2);
  // C2 x C2
  EXPECT_TRUE(are_isomorphic(u.to_group(), FiniteGroup::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}})));
}

TEST(Tame, SigmaAndPhiDoNotCommute) {
  const TameQuotient t(2, 3, 2);
  EXPECT_NE(t.mul(t.index(1, 0), t.index(0, 1)), t.mul(t.index(0, 1), t.index(1, 0)));
  const TameQuotient u(4, 3, 1);
  EXPECT_EQ(u.mul(u.index(1, 0), u.index(0, 1)), u.mul(u.index(0, 1), u.index(1, 0)));
}

TEST(Tame, WordLaw) {
  const TameQuotient t(2, 7, 3);
  for (int m1 = 0; m1 < 7; ++m1)
    for (int n1 = 0; n1 < 3; ++n1)
      for (int m2 = 0; m2 < 7; ++m2)
        for (int n2 = 0; n2 < 3; ++n2) {
          const int qn1 = 1 << n1;  // 2^n1 mod 7, n1 < 3
          const int w = t.mul(t.index(m1, n1), t.index(m2, n2));
          EXPECT_EQ(t.sigma_exponent(w), (m1 + m2 * qn1) % 7);
          EXPECT_EQ(t.phi_exponent(w), (n1 + n2) % 3);
        }
}

TEST(Tame, RelationHolds) {
  for (auto [qq, M, N] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {2, 7, 3}, {3, 8, 2}, {5, 12, 2}}) {
    const TameQuotient t(qq, M, N);
    const int sigma = t.index(1, 0), phi = t.index(0, 1);
    const FiniteGroup g = t.to_group();
    EXPECT_EQ(g.mul(g.mul(phi, sigma), g.inv(phi)), g.pow(sigma, qq));
  }
}

TEST(Tame, CongruenceRequired) {
  EXPECT_THROW(TameQuotient(2, 3, 1), DomainError);
  EXPECT_THROW(TameQuotient(2, 4, 2), DomainError);
  EXPECT_THROW(TameQuotient(1, 3, 2), DomainError);
}

TEST(Tame, FactoriseS3) {
  const FiniteGroup g = builtin_group("S3");
  const TameQuotient t(2, 3, 2);
  const Factorisation f = factorise_hom(t, g, oracle::find(g, "(1,2,3)"), oracle::find(g, "(1,2)"));
  EXPECT_TRUE(f.all_passed());
  for (const auto& c : f.checks) {
    if (c.name == "factorisation") {
      EXPECT_EQ(c.cases, 6);
    } else {
      EXPECT_EQ(c.cases, 36) << c.name;
    }
  }
}

TEST(Tame, UntwistedCase) {
  const FiniteGroup g = builtin_group("C6");
  const TameQuotient t(7, 6, 1);
  const Factorisation f = factorise_hom(t, g, 1, 0);
  EXPECT_TRUE(f.all_passed());
  EXPECT_EQ(f.pi, f.pi_r);
}

TEST(Tame, UnramifiedCase) {
  const FiniteGroup g = builtin_group("C4");
  const TameQuotient t(3, 1, 4);
  const Factorisation f = factorise_hom(t, g, 0, 1);
  EXPECT_TRUE(f.all_passed());
  EXPECT_EQ(f.pi, f.pi_nr);
  EXPECT_TRUE(passed(f, "unramified_homomorphism"));
}

TEST(Tame, RelationViolationNamesPair) {
  const FiniteGroup g = builtin_group("S3");
  const TameQuotient t(2, 3, 2);
  try {
    factorise_hom(t, g, oracle::find(g, "(1,2,3)"), oracle::find(g, "(1,2,3)"));
    FAIL() << "accepted t s t^-1 != s^q";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2,3)"), std::string::npos);
  }
  EXPECT_THROW(factorise_hom(t, g, oracle::find(g, "(1,2)"), 0), DomainError);
}

TEST(Disc, Values) {
  const FiniteGroup g = builtin_group("S3");
  EXPECT_EQ(disc_valuation(g, 0), 0);
  EXPECT_EQ(disc_valuation(g, oracle::find(g, "(1,2,3)")), 4);
  EXPECT_EQ(disc_valuation(g, oracle::find(g, "(1,2)")), 3);
}

// Properties.

TEST(TameProperty, AllAdmissiblePairsOverCatalog) {
  for (const auto& name : verification_catalog()) {
    const FiniteGroup g = builtin_group(name);
    for (int64_t qq : {2, 3}) {
      for (int s = 0; s < g.order(); ++s) {
        const int M = g.element_order(s);
        if (gcd(M, qq) != 1) continue;
        const int N = M == 1 ? 1 : static_cast<int>(multiplicative_order(qq, M));
        const TameQuotient t(qq, M, N);
        for (int tt = 0; tt < g.order(); ++tt) {
          if (oracle::power(g, tt, N) != 0) continue;
          if (g.mul(g.mul(tt, s), g.inv(tt)) != oracle::power(g, s, qq)) continue;
          const Factorisation f = factorise_hom(t, g, s, tt);
          EXPECT_TRUE(f.all_passed()) << name << " s=" << g.label(s) << " t=" << g.label(tt);
          for (int wd = 0; wd < t.order(); ++wd) {
            EXPECT_EQ(f.pi[wd], g.mul(oracle::power(g, s, t.sigma_exponent(wd)), oracle::power(g, tt, t.phi_exponent(wd))));
          }
        }
      }
    }
  }
}

TEST(TameProperty, DiscValuationIsIntegral) {
  for (const auto& name : verification_catalog()) {
    const FiniteGroup g = builtin_group(name);
    for (int s = 0; s < g.order(); ++s) {
      const Rational d = disc_valuation(g, s);
      EXPECT_TRUE(is_integral(d));
      EXPECT_EQ(d == 0, s == 0);
      // |G| minus the number of cosets of <s>
      EXPECT_EQ(d, q(g.order() - g.order() / oracle::order_of(g, s)));
    }
  }
}
