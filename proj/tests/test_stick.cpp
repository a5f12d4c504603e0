#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stickel/random.hpp"
#include "stickel/stickelberger.hpp"

using namespace stickel;

namespace {

TablePtr table_of(const std::string& name) {
  return std::make_shared<const CharacterTable>(character_table(oracle::group(name)));
}

Rational q(long a, long b = 1) { return ratio(a, b); }

VirtualCharacter irr(const TablePtr& t, int i) { return VirtualCharacter::irreducible(t, i); }

VirtualCharacter random_character(const TablePtr& t, SeededRng& rng) {
  std::vector<long> c;
  for (int i = 0; i < t->size(); ++i) c.push_back(rng.uniform(-5, 5));
  return VirtualCharacter::from_integers(t, c);
}

LocalElement w(int64_t q, const Rational& a) { return LocalElement::monomial(q, a); }

}  // namespace

TEST(Pairing, TrivialCharacterPairsToZero) {
  const auto t = table_of("S4");
  for (int g = 0; g < t->group()->order(); ++g) EXPECT_EQ(stick_pair(irr(t, 0), g), 0);
}

TEST(Pairing, C2Generator) {
  const auto t = table_of("C2");
  EXPECT_EQ(stick_pair(irr(t, 1), 1), q(1, 2));
}

TEST(Pairing, S3Standard) {
  const auto t = table_of("S3");
  const FiniteGroup& g = *t->group();
  EXPECT_EQ(stick_pair(irr(t, 2), oracle::find(g, "(1,2,3)")), 1);
  EXPECT_EQ(stick_pair(irr(t, 2), oracle::find(g, "(1,2)")), q(1, 2));
}

TEST(Pairing, Linear) {
  const auto t = table_of("A4");
  SeededRng rng(2);
  for (int g = 0; g < 12; ++g) {
    const auto a = random_character(t, rng), b = random_character(t, rng);
    EXPECT_EQ(stick_pair(a + q(3, 2) * b, g), stick_pair(a, g) + q(3, 2) * stick_pair(b, g));
  }
}

TEST(Xi, SmallOrders) {
  EXPECT_EQ(xi_element(1), std::vector<Rational>{q(0)});
  EXPECT_EQ(xi_element(2), (std::vector<Rational>{q(0), q(1, 2)}));
  const auto x3 = xi_element(3);
  EXPECT_EQ(x3, (std::vector<Rational>{q(0), q(1, 3), q(2, 3)}));
  EXPECT_EQ(x3[0] + x3[1] + x3[2], 1);
}

TEST(Xi, InducedDegree) {
  for (const char* name : {"S3", "D4", "A4", "S4", "C12"}) {
    const auto t = table_of(name);
    const FiniteGroup& g = *t->group();
    for (int s = 0; s < g.order(); ++s) {
      const long m = g.element_order(s), n = g.order();
      EXPECT_EQ(induce_from_cyclic(xi_element(m), s, t).degree(), ratio(n * (m - 1), 2 * m)) << name;
    }
  }
}

TEST(Pairing, ViaInduction) {
  const auto s3 = table_of("S3");
  EXPECT_EQ(stick_pair_via_induction(irr(s3, 2), oracle::find(*s3->group(), "(1,2,3)")), 1);
  for (int i = 0; i < s3->size(); ++i) EXPECT_EQ(stick_pair_via_induction(irr(s3, i), 0), 0);

  const auto d4 = table_of("D4");
  const FiniteGroup& g = *d4->group();
  EXPECT_EQ(stick_pair_via_induction(irr(d4, 4), oracle::find(g, "r^2")), 1);
  EXPECT_EQ(stick_pair_via_induction(irr(d4, 4), oracle::find(g, "s")), q(1, 2));
}

TEST(Theta, TrivialCharacterMapsToZero) {
  const auto th = theta_map(irr(table_of("S4"), 0));
  for (const auto& c : th.coefficients()) EXPECT_EQ(c, 0);
}

TEST(Theta, S3Standard) {
  const auto t = table_of("S3");
  const FiniteGroup& g = *t->group();
  const auto th = theta_map(irr(t, 2));
  for (int x = 0; x < g.order(); ++x) {
    const int ord = g.element_order(x);
    EXPECT_EQ(th.coefficient(x), ord == 3 ? q(1) : ord == 2 ? q(1, 2) : q(0));
  }
  EXPECT_FALSE(th.is_integral());
  EXPECT_FALSE(AGLattice(t).contains(irr(t, 2)));
  const auto th2 = theta_map(q(2) * irr(t, 2));
  EXPECT_TRUE(th2.is_integral());
  EXPECT_TRUE(AGLattice(t).contains(q(2) * irr(t, 2)));
}

TEST(Theta, CentralityWitness) {
  const auto g = oracle::group("S3");
  std::vector<Rational> c(6, q(0));
  c[oracle::find(*g, "(1,2)")] = 1;
  const GroupRingQ x(g, c);
  EXPECT_FALSE(x.is_central());
  EXPECT_TRUE(x.centrality_witness().has_value());
  EXPECT_THROW(x.class_coefficients(), DomainError);
}

TEST(Fingerprint, ConjugatesAgree) {
  const auto t = table_of("S4");
  const FiniteGroup& g = *t->group();
  for (int s = 0; s < g.order(); ++s)
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(class_fingerprint(t, s), class_fingerprint(t, g.conjugate(s, x)));
}

TEST(Fingerprint, D4CentralInvolutionVersusReflection) {
  const auto t = table_of("D4");
  const FiniteGroup& g = *t->group();
  const auto z = class_fingerprint(t, oracle::find(g, "r^2"));
  const auto r = class_fingerprint(t, oracle::find(g, "s"));
  EXPECT_NE(z, r);
  EXPECT_EQ(z[4], 1);
  EXPECT_EQ(r[4], q(1, 2));
}

TEST(Fingerprint, MatchesRestrictionOracle) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    for (const auto& cls : t->group()->classes()) {
      const auto fp = class_fingerprint(t, cls.representative);
      for (int i = 0; i < t->size(); ++i) EXPECT_EQ(fp[i], oracle::pairing(*t, i, cls.representative)) << name;
    }
  }
}

// Classes related by a Galois twist that fixes every irreducible (up to
// permutation of rows) share a fingerprint; the collisions in the catalog are
// exactly the rotation classes of D5 and the two 5-cycle classes of A5.
TEST(Fingerprint, CollisionsAcrossCatalog) {
  std::vector<std::string> colliding;
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    const FiniteGroup& g = *t->group();
    for (int a = 0; a < g.num_classes(); ++a) {
      for (int b = a + 1; b < g.num_classes(); ++b) {
        const int sa = g.classes()[a].representative, sb = g.classes()[b].representative;
        const bool same = class_fingerprint(t, sa) == class_fingerprint(t, sb);
        // independent: compare Ind Xi numerically on every element
        bool ind_same = true;
        std::vector<double> xa, xb;
        for (const auto& x : xi_element(g.element_order(sa))) xa.push_back(x.get_d());
        for (const auto& x : xi_element(g.element_order(sb))) xb.push_back(x.get_d());
        for (int x = 0; x < g.order(); ++x)
          ind_same &= oracle::near(oracle::induced_value(g, sa, xa, x), oracle::induced_value(g, sb, xb, x), 1e-8);
        EXPECT_EQ(same, ind_same) << name << " " << g.label(sa) << " " << g.label(sb);
        if (same) colliding.push_back(name + ":" + g.label(sa) + "|" + g.label(sb));
      }
    }
  }
  EXPECT_EQ(colliding, (std::vector<std::string>{"D5:r|r^2", "A5:(1,4,2,5,3)|(1,5,2,4,3)"}));
}

TEST(GaloisTwist, IdentityTwist) {
  const auto t = table_of("A4");
  for (int i = 0; i < t->size(); ++i) {
    for (int g = 0; g < 12; ++g) {
      const auto [l, r] = galois_twist_pair_check(irr(t, i), g, 1);
      EXPECT_EQ(l, stick_pair(irr(t, i), g));
      EXPECT_EQ(r, l);
    }
  }
}

TEST(GaloisTwist, C3) {
  const auto t = table_of("C3");
  ASSERT_EQ(t->value(1, 1), Cyclotomic::zeta(3));
  const auto [l, r] = galois_twist_pair_check(irr(t, 1), 1, 2);
  EXPECT_EQ(l, q(2, 3));
  EXPECT_EQ(r, q(2, 3));
}

TEST(GaloisTwist, RationalCharacterIsFixed) {
  const auto t = table_of("S3");
  for (int g = 0; g < 6; ++g) {
    for (int64_t k : {1, 5, 7, 11}) {
      const auto [l, r] = galois_twist_pair_check(irr(t, 2), g, k);
      EXPECT_EQ(l, stick_pair(irr(t, 2), t->group()->pow(g, k)));
      EXPECT_EQ(l, r);
    }
  }
  EXPECT_THROW(galois_twist_pair_check(irr(t, 2), 1, 3), DomainError);
}

TEST(FElement, IdentityGivesConstantOne) {
  for (const char* name : {"S3", "D4", "A4"}) {
    const auto g = oracle::group(name);
    for (int64_t qq : {2, 3, 5, 7}) {
      const auto f = f_element(g, qq, 0);
      for (const auto& v : f.values()) EXPECT_TRUE(v.is_one()) << name;
    }
  }
}

TEST(FElement, S3ThreeCycle) {
  const auto g = oracle::group("S3");
  const int s = oracle::find(*g, "(1,2,3)");
  const auto f = f_element(g, 2, s);
  for (int c = 0; c < g->num_classes(); ++c) {
    if (c == g->class_of(s)) {
      EXPECT_EQ(f(c), w(2, 1));
    } else {
      EXPECT_TRUE(f(c).is_one());
    }
  }
  EXPECT_THROW(f_element(g, 2, oracle::find(*g, "(1,2)")), DomainError);
}

TEST(FElement, OrbitConditionEnforced) {
  const auto g = oracle::group("C5");
  std::vector<LocalElement> v(5, LocalElement(2, Cyclotomic(1L)));
  v[1] = w(2, 1);
  EXPECT_THROW(LambdaFunction(g, 2, v), DomainError);
  for (int c = 1; c < 5; ++c) v[c] = w(2, 1);
  EXPECT_NO_THROW(LambdaFunction(g, 2, v));
}

TEST(ThetaTranspose, ConstantOne) {
  const auto t = table_of("S3");
  const AGLattice l(t);
  const LambdaFunction one(t->group(), 2, std::vector<LocalElement>(3, LocalElement(2, Cyclotomic(1L))));
  for (const auto& row : l.basis()) EXPECT_TRUE(theta_transpose(one, row, l).is_one());
}

TEST(ThetaTranspose, S3DoubleStandard) {
  const auto t = table_of("S3");
  const AGLattice l(t);
  const auto f = f_element(t->group(), 2, oracle::find(*t->group(), "(1,2,3)"));
  EXPECT_EQ(theta_transpose(f, IntVector{0, 0, 2}, l), w(2, 2));
  // Theta(2 sign) lives on the transpositions only
  EXPECT_TRUE(theta_transpose(f, IntVector{0, 2, 0}, l).is_one());
  EXPECT_TRUE(theta_transpose(f, IntVector{1, 0, 0}, l).is_one());
  EXPECT_THROW(theta_transpose(f, IntVector{0, 0, 1}, l), DomainError);
}

// Properties over the catalog.

TEST(StickProperty, PairingRoutesAgree) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    for (int i = 0; i < t->size(); ++i)
      for (int s = 0; s < t->group()->order(); ++s)
        EXPECT_EQ(stick_pair(irr(t, i), s), stick_pair_via_induction(irr(t, i), s)) << name;
  }
}

TEST(StickProperty, ThetaIsCentral) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    SeededRng rng(0, "central-" + name);
    for (int i = 0; i < t->size(); ++i) EXPECT_TRUE(theta_map(irr(t, i)).is_central()) << name;
    for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(theta_map(random_character(t, rng)).is_central());
  }
}

TEST(StickProperty, IntegralityCriterion) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    const AGLattice l(t);
    SeededRng rng(0, "integral-" + name);
    for (int trial = 0; trial < 200; ++trial) {
      const auto chi = random_character(t, rng);
      const bool integral = theta_map(chi).is_integral();
      EXPECT_EQ(integral, det_character(chi).is_trivial()) << name;
      EXPECT_EQ(integral, l.contains(chi)) << name;
    }
  }
}

TEST(StickProperty, GaloisEquivariance) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    const FiniteGroup& g = *t->group();
    const int e = g.exponent();
    for (int64_t k = 1; k < e; ++k) {
      if (gcd(k, e) != 1) continue;
      for (int i = 0; i < t->size(); ++i) {
        for (int x = 0; x < g.order(); ++x) {
          const auto [l, r] = galois_twist_pair_check(irr(t, i), x, k);
          EXPECT_EQ(l, r) << name << " k=" << k;
        }
      }
    }
  }
}

TEST(StickProperty, DetPairingLink) {
  for (const auto& name : verification_catalog()) {
    const auto t = table_of(name);
    const FiniteGroup& g = *t->group();
    for (int i = 0; i < t->size(); ++i) {
      const auto d = det_character(irr(t, i));
      for (int x = 0; x < g.order(); ++x) {
        const long m = g.element_order(x);
        const Rational p = stick_pair(irr(t, i), x) * m;
        ASSERT_TRUE(is_integral(p));
        const long k = mod(to_integer(p).get_si(), m);
        EXPECT_EQ(d.value(g.class_of(x)), Cyclotomic::zeta(m, k)) << name;
      }
    }
  }
}
