#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "eis/roots.hpp"

using namespace eis;

namespace {

// Block sizes of the Levi of p, left to right.
std::vector<int> composition(const StandardParabolic& p) {
  std::vector<int> sizes;
  const auto b = p.blocks();
  for (int id : b) {
    if (static_cast<std::size_t>(id) >= sizes.size()) sizes.push_back(0);
    ++sizes[static_cast<std::size_t>(id)];
  }
  return sizes;
}

long factorial(long k) { return k <= 1 ? 1 : k * factorial(k - 1); }

long multiplicity_product(const std::vector<int>& sizes) {
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  long prod = 1;
  for (const auto& [s, m] : mult) prod *= factorial(m);
  return prod;
}

}  // namespace

TEST(RootDatum, Gl3GramMatrixIsTraceForm) {
  const RootDatum d(3);
  const auto& g = d.gram_fw();
  EXPECT_EQ(g[0][0], Rational(2, 3));
  EXPECT_EQ(g[0][1], Rational(1, 3));
  EXPECT_EQ(g[1][1], Rational(2, 3));
  EXPECT_EQ(d.inner(d.rho(), d.rho()), Rational(2));
}

TEST(RootDatum, Gl2RhoHasSquaredLengthOneHalf) {
  const RootDatum d(2);
  EXPECT_EQ(d.inner(d.rho(), d.rho()), Rational(1, 2));
}

TEST(RootDatum, SimpleRootsPairWithCorootsThroughCartanMatrix) {
  const RootDatum d(4);
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      EXPECT_EQ(pairing(d.simple_root(a), b), Rational(d.cartan()[a - 1][b - 1]));
}

TEST(RootDatum, RootHeightsOfA3) {
  const RootDatum d(4);
  std::vector<int> heights;
  for (const auto& a : d.positive_roots()) heights.push_back(a.height());
  std::sort(heights.begin(), heights.end());
  EXPECT_EQ(heights, (std::vector<int>{1, 1, 1, 2, 2, 3}));
  for (const auto& a : d.positive_roots()) EXPECT_EQ(a.pair(d.rho()), Rational(a.height()));
}

TEST(RootDatum, RejectsGl1) { EXPECT_THROW(RootDatum(1), DomainError); }

TEST(WeylGroup, OrderAndLongestElement) {
  for (int n = 2; n <= 5; ++n) {
    const auto all = WeylElement::all(n);
    EXPECT_EQ(static_cast<long>(all.size()), factorial(n));
    int max_len = 0;
    for (const auto& w : all) max_len = std::max(max_len, w.length());
    EXPECT_EQ(max_len, n * (n - 1) / 2);
    EXPECT_EQ(WeylElement::longest(n).length(), max_len);
  }
}

TEST(WeylGroup, InversionSetSizeIsLength) {
  for (const auto& w : WeylElement::all(4)) EXPECT_EQ(static_cast<int>(w.inversion_set().size()), w.length());
}

TEST(WeylGroup, SimpleReflectionNegatesItsRoot) {
  const RootDatum d(3);
  for (int k = 1; k <= 2; ++k) {
    const auto s = WeylElement::simple_reflection(3, k);
    EXPECT_EQ(s.act(d.simple_root(static_cast<std::size_t>(k))), -d.simple_root(static_cast<std::size_t>(k)));
    EXPECT_EQ(s.length(), 1);
    EXPECT_EQ(s.sign(), -1);
  }
}

TEST(WeylGroup, ActionIsAHomomorphismAndPreservesTheForm) {
  const RootDatum d(3);
  const RationalWeight lambda({Rational(3, 2), Rational(-5, 7)});
  const RationalWeight mu({Rational(1, 3), Rational(2)});
  for (const auto& s : WeylElement::all(3)) {
    for (const auto& t : WeylElement::all(3)) EXPECT_EQ((s * t).act(lambda), s.act(t.act(lambda)));
    EXPECT_EQ(d.inner(s.act(lambda), s.act(mu)), d.inner(lambda, mu));
    EXPECT_EQ((s * s.inverse()), WeylElement::identity(3));
  }
}

TEST(WeylGroup, LongestElementSendsRhoToMinusRho) {
  for (int n = 2; n <= 5; ++n) {
    const RootDatum d(n);
    EXPECT_EQ(WeylElement::longest(n).act(d.rho()), -d.rho());
  }
}

TEST(WeylGroup, FromWordMultipliesLeftToRight) {
  const auto w = WeylElement::from_word(3, {1, 2});
  EXPECT_EQ(w, WeylElement::simple_reflection(3, 1) * WeylElement::simple_reflection(3, 2));
  EXPECT_EQ(w(1), 2);
  EXPECT_EQ(w(2), 3);
  EXPECT_EQ(w(3), 1);
}

TEST(WeylGroup, RejectsNonPermutations) { EXPECT_THROW(WeylElement({0, 0, 1}), DomainError); }

TEST(Parabolics, CountAndLabels) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(standard_parabolics(RootDatum(n)).size(), std::size_t{1} << (n - 1));
  EXPECT_EQ(StandardParabolic::minimal(3).label(), "P0");
  EXPECT_EQ(StandardParabolic::group(3).label(), "G");
  EXPECT_EQ(StandardParabolic::from_levi(4, {1, 3}).label(), "P{1,3}");
  EXPECT_THROW(StandardParabolic::from_levi(3, {3}), DomainError);
}

TEST(Parabolics, ChamberCountIsFactorialOfBlockCount) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : standard_parabolics(RootDatum(n))) {
      const long r = static_cast<long>(composition(p).size());
      EXPECT_EQ(chamber_count(p), factorial(r)) << p.label();
    }
  }
}

TEST(Parabolics, SelfTransportersPermuteEqualBlocks) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : standard_parabolics(RootDatum(n))) {
      EXPECT_EQ(static_cast<long>(transporters(p, p).size()), multiplicity_product(composition(p))) << p.label();
    }
  }
}

TEST(Parabolics, TransportersExistExactlyBetweenRearrangedCompositions) {
  const auto ps = standard_parabolics(RootDatum(4));
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      auto a = composition(p), b = composition(q);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(!transporters(p, q).empty(), a == b) << p.label() << " -> " << q.label();
    }
  }
}

TEST(Parabolics, AssociationClassesMatchPartitions) {
  const std::vector<std::size_t> partitions = {0, 1, 2, 3, 5, 7, 11};
  for (int n = 2; n <= 6; ++n) {
    const auto classes = association_classes(RootDatum(n));
    EXPECT_EQ(classes.size(), partitions[static_cast<std::size_t>(n)]);
    for (const auto& c : classes) {
      EXPECT_TRUE(c.counting_identity_holds());
      const auto sizes = composition(c.members.front());
      const long r = static_cast<long>(sizes.size());
      EXPECT_EQ(c.size(), factorial(r) / multiplicity_product(sizes));
    }
  }
}

TEST(Truncation, TermsAndSigns) {
  for (int n = 2; n <= 6; ++n) {
    const auto terms = truncation_terms(RootDatum(n));
    ASSERT_EQ(terms.size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(terms.front().parabolic.is_group());
    EXPECT_EQ(terms.front().sign, 1);
    EXPECT_TRUE(terms.back().parabolic.is_minimal());
    EXPECT_EQ(terms.back().sign, (n - 1) % 2 == 0 ? 1 : -1);
    int total = 0;
    for (const auto& t : terms) total += t.sign;
    EXPECT_EQ(total, 0);
  }
}

TEST(Truncation, TauHatTestsFundamentalWeightsOutsideTheLevi) {
  const auto p0 = StandardParabolic::minimal(3);
  EXPECT_TRUE(tau_hat(p0, {0.5, 0.2}));
  EXPECT_FALSE(tau_hat(p0, {0.5, -0.2}));
  EXPECT_FALSE(tau_hat(p0, {0.0, 1.0}));
  const auto p1 = StandardParabolic::from_levi(3, {1});
  EXPECT_TRUE(tau_hat(p1, {-3.0, 0.1}));
  EXPECT_FALSE(tau_hat(p1, {3.0, -0.1}));
  EXPECT_TRUE(tau_hat(StandardParabolic::group(3), {0.0, 0.0}));
  EXPECT_THROW(tau_hat(p0, {1.0}), DomainError);
}
