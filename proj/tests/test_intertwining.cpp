#include <gtest/gtest.h>

#include <boost/rational.hpp>

#include "eis/intertwining.hpp"
#include "oracles.hpp"

using namespace eis;

namespace {

Complex oracle_ratio(Complex z) { return oracle::completed_L(z) / oracle::completed_L(1.0 + z); }

Weight generic_weight(int n, int seed) {
  Weight w = Weight::zero(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n - 1; ++k) w.coeffs[static_cast<std::size_t>(k)] = Complex(0.37 + 0.11 * (k + seed), 0.9 - 0.6 * k + 0.2 * seed);
  return w;
}

}  // namespace

TEST(ScalarIntertwiner, SimpleReflectionIsOneRatio) {
  const Weight lambda({Complex(0.4, 1.2), Complex(-0.3, 0.5)});
  for (int k = 1; k <= 2; ++k) {
    const Complex z = lambda.coeffs[static_cast<std::size_t>(k - 1)];
    const Complex m = m_scalar(WeylElement::simple_reflection(3, k), lambda);
    EXPECT_LT(std::abs(m - oracle_ratio(z)) / std::abs(oracle_ratio(z)), 1e-12);
  }
}

TEST(ScalarIntertwiner, LongestElementIsProductOverAllRoots) {
  const Weight lambda({Complex(0.4, 1.2), Complex(-0.3, 0.5)});
  const Complex expected =
      oracle_ratio(lambda.coeffs[0]) * oracle_ratio(lambda.coeffs[1]) * oracle_ratio(lambda.coeffs[0] + lambda.coeffs[1]);
  const Complex m = m_scalar(WeylElement::longest(3), lambda);
  EXPECT_LT(std::abs(m - expected) / std::abs(expected), 1e-12);
}

TEST(ScalarIntertwiner, IdentityIsOne) {
  EXPECT_EQ(m_scalar(WeylElement::identity(4), generic_weight(4, 0)), Complex(1.0));
}

TEST(ScalarIntertwiner, CocycleRelation) {
  for (int n = 2; n <= 4; ++n) {
    const Weight lambda = generic_weight(n, n);
    double worst = 0;
    for (const auto& s : WeylElement::all(n))
      for (const auto& t : WeylElement::all(n))
        worst = std::max(worst, cocycle_check(s, t, lambda) / std::max(1.0, std::abs(m_scalar(s * t, lambda))));
    EXPECT_LT(worst, 1e-12) << "GL(" << n << ")";
  }
}

TEST(ScalarIntertwiner, UnitaryOnImaginaryAxis) {
  for (const auto& w : WeylElement::all(4)) EXPECT_LT(unitarity_check(w, {0.3, -1.7, 4.2}), 1e-13) << w.to_string();
}

TEST(ScalarIntertwiner, InverseRelationAcrossTheFunctionalEquation) {
  // m(w^{-1}, w lambda) m(w, lambda) = 1.
  const Weight lambda = generic_weight(3, 1);
  for (const auto& w : WeylElement::all(3)) {
    const Complex prod = m_scalar(w.inverse(), w.act(lambda)) * m_scalar(w, lambda);
    EXPECT_NEAR(std::abs(prod - 1.0), 0.0, 1e-12) << w.to_string();
  }
}

TEST(ScalarIntertwiner, PoleErrorNamesTheRoot) {
  const Weight lambda({Complex(0.5), Complex(0.5)});  // <lambda, (e1-e3)^vee> = 1
  try {
    m_scalar(WeylElement::longest(3), lambda);
    FAIL() << "expected PoleProximity";
  } catch (const PoleProximity& e) {
    EXPECT_NE(std::string(e.what()).find("e1-e3"), std::string::npos) << e.what();
  }
}

TEST(ScalarIntertwiner, RankMismatchIsRejected) {
  EXPECT_THROW(m_scalar(WeylElement::longest(3), Weight({Complex(0.2)})), DomainError);
}

TEST(Su3LocalFactor, ExactValueAtThreeAndOne) {
  using Q = boost::rational<long>;
  const Q x2(1, 9);  // 3^{-2}
  const Q expected = (Q(1) - x2 / Q(9)) * (Q(1) + x2 / Q(3)) / ((Q(1) - x2) * (Q(1) + x2));
  EXPECT_EQ(expected, Q(28, 27));
  const double value = su3_local_factor(3, 1.0).real();
  EXPECT_NEAR(value, boost::rational_cast<double>(expected), 1e-15);
}

TEST(Su3LocalFactor, TendsToOneForLargePrimes) {
  EXPECT_NEAR(su3_local_factor(1000003, 1.0).real(), 1.0, 1e-11);
}

TEST(Su3LocalFactor, RejectsEvenAndCompositeModuli) {
  EXPECT_THROW(su3_local_factor(2, 1.0), DomainError);
  EXPECT_THROW(su3_local_factor(9, 1.0), DomainError);
  EXPECT_THROW(su3_local_factor(5, 0.0), DivisionByZero);
}
