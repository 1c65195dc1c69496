#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eis/spectral.hpp"
#include "oracles.hpp"

using namespace eis;

namespace {

constexpr double kStep = 0.1;

Polynomial var(std::size_t k) { return Polynomial::variable(2, k); }
Polynomial cst(Complex c) { return Polynomial::constant(2, c); }

// <x, x> for the GL(3) trace form in fundamental-weight coordinates.
Complex gl3_norm2(Complex x1, Complex x2) { return (2.0 * x1 * x1 + 2.0 * x1 * x2 + 2.0 * x2 * x2) / 3.0; }

}  // namespace

TEST(Polynomial, EvaluationAndArithmetic) {
  const Polynomial p = var(1) * var(2) + 2.0 * var(1) + cst(-3.0);
  EXPECT_EQ(p(std::vector<Complex>{2.0, 5.0}), Complex(11.0));
  const Polynomial a = Polynomial::affine(1.0, {2.0, -1.0});
  EXPECT_EQ(a(std::vector<Complex>{3.0, 4.0}), Complex(3.0));
  EXPECT_EQ((a * a)(std::vector<Complex>{3.0, 4.0}), Complex(9.0));
}

TEST(TestFunction, GaussianTimesPolynomialAndStar) {
  const Polynomial q = var(1) + cst(Complex(0.0, 1.0));
  const PaleyWienerGaussian phi(3, 0.7, q);
  const Complex x1(0.3, 1.1), x2(-0.4, 0.2);
  EXPECT_NEAR(std::abs(phi(std::vector<Complex>{x1, x2}) - (x1 + Complex(0, 1)) * std::exp(0.7 * gl3_norm2(x1, x2))), 0.0, 1e-14);
  const Complex expected_star = std::conj(phi(std::vector<Complex>{-std::conj(x1), -std::conj(x2)}));
  EXPECT_EQ(phi.star(std::vector<Complex>{x1, x2}), expected_star);
  EXPECT_THROW(PaleyWienerGaussian(3, -1.0, q), DomainError);
  EXPECT_THROW(PaleyWienerGaussian(2, 1.0, q), DomainError);
}

TEST(TestFunction, SeededGenerationIsDeterministic) {
  const auto a = random_test_function(3, 42), b = random_test_function(3, 42), c = random_test_function(3, 43);
  EXPECT_EQ(a.beta(), b.beta());
  EXPECT_NE(a.beta(), c.beta());
  EXPECT_GE(a.beta(), 0.4);
  EXPECT_LE(a.beta(), 0.8);
  const std::vector<Complex> x = {Complex(0.2, 0.3), Complex(-0.1, 0.7)};
  EXPECT_EQ(a(x), b(x));
}

TEST(Gl2Spectral, ContourIndependenceAboveThePole) {
  const PaleyWienerGaussian phi(2, 0.6, Polynomial::affine(1.0, {0.25}));
  const auto a = shifted_norm_gl2(phi, 1.5, kStep), b = shifted_norm_gl2(phi, 2.5, kStep);
  EXPECT_LT(std::abs(a.value - b.value) / std::abs(a.value), 1e-11);
}

TEST(Gl2Spectral, ShiftedNormIsAxisPlusResidue) {
  const double beta = 0.6;
  const PaleyWienerGaussian phi(2, beta, Polynomial::affine(1.0, {0.25}));
  const auto shifted = shifted_norm_gl2(phi, 1.5, kStep);
  const auto dec = decomposed_norm_gl2(phi, kStep);
  // |Phi(1)|^2 / L(2), <rho, rho> = 1/2.
  const double residue = std::pow(1.25 * std::exp(0.5 * beta), 2) / oracle::L2();
  EXPECT_NEAR(std::abs(dec.residue - residue), 0.0, 1e-13);
  EXPECT_LT(std::abs(shifted.value - (dec.axis.value + residue)) / std::abs(shifted.value), 1e-11);
  EXPECT_GT(dec.axis.value.real(), 0.0);
}

TEST(Gl2Spectral, LargeBetaIsDominatedByTheResidue) {
  const double beta = 4.0;
  const PaleyWienerGaussian phi(2, beta, Polynomial::constant(1, 1.0));
  const double leading = std::exp(beta) / oracle::L2();
  EXPECT_NEAR(shifted_norm_gl2(phi, 1.5, kStep).value.real() / leading, 1.0, 0.05);
}

TEST(Gl2Spectral, PolynomialVanishingAtRhoRemovesTheResidue) {
  const PaleyWienerGaussian phi(2, 0.5, Polynomial::affine(-1.0, {1.0}));
  const auto dec = decomposed_norm_gl2(phi, kStep);
  EXPECT_EQ(dec.residue, Complex(0.0));
  EXPECT_LT(std::abs(shifted_norm_gl2(phi, 1.5, kStep).value - dec.axis.value), 1e-12);
}

TEST(Gl3Spectral, ShiftedNormAgainstDirectTrapezoid) {
  const double beta = 0.9;
  const Polynomial q = Polynomial::affine(1.0, {0.2, -0.15});
  const PaleyWienerGaussian phi(3, beta, q);
  const auto spec = ContourSpec::for_beta({1.5, 1.4}, beta, kStep);
  const auto terms = shifted_norm_gl3(phi, spec);

  auto f = [&](Complex x1, Complex x2) { return q(std::vector<Complex>{x1, x2}) * std::exp(beta * gl3_norm2(x1, x2)); };
  const long M = spec.points();
  for (std::size_t e = 0; e < terms.elements.size(); ++e) {
    const auto& w = terms.elements[e];
    Complex sum = 0;
    for (long k = -M; k <= M; ++k) {
      for (long l = -M; l <= M; ++l) {
        const Weight lam({Complex(1.5, k * kStep), Complex(1.4, l * kStep)});
        const Weight wl = w.act(lam);
        const Complex star = std::conj(f(-std::conj(wl.coeffs[0]), -std::conj(wl.coeffs[1])));
        sum += m_scalar(w, lam) * f(lam.coeffs[0], lam.coeffs[1]) * star;
      }
    }
    sum *= std::pow(kStep / (2.0 * std::numbers::pi), 2);
    EXPECT_LT(std::abs(terms.terms[e].value - sum), 1e-12 * std::max(1.0, std::abs(sum))) << w.to_string();
  }
  EXPECT_THROW(shifted_norm_gl3(phi, ContourSpec{{0.9, 1.5}, 4.0, kStep}), DomainError);
}

TEST(Gl3Spectral, ContourIndependenceInTheConvergenceCone) {
  const auto phi = random_test_function(3, 7);
  const auto a = shifted_norm_gl3(phi, ContourSpec::for_beta({1.5, 1.5}, phi.beta(), kStep));
  const auto b = shifted_norm_gl3(phi, ContourSpec::for_beta({1.8, 1.6}, phi.beta(), kStep));
  EXPECT_LT(std::abs(a.total.value - b.total.value) / std::abs(a.total.value), 1e-10);
}

TEST(Gl3Spectral, ContributionFormsAgree) {
  const auto phi = random_test_function(3, 42);
  const double hw = 8.0 / std::sqrt(phi.beta());
  const auto a = contribution_A(phi, hw, kStep);
  EXPECT_LT(std::abs(a.direct.value - a.symmetrized.value) / std::abs(a.direct.value), 1e-10);
  EXPECT_GE(a.symmetrized.value.real(), 0.0);
  const auto b = contribution_B(phi, hw, kStep);
  EXPECT_LT(std::abs(b.direct.value - b.factored.value) / std::abs(b.direct.value), 1e-8);
  EXPECT_GE(b.factored.value.real(), 0.0);
  EXPECT_LT(std::abs(b.direct.value.imag()), 1e-10 * std::abs(b.direct.value));
}

TEST(Gl3Spectral, PointResidueClosedForm) {
  const PaleyWienerGaussian phi(3, 0.5, cst(1.0));
  const double expected = std::exp(2.0) / (oracle::L2() * oracle::L3());  // Phi(rho) = e^{beta <rho, rho>} = e
  EXPECT_NEAR(contribution_C(phi).real() / expected, 1.0, 1e-14);
}

TEST(Gl3Spectral, ParsevalIdentityWithUnitConstants) {
  const auto phi = random_test_function(3, 42);
  const auto r = parseval_check_gl3(phi, ContourSpec::for_beta({1.5, 1.5}, phi.beta(), kStep));
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_LT(std::abs(r.kappa_B_estimate - 1.0), 1e-8);
  EXPECT_LT(std::abs(r.kappa_C_estimate - 1.0), 1e-8);
  EXPECT_LE(r.residual * std::abs(r.shifted), r.quadrature_error);
}

TEST(Gl3Spectral, VanishingOnAllResidueLinesLeavesOnlyA) {
  // (c1 - 1)(c2 - 1)(c1 + c2 - 1) vanishes on the three singular lines and at rho.
  // The Weyl terms cancel to a small total, so the comparison is scaled by their size.
  const Polynomial q = (var(1) + cst(-1.0)) * (var(2) + cst(-1.0)) * Polynomial::affine(-1.0, {1.0, 1.0});
  const PaleyWienerGaussian phi(3, 0.6, q);
  const auto spec = ContourSpec::for_beta({1.5, 1.5}, 0.6, kStep);
  const auto p = parseval_parts(phi, spec);
  const auto terms = shifted_norm_gl3(phi, spec);
  double scale = 0;
  for (const auto& t : terms.terms) scale += std::abs(t.value);
  EXPECT_EQ(p.C, Complex(0.0));
  EXPECT_LT(std::abs(p.B), 1e-14 * std::abs(p.A));
  EXPECT_LT(std::abs(p.shifted - p.A), 1e-12 * scale);
  EXPECT_LT(std::abs(p.A - p.A_sym), 1e-12 * scale);
}

TEST(Gl3Spectral, ZeroTestFunctionGivesZero) {
  const PaleyWienerGaussian phi(3, 0.5, Polynomial(2));
  const auto p = parseval_parts(phi, ContourSpec::for_beta({1.5, 1.5}, 0.5, 0.2));
  EXPECT_EQ(p.shifted, Complex(0.0));
  EXPECT_EQ(p.A, Complex(0.0));
  EXPECT_EQ(p.B, Complex(0.0));
  EXPECT_EQ(p.C, Complex(0.0));
}
