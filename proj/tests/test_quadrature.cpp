#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eis/quadrature.hpp"

using namespace eis;

TEST(Adaptive, ExponentialOnUnitInterval) {
  const auto r = integrate_adaptive([](double x) { return Complex(std::exp(x)); }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), std::numbers::e - 1.0, 1e-13);
  EXPECT_EQ(r.value.imag(), 0.0);
  EXPECT_LE(r.error, 1e-12);
}

TEST(Adaptive, ComplexOscillatoryIntegrand) {
  // \int_0^pi x e^{ix} dx = -2 + i pi.
  const auto r = integrate_adaptive([](double x) { return x * std::polar(1.0, x); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.value.real(), -2.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), std::numbers::pi, 1e-12);
}

TEST(Adaptive, EndpointBranchPoint) {
  const auto r = integrate_adaptive([](double x) { return Complex(std::sqrt(x)); }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), 2.0 / 3.0, 1e-10);
}

TEST(Adaptive, ThrowsWhenPanelBudgetIsExhausted) {
  AdaptiveOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 0;
  opt.max_panels = 4;
  EXPECT_THROW(integrate_adaptive([](double x) { return Complex(std::sin(50.0 * x)); }, 0.0, 10.0, opt),
               NonConvergence);
}

TEST(Circle, ResidueOfSimplePole) {
  const auto r = circle_coefficient_converged([](Complex z) { return std::exp(z) / (z - 0.2); }, 0.0, 0.5, -1);
  EXPECT_NEAR(std::abs(r.value - std::exp(0.2)), 0.0, 1e-13);
}

TEST(Circle, DerivativeOfAnalyticFunction) {
  const Complex z0(0.3, -0.4);
  const Complex d = circle_coefficient([](Complex z) { return std::sin(z); }, z0, 0.1, 64, 1);
  EXPECT_NEAR(std::abs(d - std::cos(z0)), 0.0, 1e-13);
}

TEST(Circle, SecondTaylorCoefficient) {
  const Complex c2 = circle_coefficient([](Complex z) { return std::exp(2.0 * z); }, 0.0, 0.5, 64, 2);
  EXPECT_NEAR(std::abs(c2 - 2.0), 0.0, 1e-13);
}

TEST(Circle, ThrowsWhenNodesNeverStabilise) {
  // Essential singularity at the centre with a huge Laurent tail.
  EXPECT_THROW(circle_coefficient_converged([](Complex z) { return std::exp(40.0 / z); }, 0.0, 0.01, -1, 1e-14,
                                            16, 64),
               NonConvergence);
}

TEST(Trapezoid, GaussianIsSpectrallyAccurate) {
  const Complex v = trapezoid_line([](double t) { return Complex(std::exp(-t * t)); }, 10.0, 0.25);
  EXPECT_NEAR(v.real(), std::sqrt(std::numbers::pi), 1e-14);
}

TEST(CompensatedSum, RecoversSmallTermsAgainstLargeCancellation) {
  CompensatedSum s;
  s += 1e16;
  for (int k = 0; k < 1000; ++k) s += 1.0;
  s += -1e16;
  EXPECT_EQ(s.value().real(), 1000.0);
}
