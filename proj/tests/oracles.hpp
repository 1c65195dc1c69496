#pragma once

// Reference values computed independently of the library: 50-digit
// Euler-Maclaurin zeta, Stirling log-gamma, closed forms at integers and the
// Fourier expansion of the Eisenstein series.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using MpComplex = boost::multiprecision::cpp_complex_50;
using Complex = std::complex<double>;

inline const Real& pi() {
  static const Real p = boost::math::constants::pi<Real>();
  return p;
}

inline MpComplex to_mp(Complex z) { return MpComplex(Real(z.real()), Real(z.imag())); }
inline Complex to_double(const MpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// zeta(s) by Euler-Maclaurin with N = 60 and 30 Bernoulli corrections, 50 digits.
inline MpComplex zeta_mp(const MpComplex& s) {
  constexpr int N = 60;
  constexpr int K = 30;
  MpComplex sum(0);
  for (int n = 1; n < N; ++n) sum += exp(-s * log(MpComplex(n)));
  const MpComplex nn(N);
  const MpComplex npow = exp(-s * log(nn));
  sum += nn * npow / (s - MpComplex(1));
  sum += npow / MpComplex(2);
  MpComplex term = s * npow / nn;
  Real fact(1);
  for (int k = 1; k <= K; ++k) {
    fact *= Real((2 * k - 1) * (2 * k));
    sum += MpComplex(boost::math::bernoulli_b2n<Real>(k) / fact) * term;
    term *= (s + MpComplex(2 * k - 1)) * (s + MpComplex(2 * k)) / (nn * nn);
  }
  return sum;
}

/// log Gamma(z) by Stirling's series after shifting z by 40, 50 digits.
inline MpComplex log_gamma_mp(const MpComplex& z) {
  constexpr int shift = 40;
  MpComplex correction(0);
  MpComplex w = z;
  for (int k = 0; k < shift; ++k) {
    correction += log(w);
    w += MpComplex(1);
  }
  MpComplex sum = (w - MpComplex(Real(0.5))) * log(w) - w + MpComplex(log(2 * pi()) / 2);
  MpComplex wpow = w;
  const MpComplex w2 = w * w;
  for (int k = 1; k <= 25; ++k) {
    sum += MpComplex(boost::math::bernoulli_b2n<Real>(k) / Real((2 * k) * (2 * k - 1))) / wpow;
    wpow *= w2;
  }
  return sum - correction;
}

/// L(s) = pi^{-s/2} Gamma(s/2) zeta(s).
inline Complex completed_L(Complex s) {
  const MpComplex m = to_mp(s);
  const MpComplex half = m / MpComplex(2);
  return to_double(exp(-half * log(MpComplex(pi())) + log_gamma_mp(half)) * zeta_mp(m));
}

inline Complex zeta(Complex s) { return to_double(zeta_mp(to_mp(s))); }
inline Complex gamma(Complex s) { return to_double(exp(log_gamma_mp(to_mp(s)))); }

// Closed forms.
inline constexpr double kApery = 1.2020569031595942854;  // zeta(3)
inline double L2() { return std::numbers::pi / 6.0; }
inline double L3() { return kApery / (2.0 * std::numbers::pi); }
inline double L4() { return std::numbers::pi * std::numbers::pi / 90.0; }

/// sigma_{a}(n) = sum_{d | n} d^a.
inline double divisor_sigma(long n, double a) {
  double s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += std::pow(static_cast<double>(d), a);
  return s;
}

/// E(x + iy, s) for real s > 1 from its Fourier expansion
///   y^s + phi(s) y^{1-s} + (4 sqrt(y) / L(2s)) sum_{n >= 1} n^{s-1/2} sigma_{1-2s}(n) K_{s-1/2}(2 pi n y) cos(2 pi n x),
/// phi(s) = L(2s-1)/L(2s), with Bessel K from Boost.
inline double eisenstein_fourier(double x, double y, double s) {
  const double l2s = completed_L(2.0 * s).real();
  const double phi = completed_L(2.0 * s - 1.0).real() / l2s;
  double sum = 0;
  for (long n = 1; n <= 200; ++n) {
    const double arg = 2.0 * std::numbers::pi * n * y;
    if (arg > 700) break;
    sum += std::pow(static_cast<double>(n), s - 0.5) * divisor_sigma(n, 1.0 - 2.0 * s) *
           boost::math::cyl_bessel_k(s - 0.5, arg) * std::cos(2.0 * std::numbers::pi * n * x);
  }
  return std::pow(y, s) + phi * std::pow(y, 1.0 - s) + 4.0 * std::sqrt(y) / l2s * sum;
}

}  // namespace oracle
