#pragma once

// Complex evaluation of zeta, Gamma and the completed zeta function
//   L(s) = pi^{-s/2} Gamma(s/2) zeta(s),
// with simple poles at s = 0 (residue -1) and s = 1 (residue 1) and L(s) = L(1-s).

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>

#include "eis/errors.hpp"
#include "eis/quadrature.hpp"

namespace eis {

struct EvaluatorConfig {
  /// Base number of directly summed terms; the cutoff grows with |s|.
  int euler_maclaurin_terms = 16;
  /// Number of Bernoulli correction terms (B_2 .. B_{2 * bernoulli_order}).
  int bernoulli_order = 16;
  double target_abs_error = 1e-13;
  /// Evaluations closer than this to a pole raise PoleProximity.
  double pole_exclusion_radius = 1e-9;
  /// ratio_L switches to its Taylor series inside this disc around 0.
  double removable_radius = 0.05;
};

namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

class ZetaEngine {
 public:
  explicit ZetaEngine(EvaluatorConfig cfg = {}) : cfg_(cfg) {
    bernoulli_.reserve(static_cast<std::size_t>(cfg_.bernoulli_order));
    double fact = 1.0;
    for (int k = 1; k <= cfg_.bernoulli_order; ++k) {
      fact *= (2.0 * k - 1.0) * (2.0 * k);
      bernoulli_.push_back(boost::math::bernoulli_b2n<double>(k) / fact);
    }
    init_ratio_series();
  }

  const EvaluatorConfig& config() const { return cfg_; }

  Complex zeta(Complex s) const {
    if (std::abs(s - 1.0) < cfg_.pole_exclusion_radius) {
      throw PoleProximity("zeta: s = " + detail::format_complex(s) + " is at the pole s = 1");
    }
    if (s.real() < -1.0) {
      // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
      const Complex one_minus = 1.0 - s;
      return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(std::numbers::pi)) *
             std::sin(std::numbers::pi * s / 2.0) * gamma_fn(one_minus) * zeta_em(one_minus);
    }
    return zeta_em(s);
  }

  /// log Gamma(s) up to a multiple of 2 pi i; requires Re(s) >= 1/2.
  Complex log_gamma_right(Complex s) const {
    const Complex z = s - 1.0;
    Complex x = detail::kLanczos[0];
    for (std::size_t i = 1; i < detail::kLanczos.size(); ++i) x += detail::kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + detail::kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
  }

  Complex gamma_fn(Complex s) const {
    if (s.real() < 0.5) {
      const double nearest = std::round(s.real());
      if (nearest <= 0.0 && std::abs(s - nearest) < cfg_.pole_exclusion_radius) {
        throw PoleProximity("gamma: s = " + detail::format_complex(s) + " is at a pole");
      }
      return std::numbers::pi / (std::sin(std::numbers::pi * s) * std::exp(log_gamma_right(1.0 - s)));
    }
    return std::exp(log_gamma_right(s));
  }

  /// L(s) = pi^{-s/2} Gamma(s/2) zeta(s); for Re(s) < -1 evaluated as L(1-s).
  Complex completed_L(Complex s) const {
    if (std::abs(s) < cfg_.pole_exclusion_radius || std::abs(s - 1.0) < cfg_.pole_exclusion_radius) {
      throw PoleProximity("completed_L: s = " + detail::format_complex(s) + " is at a pole");
    }
    if (s.real() < -1.0) return completed_L(1.0 - s);
    const Complex half = s / 2.0;
    Complex gamma_part;
    if (half.real() >= 0.5) {
      gamma_part = std::exp(log_gamma_right(half) - half * std::log(std::numbers::pi));
    } else {
      gamma_part = std::exp(-half * std::log(std::numbers::pi)) * gamma_fn(half);
    }
    return gamma_part * zeta_em(s);
  }

  /// Local factor 1 / (1 - p^{-s}).
  Complex local_L(long p, Complex s) const {
    if (!detail::is_prime(p)) throw DomainError("local_L: p = " + std::to_string(p) + " is not prime");
    const Complex x = std::exp(-s * std::log(static_cast<double>(p)));
    const Complex den = 1.0 - x;
    if (std::abs(den) < 1e-300 || std::abs(den) < cfg_.pole_exclusion_radius * 1e-3) {
      throw DivisionByZero("local_L: p^{-s} = 1");
    }
    return 1.0 / den;
  }

  /// L(z) / L(1+z), with the removable singularity at z = 0 (value -1)
  /// handled by a Taylor series.
  Complex ratio_L(Complex z) const {
    if (std::abs(z - 1.0) < cfg_.pole_exclusion_radius) {
      throw PoleProximity("ratio_L: z = " + detail::format_complex(z) + " is at the pole z = 1");
    }
    if (std::abs(z) < cfg_.removable_radius) {
      Complex acc = 0;
      for (auto it = ratio_series_.rbegin(); it != ratio_series_.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    if (std::abs(z + 1.0) < cfg_.pole_exclusion_radius) return 0.0;  // 1/L(1+z) vanishes at z = -1
    return completed_L(z) / completed_L(1.0 + z);
  }

 private:
  Complex zeta_em(Complex s) const {
    const int cutoff = cfg_.euler_maclaurin_terms + static_cast<int>(std::ceil(0.6 * std::abs(s)));
    CompensatedSum sum;
    for (int n = 1; n < cutoff; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double big_n = cutoff;
    const double log_n = std::log(big_n);
    const Complex n_pow = std::exp(-s * log_n);  // N^{-s}
    sum += big_n * n_pow / (s - 1.0);
    sum += 0.5 * n_pow;
    Complex term = s * n_pow / big_n;  // s(s+1)...(s+2k-2) N^{-s-2k+1}
    for (std::size_t k = 1; k <= bernoulli_.size(); ++k) {
      sum += bernoulli_[k - 1] * term;
      const double kk = static_cast<double>(k);
      term *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk) / (big_n * big_n);
    }
    return sum.value();
  }

  void init_ratio_series() {
    constexpr int kNodes = 64;
    constexpr double kRadius = 0.5;  // ratio_L is analytic on |z| < 1
    std::vector<Complex> samples(kNodes);
    for (int j = 0; j < kNodes; ++j) {
      const Complex z = std::polar(kRadius, 2.0 * std::numbers::pi * j / kNodes);
      samples[static_cast<std::size_t>(j)] = completed_L(z) / completed_L(1.0 + z);
    }
    ratio_series_.assign(40, 0.0);
    for (int k = 0; k < 40; ++k) {
      CompensatedSum c;
      for (int j = 0; j < kNodes; ++j) {
        c += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / kNodes);
      }
      ratio_series_[static_cast<std::size_t>(k)] = c.value() / (kNodes * std::pow(kRadius, k));
    }
  }

  EvaluatorConfig cfg_;
  std::vector<double> bernoulli_;       // B_{2k} / (2k)!
  std::vector<Complex> ratio_series_;  // Taylor coefficients of ratio_L at 0
};

/// Shared engine with the default configuration; immutable after construction.
inline const ZetaEngine& default_engine() {
  static const ZetaEngine engine;
  return engine;
}

/// (1/2 pi i) \oint f over |s - s0| = radius, doubling nodes from 64 until stable.
inline Complex residue_at(const std::function<Complex(Complex)>& f, Complex s0, double radius, double tol = 1e-12) {
  return circle_coefficient_converged(f, s0, radius, -1, tol).value;
}

}  // namespace eis
