#pragma once

// Real-analytic Eisenstein series for SL(2, Z), its constant term, the
// truncation operator on the fundamental domain and the rank-one truncated
// inner product formula.
//
// E(z, s) = sum over coprime (c, d) modulo +-1 of y^s / |cz + d|^{2s},
// constant term y^s + c(s) y^{1-s} with c(s) = L(2s-1) / L(2s).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>

#include "eis/errors.hpp"
#include "eis/quadrature.hpp"
#include "eis/zeta.hpp"

namespace eis {

struct UpperHalfPoint {
  double x = 0;
  double y = 1;

  Complex z() const { return {x, y}; }
  /// Height log Im(z).
  double height() const { return std::log(y); }
  bool in_fundamental_domain(double slack = 1e-12) const {
    return std::abs(x) <= 0.5 + slack && x * x + y * y >= 1.0 - slack;
  }
};

/// Standard translate/invert loop into {|x| <= 1/2, |z| >= 1}.
inline UpperHalfPoint reduce_to_fundamental_domain(UpperHalfPoint p, int max_iterations = 10000) {
  if (!(p.y > 0)) throw DomainError("reduce: point not in the upper half plane");
  for (int it = 0; it < max_iterations; ++it) {
    p.x -= std::round(p.x);
    const double r2 = p.x * p.x + p.y * p.y;
    if (r2 >= 1.0) return p;
    p.x = -p.x / r2;
    p.y = p.y / r2;
  }
  throw NonConvergence("reduce: iteration cap reached");
}

struct EisensteinParams {
  Complex s{2.0, 0.0};
  /// Half-width of the directly summed window of each lattice row (0 means 8);
  /// raised to 4y where the row's binomial tail expansion needs it.
  double lattice_bound = 0.0;
  double tail_tolerance = 1e-13;
};

struct SeriesValue {
  Complex value;
  double tail_estimate = 0;  ///< size of the first omitted correction terms
};

struct TruncationParam {
  double T = 1.0;
  double y0() const { return std::exp(T); }
};

class EisensteinSeries {
 public:
  explicit EisensteinSeries(const ZetaEngine& engine = default_engine()) : engine_(&engine) {}

  /// c(s) = L(2s-1)/L(2s); through the substitution sigma = 2s - 1 this is L(sigma)/L(1+sigma).
  Complex scattering(Complex s) const {
    if (std::abs(s - 1.0) < engine_->config().pole_exclusion_radius) {
      throw PoleProximity("scattering coefficient: pole at s = 1");
    }
    return engine_->ratio_L(2.0 * s - 1.0);
  }

  Complex constant_term(double y, Complex s) const {
    return std::exp(s * std::log(y)) + scattering(s) * std::exp((1.0 - s) * std::log(y));
  }

  /// E(z, s) - constant term, for Re(s) > 1.
  SeriesValue nonconstant(UpperHalfPoint p, const EisensteinParams& prm) const {
    const Complex s = prm.s;
    if (!(s.real() > 1.0)) throw DomainError("eisenstein: requires Re(s) > 1");
    if (!(p.y > 0)) throw DomainError("eisenstein: requires y > 0");
    const double y = p.y;
    const double bound = std::max(prm.lattice_bound > 0 ? prm.lattice_bound : 8.0, 4.0 * y);
    const double q = std::exp(-2.0 * std::numbers::pi * y);
    const Complex prefactor = std::exp(s * std::log(y)) / engine_->zeta(2.0 * s);
    const double scale = std::abs(prefactor);
    if (2.0 * std::numbers::pi * y > -std::log(prm.tail_tolerance) + 40.0) {
      // Every row is below exp(-2 pi y) relative to y^{1-2 Re s}.
      return {0.0, scale * 8.0 * q * std::pow(y, 1.0 - 2.0 * s.real())};
    }
    const Complex full = engine_->gamma_fn(s - 0.5) / engine_->gamma_fn(s) * std::sqrt(std::numbers::pi) *
                         std::exp((1.0 - 2.0 * s) * std::log(y));
    const LatticeRow row(s, y, bound);

    // Rows decay like exp(-2 pi m y); stop once the row is below tolerance.
    const int m_max = 2 + static_cast<int>(std::ceil((-std::log(prm.tail_tolerance) + 4.0) / (2.0 * std::numbers::pi * y)));
    CompensatedSum sum;
    double em_tail = 0, last = 0;
    for (int m = 1; m <= m_max; ++m) {
      double tail = 0;
      const Complex dm = row.riemann_defect(p.x, 1.0 / m, full, tail);
      const Complex term = std::exp((1.0 - 2.0 * s) * std::log(static_cast<double>(m))) * dm;
      sum += term;
      em_tail += tail;
      last = std::abs(term);
    }
    return {prefactor * sum.value(), scale * (em_tail + last * q / (1.0 - q))};
  }

  SeriesValue eisenstein(UpperHalfPoint p, const EisensteinParams& prm) const {
    auto v = nonconstant(p, prm);
    v.value += constant_term(p.y, prm.s);
    return v;
  }

  /// Lambda^T E(z, s) on the fundamental domain.
  SeriesValue truncate(UpperHalfPoint p, const EisensteinParams& prm, TruncationParam t) const {
    if (!p.in_fundamental_domain()) throw DomainError("truncate: point is not in the fundamental domain");
    if (!(t.y0() > 1.0)) throw DomainError("truncate: e^T must exceed 1");
    return p.y > t.y0() ? nonconstant(p, prm) : eisenstein(p, prm);
  }

  /// <Lambda^T E(s1), Lambda^T E(s2)> from the truncated inner product formula:
  ///   Y^{s1+w-1}/(s1+w-1) + c(w) Y^{s1-w}/(s1-w) + c(s1) Y^{w-s1}/(w-s1)
  ///   + c(s1) c(w) Y^{1-s1-w}/(1-s1-w),   w = conj(s2), Y = e^T.
  /// Near s1 = w the middle pair is replaced by its limit 2 T c(s1) - c'(s1).
  Complex omega_rank1(Complex s1, Complex s2, TruncationParam t) const {
    if (!(s1.real() > 1.0) || !(s2.real() > 1.0)) throw DomainError("omega_rank1: requires Re(s1), Re(s2) > 1");
    const Complex w = std::conj(s2);
    const double T = t.T;
    auto ypow = [&](Complex e) { return std::exp(e * T); };
    const Complex cs = scattering(s1), cw = scattering(w);
    Complex value = ypow(s1 + w - 1.0) / (s1 + w - 1.0) + cs * cw * ypow(1.0 - s1 - w) / (1.0 - s1 - w);
    const Complex d = s1 - w;
    if (std::abs(d) > 1e-4) {
      value += cw * ypow(d) / d + cs * ypow(-d) / (-d);
    } else {
      const double radius = std::min(0.1, 0.5 * std::abs(s1 - 1.0));
      auto c = [&](Complex u) { return scattering(u); };
      const Complex c1 = circle_coefficient(c, s1, radius, 128, 1);
      const Complex c2 = 2.0 * circle_coefficient(c, s1, radius, 128, 2);
      value += 2.0 * T * cs - c1 + 0.5 * d * (c2 - 2.0 * T * c1);
    }
    return value;
  }

 private:
  // Sums over one row of the lattice, g(t) = (t^2 + y^2)^{-s}.
  class LatticeRow {
   public:
    LatticeRow(Complex s, double y, double bound) : s_(s), y_(y), bound_(bound) {
      // g(t) = sum_i binom(-s, i) y^{2i} t^{-2s-2i}, convergent for t > y.
      Complex c = 1.0;
      for (int i = 0; i < kSeriesTerms; ++i) {
        series_[static_cast<std::size_t>(i)] = c;
        c *= (-s - static_cast<double>(i)) / static_cast<double>(i + 1) * (y * y);
      }
      double fact = 1.0;
      for (int j = 1; j <= kEulerMaclaurin; ++j) {
        fact *= (2.0 * j - 1.0) * (2.0 * j);
        bern_[static_cast<std::size_t>(j - 1)] = boost::math::bernoulli_b2n<double>(j) / fact;
      }
    }

    Complex g(double t) const { return std::exp(-s_ * std::log(t * t + y_ * y_)); }

    /// r-th derivative of g at t >= 3y from the binomial series.
    Complex g_derivative(double t, int r) const {
      CompensatedSum sum;
      for (int i = 0; i < kSeriesTerms; ++i) {
        const Complex p = 2.0 * s_ + 2.0 * i;
        Complex falling = 1.0;
        for (int k = 0; k < r; ++k) falling *= -(p + static_cast<double>(k));
        sum += series_[static_cast<std::size_t>(i)] * falling * std::exp(-(p + static_cast<double>(r)) * std::log(t));
      }
      return sum.value();
    }

    /// int_a^infty g.
    Complex tail_integral(double a) const {
      CompensatedSum sum;
      for (int i = 0; i < kSeriesTerms; ++i) {
        const Complex p = 2.0 * s_ + 2.0 * i;
        sum += series_[static_cast<std::size_t>(i)] * std::exp((1.0 - p) * std::log(a)) / (p - 1.0);
      }
      return sum.value();
    }

    /// h sum_{k >= 0} g(a + k h) by Euler-Maclaurin; `last` gets the final correction size.
    Complex tail_sum(double a, double h, double& last) const {
      CompensatedSum sum;
      sum += tail_integral(a);
      sum += 0.5 * h * g(a);
      double hp = 1.0;
      for (int j = 1; j <= kEulerMaclaurin; ++j) {
        hp *= h * h;
        const Complex term = -bern_[static_cast<std::size_t>(j - 1)] * hp * g_derivative(a, 2 * j - 1);
        sum += term;
        last = std::abs(term);
      }
      return sum.value();
    }

    /// h sum_{l in Z} g(x + l h) - int_R g.
    Complex riemann_defect(double x, double h, Complex full, double& tail) const {
      const long l_right = static_cast<long>(std::ceil((bound_ - x) / h));
      const long l_left = static_cast<long>(std::floor((-bound_ - x) / h));
      CompensatedSum sum;
      for (long l = l_left + 1; l < l_right; ++l) sum += h * g(x + static_cast<double>(l) * h);
      double t1 = 0, t2 = 0;
      sum += tail_sum(x + static_cast<double>(l_right) * h, h, t1);
      sum += tail_sum(-(x + static_cast<double>(l_left) * h), h, t2);
      sum += -full;
      tail = t1 + t2;
      return sum.value();
    }

   private:
    static constexpr int kSeriesTerms = 24;
    static constexpr int kEulerMaclaurin = 8;
    Complex s_;
    double y_;
    double bound_;
    std::array<Complex, kSeriesTerms> series_{};
    std::array<double, kEulerMaclaurin> bern_{};
  };

  const ZetaEngine* engine_;
};

/// Brute-force coprime sum over |c|, |d| <= bound, modulo +-1. The returned
/// tail estimate compares the omitted lattice points with the integral of
/// |w|^{-2 Re s} outside the disc of radius bound * min(1, y) / 2 (one point per area y).
inline SeriesValue eisenstein_direct(UpperHalfPoint p, Complex s, long bound) {
  if (!(s.real() > 1.0)) throw DomainError("eisenstein_direct: requires Re(s) > 1");
  CompensatedSum sum;
  const Complex z = p.z();
  for (long c = 0; c <= bound; ++c) {
    for (long d = -bound; d <= bound; ++d) {
      if (c == 0 && d <= 0) continue;  // (0, 1) represents the class of (0, +-1)
      if (std::gcd(c, d) != 1) continue;
      const double n2 = std::norm(static_cast<double>(c) * z + static_cast<double>(d));
      sum += std::exp(s * std::log(p.y) - s * std::log(n2));
    }
  }
  const double sigma = s.real();
  const double radius = 0.5 * static_cast<double>(bound) * std::min(1.0, p.y);
  const double tail = std::pow(p.y, sigma) * std::numbers::pi / p.y * std::pow(radius, 2.0 - 2.0 * sigma) /
                      (2.0 * sigma - 2.0);
  return {sum.value(), tail};
}

/// Quadrature options for integrals over the fundamental domain.
struct QuadratureSpec {
  AdaptiveOptions outer{1e-10, 1e-9, 30, 2000};
  AdaptiveOptions inner{1e-11, 1e-10, 30, 2000};
  /// Heights where the integrand may be non-smooth (e.g. e^T for truncated series).
  std::vector<double> y_breaks;
};

/// int_D f conj(g) dx dy / y^2 over D = {|x| <= 1/2, |z| >= 1}. Each vertical
/// fibre is split at the breaks; the last piece [b, infty) is mapped to
/// u = b / y in (0, 1], where dx dy / y^2 = dx du / b.
inline QuadResult inner_product_fd(const std::function<Complex(UpperHalfPoint)>& f,
                                   const std::function<Complex(UpperHalfPoint)>& g, const QuadratureSpec& spec = {}) {
  auto fibre = [&](double x) {
    const double a = std::sqrt(1.0 - x * x);
    std::vector<double> cuts{a};
    for (double b : spec.y_breaks)
      if (b > a) cuts.push_back(b);
    std::sort(cuts.begin() + 1, cuts.end());
    auto integrand = [&](UpperHalfPoint p) { return f(p) * std::conj(g(p)); };
    CompensatedSum total;
    double err = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      auto r = integrate_adaptive([&](double y) { return integrand({x, y}) / (y * y); }, cuts[k], cuts[k + 1],
                                  spec.inner);
      total += r.value;
      err += r.error;
    }
    const double b = cuts.back();
    auto r = integrate_adaptive([&](double u) { return integrand({x, b / u}) / b; }, 0.0, 1.0, spec.inner);
    total += r.value;
    err += r.error;
    return std::pair{total.value(), err};
  };
  double inner_err = 0;
  auto outer = integrate_adaptive(
      [&](double x) {
        auto [v, e] = fibre(x);
        inner_err += e;
        return v;
      },
      -0.5, 0.5, spec.outer);
  outer.error += inner_err / static_cast<double>(std::max<long>(1, outer.evaluations));
  return outer;
}

}  // namespace eis
