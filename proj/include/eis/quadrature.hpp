#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

#include "eis/errors.hpp"

namespace eis {

using Complex = std::complex<double>;

/// Neumaier-compensated sum of complex terms; order-insensitive to O(eps).
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(sum_re_, comp_re_, x.real());
    add_part(sum_im_, comp_im_, x.imag());
  }
  CompensatedSum& operator+=(Complex x) {
    add(x);
    return *this;
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

struct QuadResult {
  Complex value;
  double error = 0;      ///< estimated absolute error
  long evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex kron = fc * kKronrodWeights[7];
  Complex gauss = fc * kGaussWeights[3];
  for (int k = 0; k < 7; ++k) {
    const double dx = h * kKronrodNodes[static_cast<std::size_t>(k)];
    const Complex f1 = f(c - dx), f2 = f(c + dx);
    kron += (f1 + f2) * kKronrodWeights[static_cast<std::size_t>(k)];
    if (k % 2 == 1) gauss += (f1 + f2) * kGaussWeights[static_cast<std::size_t>(k / 2)];
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss), depth};
}

}  // namespace detail

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  int max_panels = 4000;
};

/// Globally adaptive G7-K15 quadrature of a complex-valued integrand on [a, b].
/// The returned error is the sum of the per-panel |K15 - G7| estimates.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, const AdaptiveOptions& opt = {}) {
  std::priority_queue<detail::Panel> heap;
  heap.push(detail::gk15(f, a, b, 0));
  long evals = 15;
  while (true) {
    CompensatedSum total;
    double err = 0;
    auto copy = heap;
    while (!copy.empty()) {
      total += copy.top().value;
      err += copy.top().error;
      copy.pop();
    }
    const Complex v = total.value();
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(v))) return {v, err, evals};
    if (static_cast<int>(heap.size()) >= opt.max_panels || heap.top().depth >= opt.max_depth) {
      throw NonConvergence("adaptive quadrature: tolerance not reached (estimate " + std::to_string(err) + ")");
    }
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push(detail::gk15(f, worst.a, mid, worst.depth + 1));
    heap.push(detail::gk15(f, mid, worst.b, worst.depth + 1));
    evals += 30;
  }
}

/// Laurent coefficient (1/2 pi i) \oint f(w) (w - center)^{-k-1} dw over the
/// circle |w - center| = radius, trapezoidal rule on `nodes` points. k = -1
/// gives the residue, k = 1 the derivative of an analytic f.
template <class F>
Complex circle_coefficient(const F& f, Complex center, double radius, int nodes, int k) {
  CompensatedSum sum;
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / nodes;
    const Complex unit = std::polar(1.0, theta);
    sum += f(center + radius * unit) * std::pow(unit, -k);
  }
  return sum.value() * std::pow(radius, -k) / static_cast<double>(nodes);
}

struct ContourResult {
  Complex value;
  double change = 0;  ///< |I_N - I_{N/2}| at the accepted node count
  int nodes = 0;
};

/// Circle quadrature with node doubling until two successive values agree to tol.
template <class F>
ContourResult circle_coefficient_converged(const F& f, Complex center, double radius, int k,
                                          double tol = 1e-12, int min_nodes = 64, int max_nodes = 8192) {
  Complex prev = circle_coefficient(f, center, radius, min_nodes, k);
  for (int n = 2 * min_nodes; n <= max_nodes; n *= 2) {
    const Complex cur = circle_coefficient(f, center, radius, n, k);
    const double change = std::abs(cur - prev);
    if (change <= tol * std::max(1.0, std::abs(cur))) return {cur, change, n};
    prev = cur;
  }
  throw NonConvergence("circle quadrature did not stabilise up to " + std::to_string(max_nodes) + " nodes");
}

/// h * sum_k f(k h) over |k h| <= half_width.
template <class F>
Complex trapezoid_line(const F& f, double half_width, double step) {
  const long m = static_cast<long>(std::floor(half_width / step));
  CompensatedSum sum;
  for (long k = -m; k <= m; ++k) sum += f(static_cast<double>(k) * step);
  return sum.value() * step;
}

}  // namespace eis
