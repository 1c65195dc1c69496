#pragma once

// Contour-shift decomposition of the scalar product of pseudo-Eisenstein
// series with K-invariant data, for GL(2) and GL(3). Integrals run over
// vertical planes in the coordinates z_k = <lambda, alpha_k^vee> with measure
// (1/2 pi) per real dimension and use the trapezoidal rule, which converges
// geometrically for these Gaussian integrands. Each quadrature also reports
// the difference to the same sum on the grid of twice the step.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "eis/errors.hpp"
#include "eis/gl3.hpp"
#include "eis/intertwining.hpp"
#include "eis/quadrature.hpp"
#include "eis/roots.hpp"
#include "eis/zeta.hpp"

namespace eis {

/// Polynomial with complex coefficients in the weight coordinates.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, Complex c) {
    Polynomial p(vars);
    p.add_term(std::vector<int>(vars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t vars, std::size_t k) {
    Polynomial p(vars);
    std::vector<int> e(vars, 0);
    e.at(k - 1) = 1;
    p.add_term(e, 1.0);
    return p;
  }
  /// c0 + sum_k a_k x_k.
  static Polynomial affine(Complex c0, const std::vector<Complex>& a) {
    Polynomial p = constant(a.size(), c0);
    for (std::size_t k = 0; k < a.size(); ++k) p = p + a[k] * variable(a.size(), k + 1);
    return p;
  }

  std::size_t vars() const { return vars_; }
  const std::map<std::vector<int>, Complex>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, Complex c) {
    if (exponents.size() != vars_) throw DomainError("polynomial: exponent vector has wrong length");
    terms_[exponents] += c;
  }

  Complex operator()(const std::vector<Complex>& x) const {
    Complex sum = 0;
    for (const auto& [e, c] : terms_) {
      Complex t = c;
      for (std::size_t k = 0; k < vars_; ++k)
        for (int r = 0; r < e[k]; ++r) t *= x[k];
      sum += t;
    }
    return sum;
  }
  Complex operator()(const Weight& w) const { return (*this)(w.coeffs); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend Polynomial operator*(Complex s, Polynomial a) {
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.vars_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

 private:
  std::size_t vars_ = 0;
  std::map<std::vector<int>, Complex> terms_;
};

/// Phi(lambda) = Q(lambda) exp(beta <lambda, lambda>).
class PaleyWienerGaussian {
 public:
  PaleyWienerGaussian(int n, double beta, Polynomial q) : datum_(n), beta_(beta), q_(std::move(q)) {
    if (!(beta > 0)) throw DomainError("PaleyWienerGaussian: beta must be positive");
    if (q_.vars() != datum_.rank()) throw DomainError("PaleyWienerGaussian: polynomial has wrong arity");
    const auto& g = datum_.gram_fw();
    gram_.assign(g.size(), std::vector<double>(g.size()));
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) gram_[a][b] = to_double(g[a][b]);
  }

  const RootDatum& datum() const { return datum_; }
  double beta() const { return beta_; }
  const Polynomial& polynomial() const { return q_; }

  Complex inner(const std::vector<Complex>& x) const {
    Complex s = 0;
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b) s += gram_[a][b] * x[a] * x[b];
    return s;
  }

  Complex operator()(const std::vector<Complex>& x) const { return q_(x) * std::exp(beta_ * inner(x)); }
  Complex operator()(const Weight& w) const { return (*this)(w.coeffs); }

  /// Phi*(lambda) = conj(Phi(-conj(lambda))), holomorphic in lambda.
  Complex star(const std::vector<Complex>& x) const {
    std::vector<Complex> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = -std::conj(x[k]);
    return std::conj((*this)(y));
  }
  Complex star(const Weight& w) const { return star(w.coeffs); }

  /// Same Gaussian, polynomial multiplied by `factor`.
  PaleyWienerGaussian times(const Polynomial& factor) const { return {datum_.n(), beta_, q_ * factor}; }

 private:
  RootDatum datum_;
  double beta_;
  Polynomial q_;
  std::vector<std::vector<double>> gram_;
};

/// Seeded test function: beta in [0.4, 0.8], Q = 1 + linear + (GL(3)) c1 c2 term
/// with real coefficients in [-0.3, 0.3].
inline PaleyWienerGaussian random_test_function(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double beta = 0.4 + 0.4 * unit(rng);
  const std::size_t r = static_cast<std::size_t>(n - 1);
  std::vector<Complex> a(r);
  for (auto& c : a) c = -0.3 + 0.6 * unit(rng);
  Polynomial q = Polynomial::affine(1.0, a);
  if (r >= 2) {
    std::vector<int> e(r, 0);
    e[0] = e[1] = 1;
    q.add_term(e, -0.3 + 0.6 * unit(rng));
  }
  return {n, beta, q};
}

/// Vertical contour lambda_0 + i R^r, sampled on a square grid.
struct ContourSpec {
  std::vector<double> base;
  double half_width = 8.0;
  double step = 0.05;

  /// half_width = 8 / sqrt(beta) puts the Gaussian tail below e^{-40} of its peak.
  static ContourSpec for_beta(std::vector<double> base, double beta, double step = 0.05) {
    return {std::move(base), 8.0 / std::sqrt(beta), step};
  }
  long points() const { return static_cast<long>(std::floor(half_width / step)); }
};

/// A trapezoidal sum together with the same sum on every other node.
struct GridValue {
  Complex value;
  double error = 0;  ///< |value - value on the doubled step|
};

namespace detail {

// Accumulates h^d/(2 pi)^d sum f over the fine grid and the coarse subgrid.
class GridSum {
 public:
  GridSum(double step, int dims) : weight_(std::pow(step / (2.0 * std::numbers::pi), dims)), dims_(dims) {}
  void add(Complex v, bool coarse) {
    fine_ += v;
    if (coarse) coarse_ += v;
  }
  GridValue result() const {
    const Complex f = fine_.value() * weight_;
    const Complex c = coarse_.value() * weight_ * std::pow(2.0, dims_);
    return {f, std::abs(f - c)};
  }

 private:
  double weight_;
  int dims_;
  CompensatedSum fine_, coarse_;
};

// Integer matrix of w acting on fundamental-weight coordinates.
inline std::vector<std::vector<double>> action_matrix(const WeylElement& w, const RootDatum& d) {
  const std::size_t r = d.rank();
  std::vector<std::vector<double>> m(r, std::vector<double>(r));
  for (std::size_t k = 0; k < r; ++k) {
    const auto img = w.act(d.fundamental_weight(k + 1));
    for (std::size_t a = 0; a < r; ++a) m[a][k] = to_double(img.coeffs[a]);
  }
  return m;
}

inline std::vector<Complex> apply(const std::vector<std::vector<double>>& m, const std::vector<Complex>& x) {
  std::vector<Complex> y(x.size(), 0.0);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) y[a] += m[a][b] * x[b];
  return y;
}

// Weyl elements of GL(3) with their action matrices and, for each element, the
// indices (0: alpha_1, 1: alpha_2, 2: e_1 - e_3) of its inversions.
struct Gl3Elements {
  std::vector<WeylElement> w;
  std::vector<std::vector<std::vector<double>>> act;
  std::vector<std::vector<int>> inversions;

  Gl3Elements() {
    const RootDatum d(3);
    for (const auto& e : WeylElement::all(3)) {
      w.push_back(e);
      act.push_back(action_matrix(e, d));
      std::vector<int> idx;
      for (const auto& a : e.inversion_set()) idx.push_back(a.i == 1 && a.j == 2 ? 0 : a.i == 2 ? 1 : 2);
      inversions.push_back(idx);
    }
  }
};

// Visits the grid lambda = base + i (y1, y2) with the values m(w, lambda) for
// all six Weyl elements. L-ratios are precomputed along the three lines.
template <class F>
void gl3_plane(const ContourSpec& spec, const ZetaEngine& engine, const Gl3Elements& els, F&& visit) {
  if (spec.base.size() != 2) throw DomainError("GL(3) contour needs two base coordinates");
  const long M = spec.points();
  const double h = spec.step;
  const double c1 = spec.base[0], c2 = spec.base[1];
  std::vector<Complex> r1(static_cast<std::size_t>(2 * M + 1)), r2(r1.size()), r3(static_cast<std::size_t>(4 * M + 1));
  for (long k = -M; k <= M; ++k) {
    r1[static_cast<std::size_t>(k + M)] = engine.ratio_L(Complex(c1, k * h));
    r2[static_cast<std::size_t>(k + M)] = engine.ratio_L(Complex(c2, k * h));
  }
  for (long k = -2 * M; k <= 2 * M; ++k) r3[static_cast<std::size_t>(k + 2 * M)] = engine.ratio_L(Complex(c1 + c2, k * h));
  std::array<Complex, 6> m{};
  for (long k = -M; k <= M; ++k) {
    for (long l = -M; l <= M; ++l) {
      const std::array<Complex, 3> r = {r1[static_cast<std::size_t>(k + M)], r2[static_cast<std::size_t>(l + M)],
                                        r3[static_cast<std::size_t>(k + l + 2 * M)]};
      for (std::size_t e = 0; e < 6; ++e) {
        Complex v = 1.0;
        for (int idx : els.inversions[e]) v *= r[static_cast<std::size_t>(idx)];
        m[e] = v;
      }
      const std::vector<Complex> lambda = {Complex(c1, k * h), Complex(c2, l * h)};
      visit(lambda, m, k % 2 == 0 && l % 2 == 0);
    }
  }
}

inline const Gl3Elements& gl3_elements() {
  static const Gl3Elements els;
  return els;
}

}  // namespace detail

// ---------------------------------------------------------------- GL(2)

/// int_{Re sigma = sigma0} Phi(sigma) Phi*(sigma) + m(s, sigma) Phi(sigma) Phi*(-sigma), measure |d sigma| / 2 pi.
inline GridValue shifted_norm_gl2(const PaleyWienerGaussian& phi, double sigma0, double step = 0.05,
                                  const ZetaEngine& engine = default_engine()) {
  if (phi.datum().n() != 2) throw DomainError("shifted_norm_gl2: test function must live on GL(2)");
  const ContourSpec spec = ContourSpec::for_beta({sigma0}, phi.beta(), step);
  detail::GridSum sum(spec.step, 1);
  const long M = spec.points();
  for (long k = -M; k <= M; ++k) {
    const Complex s(sigma0, k * spec.step);
    const Complex f = phi(std::vector<Complex>{s});
    sum.add(f * phi.star(std::vector<Complex>{s}) + engine.ratio_L(s) * f * phi.star(std::vector<Complex>{-s}), k % 2 == 0);
  }
  return sum.result();
}

struct Gl2Decomposition {
  GridValue axis;
  Complex residue;  ///< |Phi(rho)|^2 / L(2)
};

inline Gl2Decomposition decomposed_norm_gl2(const PaleyWienerGaussian& phi, double step = 0.05,
                                            const ZetaEngine& engine = default_engine()) {
  Gl2Decomposition out;
  out.axis = shifted_norm_gl2(phi, 0.0, step, engine);
  out.residue = std::norm(phi(std::vector<Complex>{1.0})) / engine.completed_L(2.0);
  return out;
}

// ---------------------------------------------------------------- GL(3)

struct PlaneTerms {
  std::vector<WeylElement> elements;
  std::vector<GridValue> terms;  ///< per Weyl element
  GridValue total;
};

/// sum_w int_{lambda_0 + i R^2} m(w, lambda) Phi(lambda) Phi*(w lambda), measure (1/2 pi)^2 dy.
inline PlaneTerms shifted_norm_gl3(const PaleyWienerGaussian& phi, const ContourSpec& spec,
                                   const ZetaEngine& engine = default_engine()) {
  if (phi.datum().n() != 3) throw DomainError("shifted_norm_gl3: test function must live on GL(3)");
  if (spec.base.size() != 2 || !(spec.base[0] > 1.0) || !(spec.base[1] > 1.0)) {
    throw DomainError("shifted_norm_gl3: base point must satisfy c1 > 1 and c2 > 1");
  }
  const auto& els = detail::gl3_elements();
  std::vector<detail::GridSum> sums(6, detail::GridSum(spec.step, 2));
  detail::GridSum total(spec.step, 2);
  detail::gl3_plane(spec, engine, els, [&](const std::vector<Complex>& x, const std::array<Complex, 6>& m, bool coarse) {
    const Complex f = phi(x);
    Complex all = 0;
    for (std::size_t e = 0; e < 6; ++e) {
      const Complex v = m[e] * f * phi.star(detail::apply(els.act[e], x));
      sums[e].add(v, coarse);
      all += v;
    }
    total.add(all, coarse);
  });
  PlaneTerms out;
  out.elements = els.w;
  for (const auto& s : sums) out.terms.push_back(s.result());
  out.total = total.result();
  return out;
}

struct ContributionA {
  GridValue direct;       ///< sum_w int m(w, lambda) Phi(lambda) conj(Phi(w lambda))
  GridValue symmetrized;  ///< (1/6) int |sum_w m(w, lambda)^{-1} Phi(w lambda)|^2
};

/// Continuous contribution over the imaginary plane, computed two ways.
inline ContributionA contribution_A(const PaleyWienerGaussian& phi, double half_width, double step = 0.05,
                                    const ZetaEngine& engine = default_engine()) {
  const auto& els = detail::gl3_elements();
  detail::GridSum direct(step, 2), sym(step, 2);
  const ContourSpec spec{{0.0, 0.0}, half_width, step};
  detail::gl3_plane(spec, engine, els, [&](const std::vector<Complex>& x, const std::array<Complex, 6>& m, bool coarse) {
    const Complex f = phi(x);
    Complex d = 0, F = 0;
    for (std::size_t e = 0; e < 6; ++e) {
      const Complex fw = phi(detail::apply(els.act[e], x));
      d += m[e] * f * std::conj(fw);
      F += fw / m[e];
    }
    direct.add(d, coarse);
    sym.add(std::norm(F) / 6.0, coarse);
  });
  return {direct.result(), sym.result()};
}

struct ContributionB {
  GridValue direct;    ///< (1/L(2)) sum_ij int n_ij Phi_i conj(Phi_j)
  GridValue factored;  ///< (1/L(2)) int |sum_i n_i1 Phi_i|^2
};

/// Residues along the three singular lines, Phi_i(z) = Phi(delta_i + z e_i), z in i R.
inline ContributionB contribution_B(const PaleyWienerGaussian& phi, double half_width, double step = 0.05,
                                    const ZetaEngine& engine = default_engine()) {
  const Complex l2 = engine.completed_L(2.0);
  detail::GridSum direct(step, 1), factored(step, 1);
  const long M = static_cast<long>(std::floor(half_width / step));
  for (long k = -M; k <= M; ++k) {
    const Complex z(0.0, k * step);
    const auto n = gl3::n_matrix(z, engine);
    std::array<Complex, 3> p{};
    for (int i = 1; i <= 3; ++i) p[static_cast<std::size_t>(i - 1)] = phi(gl3::lambda_line(i, z));
    Complex d = 0, f = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) d += n[i][j] * p[i] * std::conj(p[j]);
      f += n[i][0] * p[i];
    }
    direct.add(d / l2, k % 2 == 0);
    factored.add(std::norm(f) / l2, k % 2 == 0);
  }
  return {direct.result(), factored.result()};
}

/// Point residue at rho: |Phi(rho)|^2 / (L(2) L(3)).
inline Complex contribution_C(const PaleyWienerGaussian& phi, const ZetaEngine& engine = default_engine()) {
  const Complex rho_value = phi(std::vector<Complex>{1.0, 1.0});
  return std::norm(rho_value) / (engine.completed_L(2.0) * engine.completed_L(3.0));
}

struct SpectralReport {
  std::vector<double> base;
  double beta = 0;
  double step = 0;
  double half_width = 0;
  Complex shifted;
  Complex A, A_symmetrized, B, B_factored, C;
  /// Constants multiplying B and C from the residue calculus in these coordinates.
  double kappa_B = 1.0, kappa_C = 1.0;
  /// The same constants estimated from the data: kappa_B from Phi (rho^vee - 2), which kills C.
  Complex kappa_B_estimate, kappa_C_estimate;
  double residual = 0;  ///< |shifted - (A + kappa_B B + kappa_C C)| / |shifted|
  double a_form_residual = 0;
  double b_form_residual = 0;
  double quadrature_error = 0;  ///< sum of the step-doubling differences
};

struct ParsevalParts {
  Complex shifted, A, A_sym, B, B_fact, C;
  double error = 0;
};

inline ParsevalParts parseval_parts(const PaleyWienerGaussian& phi, const ContourSpec& spec,
                                    const ZetaEngine& engine = default_engine()) {
  const auto s = shifted_norm_gl3(phi, spec, engine);
  const auto a = contribution_A(phi, spec.half_width, spec.step, engine);
  const auto b = contribution_B(phi, spec.half_width, spec.step, engine);
  ParsevalParts p;
  p.shifted = s.total.value;
  p.A = a.direct.value;
  p.A_sym = a.symmetrized.value;
  p.B = b.direct.value;
  p.B_fact = b.factored.value;
  p.C = contribution_C(phi, engine);
  p.error = s.total.error + a.direct.error + b.direct.error;
  return p;
}

inline SpectralReport parseval_check_gl3(const PaleyWienerGaussian& phi, const ContourSpec& spec,
                                         const ZetaEngine& engine = default_engine()) {
  const auto p = parseval_parts(phi, spec, engine);
  // Multiplying by <lambda, rho^vee> - 2 removes the point residue.
  Polynomial killer = Polynomial::affine(-2.0, {1.0, 1.0});
  const auto q = parseval_parts(phi.times(killer), spec, engine);

  SpectralReport r;
  r.base = spec.base;
  r.beta = phi.beta();
  r.step = spec.step;
  r.half_width = spec.half_width;
  r.shifted = p.shifted;
  r.A = p.A;
  r.A_symmetrized = p.A_sym;
  r.B = p.B;
  r.B_factored = p.B_fact;
  r.C = p.C;
  r.kappa_B_estimate = (q.shifted - q.A) / q.B;
  r.kappa_C_estimate = (p.shifted - p.A - r.kappa_B_estimate * p.B) / p.C;
  r.residual = std::abs(p.shifted - (p.A + r.kappa_B * p.B + r.kappa_C * p.C)) / std::abs(p.shifted);
  r.a_form_residual = std::abs(p.A - p.A_sym) / std::max(std::abs(p.A), 1e-300);
  r.b_form_residual = std::abs(p.B - p.B_fact) / std::max(std::abs(p.B), 1e-300);
  r.quadrature_error = p.error + q.error;
  return r;
}

}  // namespace eis
