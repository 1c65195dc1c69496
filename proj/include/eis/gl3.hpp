#pragma once

// Residue data of the GL(3) intertwining scalars: the singular lines
// lambda_i(z) = delta_i + z e_i, the Weyl elements sigma_ij, the residue
// matrix N(z), transverse and double residues, and the volume constant of a
// split GL(n).

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "eis/errors.hpp"
#include "eis/intertwining.hpp"
#include "eis/quadrature.hpp"
#include "eis/roots.hpp"
#include "eis/zeta.hpp"

namespace eis::gl3 {

using Matrix3 = std::array<std::array<Complex, 3>, 3>;

inline const RootDatum& datum() {
  static const RootDatum d(3);
  return d;
}

inline WeylElement identity() { return WeylElement::identity(3); }
inline WeylElement s1() { return WeylElement::simple_reflection(3, 1); }
inline WeylElement s2() { return WeylElement::simple_reflection(3, 2); }
/// Reflection in e_1 - e_3.
inline WeylElement s3() { return WeylElement({2, 1, 0}); }
/// s_1 s_2: e_1 -> e_2 -> e_3 -> e_1.
inline WeylElement r1() { return s1() * s2(); }
/// s_2 s_1: e_1 -> e_3 -> e_2 -> e_1.
inline WeylElement r2() { return s2() * s1(); }

inline std::string name(const WeylElement& w) {
  if (w == identity()) return "1";
  if (w == s1()) return "s1";
  if (w == s2()) return "s2";
  if (w == s3()) return "s3";
  if (w == r1()) return "r1";
  if (w == r2()) return "r2";
  return w.to_string();
}

/// The root cutting out the i-th singular line: alpha_1, alpha_2, e_1 - e_3.
inline PositiveRoot line_root(int i) {
  switch (i) {
    case 1: return {1, 2};
    case 2: return {2, 3};
    case 3: return {1, 3};
    default: throw DomainError("line index must be 1, 2 or 3");
  }
}

/// delta_i: the point of the i-th singular hyperplane orthogonal to its direction.
inline RationalWeight delta(int i) {
  const Rational h(1, 2);
  switch (i) {
    case 1: return RationalWeight({Rational(1), -h});
    case 2: return RationalWeight({-h, Rational(1)});
    case 3: return RationalWeight({h, h});
    default: throw DomainError("line index must be 1, 2 or 3");
  }
}

/// e_1 = -varpi_2, e_2 = varpi_1, e_3 = varpi_2 - varpi_1.
inline RationalWeight direction(int i) {
  switch (i) {
    case 1: return RationalWeight({Rational(0), Rational(-1)});
    case 2: return RationalWeight({Rational(1), Rational(0)});
    case 3: return RationalWeight({Rational(-1), Rational(1)});
    default: throw DomainError("line index must be 1, 2 or 3");
  }
}

/// Affine function a + b z with rational coefficients.
struct AffinePairing {
  Rational constant;
  Rational slope;
  bool operator==(const AffinePairing&) const = default;
};

struct ResidueLine {
  int i;
  RationalWeight base;
  RationalWeight dir;

  static ResidueLine make(int i) { return {i, delta(i), direction(i)}; }

  Weight at(Complex z) const { return to_complex(base) + z * to_complex(dir); }
  /// <delta_i + z e_i, alpha^vee> as an exact affine function of z.
  AffinePairing pair(const PositiveRoot& a) const { return {a.pair(base), a.pair(dir)}; }
};

inline Weight lambda_line(int i, Complex z) { return ResidueLine::make(i).at(z); }

/// The unique w with w(delta_i) = -delta_j, found by exact search.
inline WeylElement sigma(int i, int j) {
  const auto target = -delta(j);
  const auto src = delta(i);
  for (const auto& w : WeylElement::all(3))
    if (w.act(src) == target) return w;
  throw DomainError("sigma: no Weyl element maps delta_i to -delta_j");
}

/// Closed-form entries of N(z). Entries paired by n_ij(z) = n_ji(-z) are
/// written with literally reflected arguments.
inline Complex n_entry(int i, int j, Complex z, const ZetaEngine& engine = default_engine()) {
  auto L = [&](Complex s) { return engine.completed_L(s); };
  auto q = [&](Complex a, Complex b) { return L(a) / L(b); };
  switch (3 * (i - 1) + (j - 1)) {
    case 0: return 1.0;
    case 1: return q(-z - 0.5, -z + 1.5);
    case 2: return q(-z + 0.5, -z + 1.5);
    case 3: return q(z - 0.5, z + 1.5);
    case 4: return 1.0;
    case 5: return q(z + 0.5, z + 1.5);
    case 6: return q(z + 0.5, z + 1.5);
    case 7: return q(-z + 0.5, -z + 1.5);
    case 8: return q(z + 0.5, z + 1.5) * q(-z + 0.5, -z + 1.5);
    default: throw DomainError("n_entry: indices must lie in 1..3");
  }
}

inline Matrix3 n_matrix(Complex z, const ZetaEngine& engine = default_engine()) {
  Matrix3 n{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) n[i - 1][j - 1] = n_entry(i, j, z, engine);
  return n;
}

/// Largest |2x2 minor| of N(z).
inline double rank_one_residual(Complex z, const ZetaEngine& engine = default_engine()) {
  const auto n = n_matrix(z, engine);
  double worst = 0;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2)
          worst = std::max(worst, std::abs(n[r1][c1] * n[r2][c2] - n[r1][c2] * n[r2][c1]));
  return worst;
}

/// max |n_ij(z) - n_ji(-z)|.
inline double symmetry_residual(Complex z, const ZetaEngine& engine = default_engine()) {
  const auto a = n_matrix(z, engine), b = n_matrix(-z, engine);
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[j][i]));
  return worst;
}

/// max |n_ij(z) - n_ik(z) conj(n_jk(z))| over i, j and k in {1, 2} (the
/// columns with n_kk = 1); z must be imaginary.
inline double multiplicativity_residual(Complex z, const ZetaEngine& engine = default_engine()) {
  if (std::abs(z.real()) > 1e-12) throw DomainError("multiplicativity_residual: z must be purely imaginary");
  const auto n = n_matrix(z, engine);
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(n[i][j] - n[i][k] * std::conj(n[j][k])));
  return worst;
}

/// (1/2 pi i) \oint m(sigma_ij, lambda_i(z) + u delta_i) du around u = 0;
/// delta_i is orthogonal to e_i and pairs to 1 with the line's coroot.
inline ContourResult transverse_residue(int i, int j, Complex z, const ZetaEngine& engine = default_engine(),
                                        double radius = 0.25, double tol = 1e-12) {
  const ScalarIntertwiner m(sigma(i, j), engine);
  const auto line = ResidueLine::make(i);
  const Weight base = line.at(z);
  const Weight xi = to_complex(line.base);
  return circle_coefficient_converged([&](Complex u) { return m(base + u * xi); }, 0.0, radius, -1, tol);
}

struct DoubleResidue {
  WeylElement w;
  RationalWeight point;
  Complex value;
  Complex closed_form;
  std::string closed_form_label;
};

/// Iterated residue of m(w, (c1, c2)) at an integer point. The inner circle
/// runs in the coordinate that vanishes at the point (c1 for rho), with a
/// larger radius than the outer one, so that it encloses the moving pole of
/// the hyperplane c1 + c2 = 1.
inline Complex double_residue(const WeylElement& w, const RationalWeight& point,
                              const ZetaEngine& engine = default_engine(), double inner_radius = 0.3,
                              double outer_radius = 0.1, double tol = 1e-11) {
  const ScalarIntertwiner m(w, engine);
  const Complex p1 = to_double(point.coeffs[0]), p2 = to_double(point.coeffs[1]);
  const bool inner_first = point.coeffs[1] != Rational(0);
  auto outer = [&](Complex v) {
    auto inner = [&](Complex u) {
      return inner_first ? m(Weight({u, v})) : m(Weight({v, u}));
    };
    const Complex centre = inner_first ? p1 : p2;
    return circle_coefficient_converged(inner, centre, inner_radius, -1, tol).value;
  };
  return circle_coefficient_converged(outer, inner_first ? p2 : p1, outer_radius, -1, tol).value;
}

/// The five double residues at varpi_1, varpi_2 and rho with their closed forms.
inline std::vector<DoubleResidue> double_residue_table(const ZetaEngine& engine = default_engine()) {
  const auto& d = datum();
  const Complex l2 = engine.completed_L(2.0), l3 = engine.completed_L(3.0);
  const auto w1 = d.fundamental_weight(1), w2 = d.fundamental_weight(2), rho = d.rho();
  std::vector<DoubleResidue> out = {
      {r1(), w2, 0.0, 1.0 / (l2 * l2), "1/(L(2)L(2))"},
      {r2(), w1, 0.0, 1.0 / (l2 * l2), "1/(L(2)L(2))"},
      {s3(), w2, 0.0, -1.0 / (l2 * l2), "-1/(L(2)L(2))"},
      {s3(), w1, 0.0, -1.0 / (l2 * l2), "-1/(L(2)L(2))"},
      {s3(), rho, 0.0, 1.0 / (l2 * l3), "1/(L(2)L(3))"},
  };
  for (auto& r : out) r.value = double_residue(r.w, r.point, engine);
  return out;
}

}  // namespace eis::gl3

namespace eis {

/// 1/V = prod'_{alpha > 0, non-simple} L(<rho, alpha^vee>) / prod_{alpha > 0} L(1 + <rho, alpha^vee>).
struct VolumeFormula {
  int n = 2;
  /// Net exponent of L(k) in V after cancellation, keyed by k.
  std::map<int, int> exponents;
  double value = 0;

  std::string expression() const {
    std::string s;
    for (const auto& [k, e] : exponents) {
      if (e == 0) continue;
      for (int r = 0; r < std::abs(e); ++r) s += (e > 0 ? "L(" : "1/L(") + std::to_string(k) + ")";
    }
    return s.empty() ? "1" : s;
  }
};

inline VolumeFormula volume_constant(const RootDatum& d, const ZetaEngine& engine = default_engine()) {
  if (d.n() < 2) throw DomainError("volume_constant: requires n >= 2");
  VolumeFormula v;
  v.n = d.n();
  for (const auto& a : d.positive_roots()) {
    const int h = a.height();  // <rho, alpha^vee>
    if (!a.is_simple()) --v.exponents[h];
    ++v.exponents[h + 1];
  }
  for (auto it = v.exponents.begin(); it != v.exponents.end();) it = it->second == 0 ? v.exponents.erase(it) : ++it;
  double value = 1.0;
  for (const auto& [k, e] : v.exponents) value *= std::pow(engine.completed_L(static_cast<double>(k)).real(), e);
  v.value = value;
  return v;
}

}  // namespace eis
