#pragma once

// Scalars by which the intertwining operators act on K-invariant constant
// data of split GL(n):
//   m(w, lambda) = prod_{alpha > 0, w alpha < 0} L(<lambda, alpha^vee>) / L(1 + <lambda, alpha^vee>).

#include <cmath>
#include <complex>
#include <vector>

#include "eis/errors.hpp"
#include "eis/roots.hpp"
#include "eis/zeta.hpp"

namespace eis {

/// The intertwining scalar of a fixed Weyl element.
class ScalarIntertwiner {
 public:
  explicit ScalarIntertwiner(WeylElement w, const ZetaEngine& engine = default_engine())
      : w_(std::move(w)), inversions_(w_.inversion_set()), engine_(&engine) {}

  const WeylElement& element() const { return w_; }
  const std::vector<PositiveRoot>& inversions() const { return inversions_; }

  Complex operator()(const Weight& lambda) const {
    if (lambda.rank() + 1 != static_cast<std::size_t>(w_.n())) throw DomainError("m_scalar: rank mismatch");
    Complex value = 1.0;
    for (const auto& a : inversions_) {
      const Complex arg = a.pair(lambda);
      try {
        value *= engine_->ratio_L(arg);
      } catch (const PoleProximity&) {
        throw PoleProximity("m_scalar: <lambda, " + a.label() + "^vee> = " + detail::format_complex(arg) +
                            " is at the pole of L(z)/L(1+z)");
      }
    }
    return value;
  }

 private:
  WeylElement w_;
  std::vector<PositiveRoot> inversions_;
  const ZetaEngine* engine_;
};

inline Complex m_scalar(const WeylElement& w, const Weight& lambda, const ZetaEngine& engine = default_engine()) {
  return ScalarIntertwiner(w, engine)(lambda);
}

/// |m(st, lambda) - m(s, t lambda) m(t, lambda)|.
inline double cocycle_check(const WeylElement& s, const WeylElement& t, const Weight& lambda,
                            const ZetaEngine& engine = default_engine()) {
  const Complex lhs = m_scalar(s * t, lambda, engine);
  const Complex rhs = m_scalar(s, t.act(lambda), engine) * m_scalar(t, lambda, engine);
  return std::abs(lhs - rhs);
}

/// | |m(w, i y)| - 1 | for a real vector y.
inline double unitarity_check(const WeylElement& w, const std::vector<double>& y,
                              const ZetaEngine& engine = default_engine()) {
  Weight lambda = Weight::zero(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) lambda.coeffs[k] = Complex(0.0, y[k]);
  return std::abs(std::abs(m_scalar(w, lambda, engine)) - 1.0);
}

/// Unramified local factor for quasi-split SU(3) at an odd prime p, lambda = sigma rho:
///   (1 - p^{-2(sigma+1)})(1 + p^{-2 sigma - 1}) / ((1 - p^{-2 sigma})(1 + p^{-2 sigma})).
inline Complex su3_local_factor(long p, Complex sigma) {
  if (p == 2 || !detail::is_prime(p)) throw DomainError("su3_local_factor: p must be an odd prime");
  const double pd = static_cast<double>(p);
  const Complex x2 = std::exp(-2.0 * sigma * std::log(pd));  // p^{-2 sigma}
  const Complex den = (1.0 - x2) * (1.0 + x2);
  if (std::abs(1.0 - x2) < 1e-14 || std::abs(1.0 + x2) < 1e-14) {
    throw DivisionByZero("su3_local_factor: denominator vanishes at sigma = " + detail::format_complex(sigma));
  }
  return (1.0 - x2 / (pd * pd)) * (1.0 + x2 / pd) / den;
}

}  // namespace eis
