// Norm of a truncated Eisenstein series: quadrature over the fundamental
// domain against the closed form.

#include <cstdio>

#include "eis/eis.hpp"

int main() {
  const eis::EisensteinSeries es;
  eis::EisensteinParams p;
  p.s = 1.25;
  const eis::TruncationParam t{1.0};
  eis::QuadratureSpec q;
  q.y_breaks = {t.y0()};
  auto f = [&](eis::UpperHalfPoint z) { return es.truncate(z, p, t).value; };
  const auto quad = eis::inner_product_fd(f, f, q);
  const auto omega = es.omega_rank1(p.s, p.s, t);
  std::printf("quadrature  %.12f (error estimate %.1e)\n", quad.value.real(), quad.error);
  std::printf("closed form %.12f\n", omega.real());
  std::printf("E(i, 2) = %.15f\n", es.eisenstein({0.0, 1.0}, {2.0}).value.real());
}
