// Values of L(s) = pi^{-s/2} Gamma(s/2) zeta(s) and its residues.

#include <cstdio>

#include "eis/eis.hpp"

int main() {
  const auto& engine = eis::default_engine();
  for (double s : {2.0, 3.0, 4.0, 0.5, -1.5}) {
    std::printf("L(%5.2f) = %.15f\n", s, engine.completed_L(s).real());
  }
  const eis::Complex rho(0.5, 14.134725141734693);
  std::printf("|zeta(1/2 + 14.1347i)| = %.3e\n", std::abs(engine.zeta(rho)));
  auto L = [&](eis::Complex s) { return engine.completed_L(s); };
  std::printf("Res L at 1: %.15f\n", eis::residue_at(L, 1.0, 0.25).real());
  std::printf("Res L at 0: %.15f\n", eis::residue_at(L, 0.0, 0.25).real());
}
