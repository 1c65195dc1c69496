// The GL(3) residue matrix N(z) next to the residues it is built from.

#include <cstdio>

#include "eis/eis.hpp"

int main() {
  namespace gl3 = eis::gl3;
  const eis::Complex z(0.0, 0.7);
  const double l2 = eis::default_engine().completed_L(2.0).real();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const auto closed = gl3::n_entry(i, j, z);
      const auto contour = gl3::transverse_residue(i, j, z).value * l2;
      std::printf("sigma_%d%d = %-2s  n = %+.12f%+.12fi  contour = %+.12f%+.12fi\n", i, j,
                  gl3::name(gl3::sigma(i, j)).c_str(), closed.real(), closed.imag(), contour.real(), contour.imag());
    }
  }
  std::printf("largest 2x2 minor: %.2e\n", gl3::rank_one_residual(z));
  for (const auto& d : gl3::double_residue_table()) {
    std::printf("%-2s at (%s,%s): %+.12f  (%s)\n", gl3::name(d.w).c_str(),
                std::to_string(d.point.coeffs[0].numerator()).c_str(),
                std::to_string(d.point.coeffs[1].numerator()).c_str(), d.value.real(), d.closed_form_label.c_str());
  }
}
