#include "amvortex/exact/wronskian.hpp"

#include <utility>
#include <vector>

#include "amvortex/error.hpp"

namespace amvortex::exact {

ExpPoly wronskian(std::span<const ExpPoly> fs) {
  if (fs.empty()) throw InputError("wronskian: empty function list");
  const std::size_t n = fs.size();

  int total_shift = 0;
  std::vector<std::vector<ExpPoly>> m(n, std::vector<ExpPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (fs[j].is_zero()) return ExpPoly();
    const int shift = fs[j].min_exponent();
    total_shift += shift;
    // Every derivative of f_j still carries e^{shift x}; divide it out.
    ExpPoly g = fs[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = g.is_zero() ? ExpPoly() : g.times_exp(-shift);
      g = g.derivative();
    }
  }

  int sign = 1;
  ExpPoly prev(Poly::constant(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return ExpPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExpPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
      m[i][k] = ExpPoly();
    }
    prev = m[k][k];
  }
  ExpPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det.times_exp(total_shift);
}

}  // namespace amvortex::exact
