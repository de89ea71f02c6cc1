#ifndef AMVORTEX_TESTS_FIXTURES_HPP
#define AMVORTEX_TESTS_FIXTURES_HPP

#include <complex>
#include <string>
#include <vector>

#include "amvortex/exact/poly.hpp"

namespace fixtures {

using amvortex::exact::BigRat;
using amvortex::exact::Poly;
using Complex = std::complex<double>;

// Ascending coefficients given as rational strings.
inline Poly poly(const std::vector<std::string>& coeffs) {
  std::vector<BigRat> c;
  for (const auto& s : coeffs) c.push_back(BigRat::parse(s));
  return Poly(std::move(c));
}

struct TablePair {
  int m;
  int n;
  Poly p;
  Poly q;
  std::vector<Complex> a;  // rounded reference roots of P
  std::vector<Complex> b;  // rounded reference roots of Q
};

// Reference solution pairs with their roots rounded to 2-3 digits.
inline std::vector<TablePair> table_pairs() {
  return {
      {2, 1, poly({"2", "-2", "1"}), poly({"0", "1"}), {{1, 1}, {1, -1}}, {{0, 0}}},
      {3, 2, poly({"-3/2", "7/2", "-2", "1"}), poly({"1", "0", "1"}),
       {{0.56, 0}, {0.72, 1.48}, {0.72, -1.48}},
       {{0, 1}, {0, -1}}},
      {4, 3, poly({"533/324", "-89/27", "44/9", "-2", "1"}), poly({"13/54", "13/6", "0", "1"}),
       {{0.393, -0.57}, {0.393, 0.57}, {0.607, -1.76}, {0.607, 1.76}},
       {{-0.11, 0}, {0.055, -1.48}, {0.055, 1.48}}},
      {5, 4, poly({"-16015/15552", "12919/2592", "-749/144", "449/72", "-2", "1"}),
       poly({"1337/1296", "16/27", "61/18", "0", "1"}),
       {{0.255, 0}, {0.322, -0.938}, {0.322, 0.938}, {0.55, -1.948}, {0.55, 1.948}},
       {{-0.107, -0.567}, {-0.107, 0.567}, {0.107, -1.758}, {0.107, 1.758}}},
      {6, 5,
       poly({"3980046413/2916000000", "-57115601/16200000", "10810499/1080000", "-193279/27000",
             "2269/300", "-2", "1"}),
       poly({"23805769/48600000", "1112099/324000", "3607/3600", "1669/360", "0", "1"}),
       {{0.191, -0.395}, {0.191, 0.395}, {0.29, -1.2}, {0.29, 1.2}, {0.52, -2.09}, {0.52, 2.09}},
       {{-0.145, 0}, {-0.078, -0.94}, {-0.078, 0.94}, {0.15, -1.95}, {0.15, 1.95}}},
  };
}

struct DegeneratePair {
  int m;
  int n;
  Poly p;
  Poly q;
};

inline DegeneratePair degenerate_41() { return {4, 1, poly({"0", "0", "0", "4", "1"}), poly({"0", "1"})}; }
inline DegeneratePair degenerate_53() {
  return {5, 3, poly({"0", "8/27", "-8/9", "4/3", "-4/3", "1"}), poly({"0", "0", "0", "1"})};
}

// Low sequence members in closed form.
inline Poly p1() { return poly({"0", "1"}); }
inline Poly p2() { return poly({"2", "-2", "1"}); }
inline Poly p3() { return poly({"-8", "21/2", "-5", "1"}); }

// Independently computed members (exact Wronskian expansion in a CAS).
inline Poly p4() { return poly({"1357/36", "-493/9", "284/9", "-26/3", "1"}); }
inline Poly p5() { return poly({"-383/2", "397753/1296", "-44017/216", "5077/72", "-77/6", "1"}); }
inline Poly p6() {
  return poly({"603214297/583200", "-117304633/64800", "58459891/43200", "-2995579/5400", "19807/150",
               "-87/5", "1"});
}

// phi-bar = x / P2, phi* = (2x^3 - 10x^2 + 21x - 16) / P2 e^{2x}.
inline Poly phi_star_num() { return poly({"-16", "21", "-10", "2"}); }
// Phi_1* = (36x^4 - 312x^3 + 1136x^2 - 1972x + 1357) / P3tilde e^{3x}, P3tilde = phi_star_num.
inline Poly big_phi_star_num() { return poly({"1357", "-1972", "1136", "-312", "36"}); }

}  // namespace fixtures

#endif  // AMVORTEX_TESTS_FIXTURES_HPP
