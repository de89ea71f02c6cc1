#include <doctest.h>

#include <vector>

#include "amvortex/error.hpp"
#include "amvortex/exact/exppoly.hpp"
#include "amvortex/exact/exprat.hpp"
#include "amvortex/exact/poly.hpp"
#include "amvortex/exact/ratfunc.hpp"
#include "amvortex/exact/serialize.hpp"
#include "amvortex/exact/wronskian.hpp"
#include "fixtures.hpp"

using namespace amvortex;
using namespace amvortex::exact;
using fixtures::poly;

TEST_CASE("BigRat canonical form and parsing") {
  CHECK(BigRat(6, 4) == BigRat(3, 2));
  CHECK(BigRat(6, -4).str() == "-3/2");
  CHECK(BigRat(4, 2).str() == "2");
  CHECK(BigRat::parse("-10/4") == BigRat(-5, 2));
  CHECK(BigRat::parse("7").is_integer());
  CHECK_THROWS_AS(BigRat::parse("1/0"), InputError);
  CHECK_THROWS_AS(BigRat::parse("abc"), InputError);
  CHECK_THROWS_AS(BigRat::parse(""), InputError);
  CHECK_THROWS(BigRat(1) / BigRat(0));
  CHECK(BigRat(1, 3) + BigRat(1, 6) == BigRat(1, 2));
  CHECK(BigRat(-1, 3) < BigRat(1, 4));
  CHECK(factorial(10) == BigRat(3628800));
  CHECK(pow(BigRat(2, 3), 3) == BigRat(8, 27));
  CHECK(BigRat(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-16));
}

TEST_CASE("Poly arithmetic") {
  const Poly p = poly({"2", "-2", "1"});
  CHECK(p.degree() == 2);
  CHECK(p.str() == "x^2 - 2*x + 2");
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == poly({"-2", "2"}));
  CHECK(p(BigRat(1)) == BigRat(1));
  CHECK(p * Poly::x() == poly({"0", "2", "-2", "1"}));
  CHECK(poly_arith(p, Poly::x(), PolyOp::add) == poly({"2", "-1", "1"}));
  CHECK(Poly::from_roots({1, 2}) == poly({"2", "-3", "1"}));
  CHECK(poly({"0", "0", "3"}).monic() == poly({"0", "0", "1"}));
}

TEST_CASE("Poly Taylor shift") {
  // p(x + 1) for p = x^2 - 2x + 2 is x^2 + 1
  CHECK(poly({"2", "-2", "1"}).shifted(1) == poly({"1", "0", "1"}));
  const Poly q = fixtures::p6();
  CHECK(q.shifted(BigRat(3, 7)).shifted(BigRat(-3, 7)) == q);
}

TEST_CASE("Poly division and gcd") {
  const Poly a = Poly::from_roots({1, 2, 3});
  const Poly b = Poly::from_roots({2, 5});
  auto [quo, rem] = divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK(gcd(a, b) == Poly::from_roots({2}));
  CHECK(gcd(Poly::from_roots({1}), Poly::from_roots({2})) == Poly::constant(1));
  CHECK(divide_exact(a, Poly::from_roots({3})) == Poly::from_roots({1, 2}));
  CHECK_THROWS_AS(divide_exact(a, Poly::from_roots({4})), InconsistencyError);
  CHECK_THROWS_AS(gcd(Poly(), Poly()), InputError);
}

TEST_CASE("RatFunc reduction") {
  const RatFunc f(Poly::from_roots({1, 2}), Poly::from_roots({1}) * BigRat(2));
  CHECK(f.num() == Poly::from_roots({2}) * BigRat(1, 2));
  CHECK(f.den() == Poly::constant(1));
  const RatFunc g(Poly::constant(1), Poly::x());
  CHECK(g.derivative() == RatFunc(Poly::constant(-1), Poly::x() * Poly::x()));
  CHECK(log_derivative(Poly::x() * Poly::x()) == RatFunc(Poly::constant(2), Poly::x()));
  CHECK((g - g).is_zero());
}

TEST_CASE("ExpPoly and exact division") {
  const ExpPoly e1(Poly::constant(1), 1);
  const ExpPoly e2(Poly::x(), 2);
  const ExpPoly prod = e1 * e2;
  CHECK(prod.single_term()->first == 3);
  CHECK(divide_exact(prod, e1) == e2);
  CHECK(e2.derivative() == ExpPoly(Poly::x() * BigRat(2) + Poly::constant(1), 2));
  const ExpPoly sum = e1 + e2;
  CHECK(divide_exact(sum * sum, sum) == sum);
  CHECK_THROWS_AS(divide_exact(sum, e2 + ExpPoly(Poly::constant(1), 0)), InconsistencyError);
}

TEST_CASE("ExpRat exponents") {
  const ExpRat f(Poly::x(), Poly::constant(1), -1);
  CHECK(f.derivative() == ExpRat(poly({"1", "-1"}), Poly::constant(1), -1));
  CHECK((f * ExpRat(Poly::constant(1), Poly::constant(1), 1)).exponent() == 0);
  CHECK_THROWS_AS(f + ExpRat(Poly::x(), Poly::constant(1), 2), InconsistencyError);
}

TEST_CASE("Wronskian of small families") {
  std::vector<ExpPoly> polys{Poly::constant(1), Poly::x(), Poly::x() * Poly::x()};
  CHECK(wronskian(polys) == ExpPoly(Poly::constant(2), 0));
  // W(e^x, e^{2x}) = e^{3x}
  std::vector<ExpPoly> exps{ExpPoly(Poly::constant(1), 1), ExpPoly(Poly::constant(1), 2)};
  CHECK(wronskian(exps) == ExpPoly(Poly::constant(1), 3));
  // linearly dependent columns
  std::vector<ExpPoly> dep{ExpPoly(Poly::x(), 1), ExpPoly(Poly::x() * BigRat(3), 1)};
  CHECK(wronskian(dep).is_zero());
}

TEST_CASE("JSON round trip") {
  const Poly p = fixtures::p6();
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(rational_from_json(to_json(BigRat(-7, 3))) == BigRat(-7, 3));
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::array({"1", 2.5})), InputError);
}
