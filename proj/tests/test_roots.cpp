#include <doctest.h>

#include <sstream>

#include "amvortex/error.hpp"
#include "amvortex/gen/sequence.hpp"
#include "amvortex/roots/roots.hpp"
#include "fixtures.hpp"

using namespace amvortex;
using namespace amvortex::roots;
using exact::BigRat;
using exact::Poly;
using fixtures::poly;

TEST_CASE("square-free and common-root certificates") {
  CHECK(is_square_free(fixtures::p2()));
  CHECK_FALSE(is_square_free(Poly::from_roots({0, 0, 1})));
  CHECK(is_square_free(Poly::constant(3)));
  CHECK(common_root_free(fixtures::p2(), Poly::x()));
  CHECK_FALSE(common_root_free(Poly::from_roots({1, 2}), Poly::from_roots({2, 3})));
  const auto d41 = fixtures::degenerate_41();
  CHECK_FALSE(is_square_free(d41.p));
  CHECK(is_square_free(d41.q));
  CHECK_FALSE(common_root_free(d41.p, d41.q));
  const auto d53 = fixtures::degenerate_53();
  CHECK_FALSE(is_square_free(d53.q));
}

TEST_CASE("roots of the reference pairs") {
  for (const auto& t : fixtures::table_pairs()) {
    CAPTURE(t.m);
    const auto ra = find_roots(t.p);
    const auto rb = find_roots(t.q);
    CHECK(ra.roots.size() == static_cast<std::size_t>(t.m));
    CHECK(rb.roots.size() == static_cast<std::size_t>(t.n));
    CHECK(ra.residual_bound < 1e-12);
    CHECK(rb.residual_bound < 1e-12);
    CHECK(ra.square_free_certificate);
    CHECK(match_within(ra.roots, t.a, 0.01));
    CHECK(match_within(rb.roots, t.b, 0.01));
    CHECK(conj_symmetric(ra.roots, 1e-12));
    CHECK(conj_symmetric(rb.roots, 1e-12));
  }
}

TEST_CASE("exact roots of the (2,1) pair") {
  const auto rs = find_roots(fixtures::p2());
  REQUIRE(rs.roots.size() == 2);
  // sorted by (re, im): 1 - i then 1 + i
  CHECK(rs.roots[0].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rs.roots[0].imag() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(rs.roots[1].imag() == doctest::Approx(1.0).epsilon(1e-15));
  const auto lin = find_roots(poly({"3", "2"}));
  CHECK(lin.roots[0].real() == doctest::Approx(-1.5));
}

TEST_CASE("harder inputs") {
  std::vector<BigRat> r;
  for (int k = 1; k <= 10; ++k) r.emplace_back(k);
  const auto rs = find_roots(Poly::from_roots(r));
  for (int k = 0; k < 10; ++k) {
    CHECK(rs.roots[k].real() == doctest::Approx(k + 1).epsilon(1e-8));
    CHECK(rs.roots[k].imag() == 0.0);
  }
  const auto seq = gen::build_sequence(12, gen::Route::recurrence);
  const auto big = find_roots(seq.at(12));
  CHECK(big.roots.size() == 12);
  CHECK(big.residual_bound < 1e-12);
  for (const auto& z : big.roots) CHECK(scaled_residual(seq.at(12), z) < 1e-12);
}

TEST_CASE("root finder preconditions") {
  CHECK_THROWS_AS(find_roots(Poly::constant(2)), PreconditionError);
  CHECK_THROWS_AS(find_roots(Poly::from_roots({1, 1})), PreconditionError);
}

TEST_CASE("matching helpers") {
  const std::vector<Complex> z{{1, 1}, {1, -1}, {0, 0}};
  CHECK(conj_symmetric(z, 1e-12));
  const std::vector<Complex> w{{1, 1}, {1, -0.9}};
  CHECK_FALSE(conj_symmetric(w, 1e-3));
  CHECK(match_within(z, std::vector<Complex>{{0.001, 0}, {1, 0.999}}, 0.01));
  CHECK_FALSE(match_within(z, std::vector<Complex>{{1, 1}, {1, 1}}, 0.01));
}

TEST_CASE("CSV rows") {
  std::ostringstream os;
  const std::vector<Complex> z{{0.5, -1}};
  write_csv_rows(os, z, "a");
  CHECK(os.str() == "0.5,-1,a\n");
  const auto j = to_json(find_roots(fixtures::p2()));
  CHECK(j["roots"].size() == 2);
}
