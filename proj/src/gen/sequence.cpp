#include "amvortex/gen/sequence.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "amvortex/error.hpp"
#include "amvortex/exact/serialize.hpp"
#include "amvortex/exact/wronskian.hpp"

namespace amvortex::gen {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + ": index must be >= 1, got " + std::to_string(n));
}

/// Solves the (possibly overdetermined) system A c = b exactly. Throws
/// NoSolutionError unless the solution exists and is unique.
std::vector<BigRat> solve_exact(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t r = pivot_row;
    while (r < rows && a[r][col].is_zero()) ++r;
    if (r == rows) throw NoSolutionError("recurrence system is rank deficient");
    std::swap(a[r], a[pivot_row]);
    std::swap(b[r], b[pivot_row]);
    const BigRat inv = BigRat(1) / a[pivot_row][col];
    for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] *= inv;
    b[pivot_row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a[i][col].is_zero()) continue;
      const BigRat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[pivot_row][j];
      b[i] -= f * b[pivot_row];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }
  for (std::size_t i = pivot_row; i < rows; ++i)
    if (!b[i].is_zero()) throw NoSolutionError("recurrence system is inconsistent");
  std::vector<BigRat> x(cols);
  for (std::size_t i = 0; i < pivot_row; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

}  // namespace

BigRat shift_value(int j) {
  require_positive(j, "shift_value");
  BigRat a(0);
  for (int i = 1; i < j; ++i) a += BigRat(2, i);
  return a;
}

ExpPoly omega(int j) {
  require_positive(j, "omega");
  return ExpPoly(Poly({-shift_value(j), 1}), j - 1);
}

BigRat norm_const(int n) {
  require_positive(n, "norm_const");
  BigRat denom = exact::factorial(static_cast<unsigned>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) denom *= BigRat(j - i);
  return BigRat(1) / denom;
}

Poly gen_wronskian(int n) {
  require_positive(n, "gen_wronskian");
  std::vector<ExpPoly> omegas;
  omegas.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) omegas.push_back(omega(j));
  const ExpPoly w = exact::wronskian(omegas);
  const int expected = n * (n - 1) / 2;
  const auto term = w.single_term();
  if (!term || term->first != expected)
    throw InconsistencyError("gen_wronskian(" + std::to_string(n) +
                             "): expected the single exponent " + std::to_string(expected) +
                             ", got " + w.str());
  Poly p = term->second * norm_const(n);
  if (p.degree() != n || !p.is_monic())
    throw InconsistencyError("gen_wronskian(" + std::to_string(n) +
                             "): normalized result is not monic of degree n: " + p.str());
  return p;
}

Poly gen_recurrence(const Poly& pn, const Poly& pn1, int n) {
  require_positive(n, "gen_recurrence");
  const int deg_y = n + 2;
  const BigRat np1(n + 1);
  const Poly dpn = pn.derivative();

  // Column k holds L(x^k) = P_n' x^k - P_n k x^{k-1} - (n+1) P_n x^k.
  std::vector<Poly> columns;
  int rows = 0;
  for (int k = 0; k <= deg_y; ++k) {
    const Poly xk = Poly::monomial(1, k);
    Poly col = dpn * xk - pn * xk.derivative() - pn * xk * np1;
    rows = std::max(rows, col.degree() + 1);
    columns.push_back(std::move(col));
  }
  const Poly rhs = -(pn1 * pn1 * np1);
  rows = std::max(rows, rhs.degree() + 1);

  std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(rows),
                                     std::vector<BigRat>(columns.size()));
  std::vector<BigRat> b(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k)
      a[static_cast<std::size_t>(r)][k] = columns[k].coeff(r);
    b[static_cast<std::size_t>(r)] = rhs.coeff(r);
  }
  return Poly(solve_exact(std::move(a), std::move(b)));
}

Route parse_route(std::string_view name) {
  if (name == "wronskian") return Route::wronskian;
  if (name == "recurrence") return Route::recurrence;
  throw InputError("unknown route '" + std::string(name) + "'");
}

const Poly& AMSequence::at(int n) const {
  if (n < 1 || n > max_index)
    throw InputError("AMSequence: index " + std::to_string(n) + " outside 1.." +
                     std::to_string(max_index));
  return polys[static_cast<std::size_t>(n - 1)];
}

AMSequence build_sequence(int max_index, Route route, int cap) {
  if (max_index < 1 || max_index > cap)
    throw InputError("sequence length " + std::to_string(max_index) + " outside 1.." +
                     std::to_string(cap));
  AMSequence seq;
  seq.max_index = max_index;
  for (int j = 1; j <= max_index; ++j) seq.shifts.push_back(shift_value(j));
  if (route == Route::wronskian) {
    for (int n = 1; n <= max_index; ++n) seq.polys.push_back(gen_wronskian(n));
    return seq;
  }
  seq.polys.push_back(Poly::x());
  if (max_index >= 2) seq.polys.push_back(Poly({2, -2, 1}));
  for (int n = 1; n + 2 <= max_index; ++n)
    seq.polys.push_back(gen_recurrence(seq.at(n), seq.at(n + 1), n));
  return seq;
}

nlohmann::json to_json(const AMSequence& seq) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : seq.polys) polys.push_back(exact::to_json(p));
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& a : seq.shifts) shifts.push_back(exact::to_json(a));
  return {{"version", 1}, {"maxIndex", seq.max_index}, {"shifts", shifts}, {"polys", polys}};
}

AMSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("polys") || !j.contains("maxIndex"))
    throw InputError("sequence document needs 'maxIndex' and 'polys'");
  AMSequence seq;
  seq.max_index = j.at("maxIndex").get<int>();
  for (const auto& p : j.at("polys")) seq.polys.push_back(exact::poly_from_json(p));
  if (j.contains("shifts"))
    for (const auto& a : j.at("shifts")) seq.shifts.push_back(exact::rational_from_json(a));
  if (static_cast<int>(seq.polys.size()) != seq.max_index)
    throw InputError("sequence document: 'polys' length does not match 'maxIndex'");
  return seq;
}

}  // namespace amvortex::gen
