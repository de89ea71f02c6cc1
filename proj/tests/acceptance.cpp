// One line per acceptance criterion; exits 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "amvortex/balance/jacobian.hpp"
#include "amvortex/balance/newton.hpp"
#include "amvortex/gen/identities.hpp"
#include "amvortex/gen/pair.hpp"
#include "amvortex/gen/sequence.hpp"
#include "amvortex/ringpot/elliptic.hpp"
#include "amvortex/ringpot/potential.hpp"
#include "amvortex/ringpot/reduced.hpp"
#include "support.hpp"

using namespace amvortex;
using balance::Complex;

namespace {

constexpr double kTablesSeconds = 5.0;
constexpr double kRoutesSeconds = 10.0;
constexpr int kRouteMax = 12;
constexpr double kRootPrintTol = 0.01;
constexpr double kRootResidual = 1e-12;
constexpr double kBalanceTol = 1e-10;
constexpr double kHandTol = 1e-14;
constexpr double kKernelSmall = 1e-8;
constexpr double kKernelGap = 1e-3;
constexpr double kTranslationTol = 1e-10;
constexpr double kFdStep = 1e-6;
constexpr double kFdTol = 1e-5;
constexpr double kBasinRadius = 1e-2;
constexpr int kBasinTrials = 100;
constexpr double kBasinMatch = 1e-8;
constexpr double kBasinRate = 0.95;
constexpr double kSpecialTol = 1e-14;
constexpr double kQuadTol = 1e-10;
constexpr double kScalingTol = 1e-12;
constexpr double kNearFieldRatioBound = 1.0;
constexpr double kContrastFactor = 10.0;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s  [%s] (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome tables() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto seq = gen::build_sequence(6, gen::Route::wronskian);
  int matched = 0;
  for (const auto& t : fixtures::table_pairs()) {
    const auto pair = gen::normalized_pair(t.n, seq);
    if (pair.p == t.p && pair.q == t.q) ++matched;
  }
  const double secs = seconds_since(t0);
  return {matched == 5 && secs < kTablesSeconds,
          std::to_string(matched) + "/5 pairs exact, " + num(secs) + " s"};
}

Outcome routes() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto w = gen::build_sequence(kRouteMax, gen::Route::wronskian);
  const auto r = gen::build_sequence(kRouteMax, gen::Route::recurrence);
  int equal = 0;
  for (int k = 1; k <= kRouteMax; ++k) equal += w.at(k) == r.at(k);
  const double secs = seconds_since(t0);
  return {equal == kRouteMax && secs < kRoutesSeconds,
          std::to_string(equal) + "/" + std::to_string(kRouteMax) + " equal, " + num(secs) + " s"};
}

Outcome identities() {
  int bad = 0;
  for (const auto& t : fixtures::table_pairs()) bad += !gen::verify_pq(t.p, t.q, t.m, t.n).is_zero();
  for (const auto& d : {fixtures::degenerate_41(), fixtures::degenerate_53()})
    bad += !gen::verify_pq(d.p, d.q, d.m, d.n).is_zero();
  for (int n = 1; n <= 6; ++n) bad += !gen::verify_refi(n);
  const exact::ExpPoly xi = exact::ExpPoly(fixtures::poly({"1", "0", "1"}), 1) + exact::ExpPoly(exact::Poly::x(), 3);
  for (int k = 0; k <= 6; ++k) bad += !gen::verify_jacobi(k, xi);
  for (int k = 1; k <= 6; ++k) bad += !gen::verify_wk_one(k);
  const auto p2 = fixtures::p2();
  bad += !gen::verify_ode_solution(p2, 1, exact::Poly::x(), 0);
  bad += !gen::verify_ode_solution(p2, 1, fixtures::phi_star_num(), 2);
  const auto seq = gen::build_sequence(10, gen::Route::recurrence);
  for (int n = 1; n <= 8; ++n) {
    bad += !gen::verify_ode_solution(seq.at(n + 1), n, seq.at(n), 0);
    bad += !gen::verify_ode_solution(seq.at(n + 1), n, seq.at(n + 2), n + 1);
  }
  bad += !gen::verify_ode_solution(fixtures::phi_star_num(), 2, fixtures::big_phi_star_num(), 3);
  return {bad == 0, std::to_string(bad) + " identity failures"};
}

Outcome root_tables() {
  int ok = 0;
  double worst = 0;
  for (const auto& t : fixtures::table_pairs()) {
    const auto ra = roots::find_roots(t.p);
    const auto rb = roots::find_roots(t.q);
    worst = std::max({worst, ra.residual_bound, rb.residual_bound});
    ok += roots::match_within(ra.roots, t.a, kRootPrintTol) && roots::match_within(rb.roots, t.b, kRootPrintTol);
  }
  return {ok == 5 && worst < kRootResidual, std::to_string(ok) + "/5 lists matched, worst residual " + num(worst)};
}

Outcome balance_cert() {
  double worst_pq = 0, worst_halved = 0;
  bool lambda_ok = true;
  for (const auto& cfg : support::table_configs()) {
    const auto target = balance::make_preset("paper-balance", cfg.m(), cfg.n());
    lambda_ok = lambda_ok && std::abs(balance::rescale_factor(cfg.preset, target, cfg.m(), cfg.n()) - 0.5) < 1e-15;
    worst_pq = std::max(worst_pq, balance::max_norm(balance::residual(cfg)));
    worst_halved = std::max(worst_halved, balance::max_norm(balance::residual(balance::rescale(cfg, target))));
  }
  const auto f = balance::balance_lhs(support::table_configs()[0]);
  const bool hand = std::abs(f[0] + 0.5) < kHandTol && std::abs(f[1] + 0.5) < kHandTol &&
                    std::abs(f[2] + 1.0) < kHandTol;
  return {worst_pq < kBalanceTol && worst_halved < kBalanceTol && lambda_ok && hand,
          "pq-roots " + num(worst_pq) + ", halved " + num(worst_halved) + ", (2,1) hand values " +
              (hand ? "ok" : "off")};
}

Outcome nondegeneracy() {
  int ok = 0;
  double worst_gap = 1, worst_trans = 0;
  for (const auto& cfg : support::table_configs()) {
    const auto nd = balance::nondegeneracy(cfg);
    const auto& sv = nd.singular_values;
    const double gap = sv[sv.size() - 2] / sv.front();
    worst_gap = std::min(worst_gap, gap);
    worst_trans = std::max(worst_trans, nd.translation_residual);
    ok += nd.kernel_dim == 1 && sv.back() < kKernelSmall * sv.front() && gap > kKernelGap &&
          nd.translation_residual <= kTranslationTol;
  }
  return {ok == 5, std::to_string(ok) + "/5 nondegenerate, min sigma2/sigma1 " + num(worst_gap) +
                       ", max |J1|/|J| " + num(worst_trans)};
}

Outcome degeneracy() {
  const auto d41 = fixtures::degenerate_41();
  const auto d53 = fixtures::degenerate_53();
  const bool h1_41 = !(roots::is_square_free(d41.p) && roots::is_square_free(d41.q));
  const bool h2_41 = !roots::common_root_free(d41.p, d41.q);
  const bool h1_53 = !(roots::is_square_free(d53.p) && roots::is_square_free(d53.q));
  return {h1_41 && h2_41 && h1_53, std::string("(4,1) H1 ") + (h1_41 ? "fails" : "holds") + ", common root " +
                                       (h2_41 ? "found" : "absent") + "; (5,3) H1 " + (h1_53 ? "fails" : "holds")};
}

Outcome jacobian() {
  double worst = 0;
  for (const auto& cfg : support::table_configs()) {
    const auto j = balance::jacobian(cfg);
    const auto fd = balance::jacobian_fd(cfg, kFdStep);
    worst = std::max(worst, (j - fd).cwiseAbs().maxCoeff() / j.cwiseAbs().maxCoeff());
  }
  return {worst < kFdTol, "max relative entry error " + num(worst)};
}

Outcome basin() {
  double worst_rate = 1;
  std::string per;
  for (const auto& cfg : support::table_configs()) {
    int hits = 0;
    for (int trial = 0; trial < kBasinTrials; ++trial) {
      std::mt19937_64 rng(1000 * cfg.m() + trial);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      auto jitter = [&](Complex z) {
        return z + std::polar(kBasinRadius * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
      };
      auto start = cfg;
      for (auto& z : start.a) z = jitter(z);
      for (auto& z : start.b) z = jitter(z);
      const auto res = balance::newton_solve(start);
      hits += res.ok() && balance::same_up_to_translation(res.config, cfg, kBasinMatch);
    }
    const double rate = static_cast<double>(hits) / kBasinTrials;
    worst_rate = std::min(worst_rate, rate);
    per += (per.empty() ? "" : " ") + std::to_string(hits);
  }
  return {worst_rate >= kBasinRate, "recovered per config: " + per + " of " + std::to_string(kBasinTrials)};
}

Outcome elliptic() {
  using boost::math::quadrature::gauss_kronrod;
  const double half_pi = std::numbers::pi / 2;
  bool special = std::abs(ringpot::ellipK(0) - half_pi) < kSpecialTol &&
                 std::abs(ringpot::ellipE(0) - half_pi) < kSpecialTol &&
                 std::abs(ringpot::ellipE(1) - 1.0) < kSpecialTol;
  double quad = 0;
  for (int i = 1; i <= 9; ++i) {
    const double s = 0.1 * i;
    auto fk = [s](double t) { return 1.0 / std::sqrt(1.0 - s * std::sin(t) * std::sin(t)); };
    auto fe = [s](double t) { return std::sqrt(1.0 - s * std::sin(t) * std::sin(t)); };
    quad = std::max(quad, std::abs(ringpot::ellipK(s) - gauss_kronrod<double, 61>::integrate(fk, 0.0, half_pi, 15, 1e-15)));
    quad = std::max(quad, std::abs(ringpot::ellipE(s) - gauss_kronrod<double, 61>::integrate(fe, 0.0, half_pi, 15, 1e-15)));
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pos(0.1, 3.0), ax(-2.0, 2.0), lam(0.05, 20.0);
  double scaling = 0;
  for (int i = 0; i < 100; ++i) {
    const ringpot::HalfPlanePoint a{pos(rng), ax(rng)}, x{pos(rng), ax(rng)};
    const double l = lam(rng);
    const double base = ringpot::potential_A(a, x);
    const double scaled = ringpot::potential_A({l * a.x1, l * a.x2}, {l * x.x1, l * x.x2});
    scaling = std::max(scaling, std::abs(scaled - base) / std::abs(base));
  }
  double ratio = 0;
  for (const auto& row : ringpot::near_field_report({1, 0}, {1e-2, 1e-3, 1e-4})) ratio = std::max(ratio, row.ratio);
  return {special && quad <= kQuadTol && scaling <= kScalingTol && ratio < kNearFieldRatioBound,
          std::string("special values ") + (special ? "ok" : "off") + ", quadrature " + num(quad) + ", scaling " +
              num(scaling) + ", near-field ratio " + num(ratio)};
}

Outcome reduced() {
  int ok = 0;
  double min_contrast = INFINITY;
  for (const auto& cfg : support::table_configs()) {
    auto bad = balance::rescale(cfg, balance::make_preset("reduced-leading", cfg.m(), cfg.n()));
    bad.a[0] += Complex(0, 0.5);
    double prev = INFINITY;
    bool good = true;
    for (double eps : {1e-3, 1e-5, 1e-8}) {
      const auto r = ringpot::reduced_residual({cfg, eps, 0.0});
      const auto rb = ringpot::reduced_residual({bad, eps, 0.0});
      good = good && r.row_norm1 < prev && rb.row_norm2 > kContrastFactor * r.row_norm2;
      prev = r.row_norm1;
      min_contrast = std::min(min_contrast, rb.row_norm2);
    }
    ok += good;
  }
  return {ok == 5, std::to_string(ok) + "/5 configs decay with contrast, min contrast rowNorm2 " + num(min_contrast)};
}

Outcome translation_chain() {
  const auto seq = gen::build_sequence(6, gen::Route::wronskian);
  int ok = 0;
  std::string shifts;
  for (int n = 1; n <= 4; ++n) {
    const auto lo = gen::normalized_pair(n, seq);
    const auto hi = gen::normalized_pair(n + 1, seq);
    const auto c = gen::find_translation(lo.p, hi.q);
    if (c && lo.p.shifted(*c) == hi.q) {
      ++ok;
      shifts += (shifts.empty() ? "" : " ") + c->str();
    }
  }
  return {ok == 4, std::to_string(ok) + "/4 exact shifts: " + shifts};
}

}  // namespace

int main() {
  report(1, "exact polynomial tables", tables);
  report(2, "route equivalence", routes);
  report(3, "identity suite", identities);
  report(4, "root tables", root_tables);
  report(5, "balance certification", balance_cert);
  report(6, "nondegeneracy", nondegeneracy);
  report(7, "degeneracy detection", degeneracy);
  report(8, "Jacobian correctness", jacobian);
  report(9, "Newton basin", basin);
  report(10, "elliptic and potential", elliptic);
  report(11, "reduced residual decay", reduced);
  report(12, "translation chain", translation_chain);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
