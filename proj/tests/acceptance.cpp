// One line per criterion: PASS/FAIL, number, what was measured.
// `riesz_acceptance N` runs criterion N only; without arguments runs all.
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/cli.hpp"
#include "riesz/coefficients.hpp"
#include "riesz/criteria.hpp"
#include "riesz/mobius.hpp"
#include "riesz/pochhammer.hpp"
#include "riesz/zeta.hpp"

using namespace riesz;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

SeriesOptions mobius_options(const MobiusTable& table) {
  SeriesOptions o;
  o.method = Method::MobiusTruncated;
  o.table = &table;
  return o;
}

Outcome beta_limit() {
  PrecisionContext ctx;
  const double limit = inv_zeta_minus_one(3.5, ctx).to_double();
  const CoefficientSeries s = ck_series(FamilyParams{3.5, 20}, 100, SeriesOptions{}, ctx);
  double worst = 0;
  for (std::uint32_t k = 1; k <= 100; ++k) worst = std::max(worst, std::abs(s.values[k].to_double() - limit));
  return {worst < 1e-3, fmt("limit %.6f, max |c_k - limit| over k=1..100 = %.3g (< 1e-3)", limit, worst)};
}

Outcome cross_method() {
  PrecisionContext ctx;
  const MobiusTable table(100000);
  const double slack = std::ldexp(1.0, -64);
  int bad = 0;
  int total = 0;
  double worst_ratio = 0;
  for (const FamilyParams& p : {FamilyParams{2, 2}, FamilyParams{3.5, 4}, FamilyParams{3, 3}, FamilyParams{4, 4}}) {
    const MobiusSum mob(p, table, ctx);
    for (std::uint32_t k : {0u, 1u, 5u, 10u, 25u, 50u}) {
      const double diff = Real::abs(mob.evaluate(k) - ck_binomial(p, k, ctx)).to_double();
      const double allowed = mob.tail_bound().to_double() + slack;
      worst_ratio = std::max(worst_ratio, diff / allowed);
      bad += diff <= allowed ? 0 : 1;
      ++total;
    }
  }
  return {bad == 0, fmt("%g of %g pairs within tail bound + 2^-64 (worst diff/allowed = %.3g)",
                        total - bad, total, worst_ratio)};
}

Outcome closed_form_zeta() {
  PrecisionContext ctx;
  const Real pi = Real::pi(320);
  const Real pi2 = pi * pi;
  const std::vector<std::pair<double, Real>> cases{
      {2.0, pi2 / Real(6L, 320)},
      {4.0, pi2 * pi2 / Real(90L, 320)},
      {6.0, pi2 * pi2 * pi2 / Real(945L, 320)}};
  long worst = -100000;
  for (const auto& [s, want] : cases) {
    const Real diff = Real::abs(zeta_real(s, ctx).value - want);
    const long bits = diff.is_zero() ? -100000 : diff.exponent2() - want.exponent2();
    worst = std::max(worst, bits);
  }
  return {worst <= -200, fmt("worst relative error 2^%g at 256 bits (need <= 2^-200)", double(worst))};
}

Outcome decay_7half_4() {
  PrecisionContext ctx;
  const MobiusTable table(10000);
  const CoefficientSeries s = ck_series(FamilyParams{3.5, 4}, 1000, mobius_options(table), ctx);
  const DecayFit fit = fit_log_slope(s, {100, 1000});
  double running_min = INFINITY;
  double worst_rise = 0;
  for (std::uint32_t k = 200; k <= 1000; ++k) {
    const double v = std::abs(s.values[k].to_double()) * std::pow(k, 0.75);
    if (std::isfinite(running_min)) worst_rise = std::max(worst_rise, v / running_min - 1);
    running_min = std::min(running_min, v);
  }
  const bool ok = fit.slope <= -0.70 && worst_rise <= 0.05;
  return {ok, fmt("slope over [100,1000] = %.4f (<= -0.70); worst rise of |c_k| k^0.75 over [200,1000] = %.2f%% (<= 5%%)",
                  fit.slope, 100 * worst_rise)};
}

Outcome family_reference() {
  PrecisionContext ctx;
  int positive = 0;
  int below = 0;
  std::string where;
  for (int beta = 1; beta <= 6; ++beta) {
    const CoefficientSeries s = ck_series(three_quarter_family(beta), 100, SeriesOptions{}, ctx);
    int first = 0;
    int last = 0;
    for (std::uint32_t k = 1; k <= 100; ++k) {
      const double c = s.values[k].to_double();
      if (c >= 0) ++positive;
      if (c < -0.4 * std::pow(k, -0.75)) {
        ++below;
        if (!first) first = static_cast<int>(k);
        last = static_cast<int>(k);
      }
    }
    if (first) where += fmt(" beta=%g:k=%g..%g", beta, first, last);
  }
  return {positive == 0 && below == 0,
          fmt("%g nonnegative, %g of 600 below -0.4 k^-3/4", positive, below) + (where.empty() ? "" : " [" + where.substr(1) + "]")};
}

Outcome poisson() {
  PrecisionContext ctx;
  const MobiusTable table(10000);
  const CoefficientSeries s = ck_series(FamilyParams{3.5, 4}, 1000, mobius_options(table), ctx);
  double worst = 0;
  std::uint32_t at = 0;
  std::uint32_t last_bad = 0;
  for (std::uint32_t k = 40; k <= 500; ++k) {
    const Real approx = poisson_approx(s, k, ctx);
    const double rel = (Real::abs(approx - s.values[k]) / Real::abs(s.values[k])).to_double();
    if (rel > worst) {
      worst = rel;
      at = k;
    }
    if (rel >= 1e-2) last_bad = k;
  }
  std::string detail = fmt("max relative deviation over k=40..500 = %.3g at k=%g (< 1e-2)", worst, at);
  if (last_bad) detail += fmt("; exceeds 1e-2 up to k=%g", last_bad);
  return {worst < 1e-2, detail};
}

Outcome ordering() {
  PrecisionContext ctx;
  std::vector<CoefficientSeries> chain;
  for (const FamilyParams& p : {FamilyParams{2, 2}, FamilyParams{3, 3}, FamilyParams{4, 4}}) {
    chain.push_back(ck_series(p, 500, SeriesOptions{}, ctx));
  }
  const OrderingVerdict v = compare_series_magnitudes(chain, {10, 500});
  return {v.fraction >= 0.95, fmt("|c_k(2,2)| <= |c_k(3,3)| <= |c_k(4,4)| for %.2f%% of k in [10,500] (>= 95%%)",
                                  100 * v.fraction)};
}

Outcome riesz_32_1() {
  PrecisionContext ctx;
  ctx.precision_bits = 128;
  const MobiusTable table(10000);
  const RieszSum f(FamilyParams{1.5, 1}, table, ctx);
  double worst = 0;
  std::uint32_t at = 0;
  for (std::uint32_t k = 50; k <= 600; ++k) {
    const double v = std::abs(f.evaluate(Real(long(k), 128)).to_double() * k);
    if (v > worst) {
      worst = v;
      at = k;
    }
  }
  return {worst <= 0.2, fmt("max |f(k) k| over k=50..600 = %.4g at k=%g (<= 0.2), N=10^4", worst, at)};
}

Outcome qk_beta() {
  PrecisionContext ctx;
  ctx.precision_bits = 128;
  const FamilyParams p{2, 2};
  const auto ratio = [&](std::uint32_t k) {
    return qk_direct(p, k, 1000000, ctx).value.to_double() / qk_beta_asymptotic(p, k, ctx).to_double();
  };
  const double r3 = ratio(1000);
  const double r4 = ratio(10000);
  const bool ok = r3 >= 0.9 && r3 <= 1.1 && r4 >= 0.97 && r4 <= 1.03;
  return {ok, fmt("ratio %.5f at k=10^3 (in [0.9,1.1]), %.5f at k=10^4 (in [0.97,1.03])", r3, r4)};
}

Outcome phi_reconstruction() {
  PrecisionContext ctx;
  const FamilyParams p{2, 2};
  const CoefficientSeries c = ck_series(p, 400, SeriesOptions{}, ctx);
  const auto parts = phi_partial_sums(Complex(3.0, 0.0, 256), p, 400, c, ctx);
  const Real target = inv_zeta(Real(3L, 256), ctx);
  std::vector<double> err;
  for (std::uint32_t K : {50u, 100u, 200u, 400u}) {
    Complex d = parts[K].value;
    d.re -= target;
    err.push_back(d.abs().to_double());
  }
  bool monotone = true;
  for (std::size_t i = 1; i < err.size(); ++i) monotone = monotone && err[i] < err[i - 1];
  return {err.back() < 1e-3 && monotone,
          fmt("|phi_K - 1/zeta(3)| = %.3g, %.3g, %.3g, %.3g at K=50,100,200,400", err[0], err[1], err[2], err[3]) +
              (monotone ? " (monotone)" : " (NOT monotone)")};
}

Outcome pochhammer_probe() {
  PrecisionContext ctx;
  ctx.precision_bits = 128;
  // 1/|Gamma(1-s)| for the two probes
  const double a34 = 1 / std::tgamma(0.25);
  const double a_crit = std::sqrt(std::cosh(10 * std::numbers::pi) / std::numbers::pi);
  const auto scaled_extremes = [&](const Complex& s, double sigma) {
    const auto seq = pochhammer_sequence(10000, s, ctx);
    double sup = 0;
    for (std::uint32_t k = 1; k <= 10000; ++k) sup = std::max(sup, seq[k].abs().to_double() * std::pow(k, sigma));
    return std::pair{sup, seq[10000].abs().to_double() * std::pow(10000.0, sigma)};
  };
  const auto [sup1, end1] = scaled_extremes(Complex(0.75, 0.0, 128), 0.75);
  const auto [sup2, end2] = scaled_extremes(Complex(0.5, 10.0, 128), 0.5);
  const DecayFit fit = pochhammer_bound_probe(Complex(0.75, 0.0, 128), {100, 10000}, ctx);
  const bool bounded = sup1 <= 1.05 * a34 && end1 >= 0.95 * a34 && sup2 <= 1.05 * a_crit && end2 >= 0.95 * a_crit;
  const bool slope = std::abs(fit.slope + 0.75) <= 0.05;
  return {bounded && slope,
          fmt("sup |P_k| k^Re s / A = %.4f (s=3/4), %.4f (s=1/2+10i), A = 1/|Gamma(1-s)|; ", sup1 / a34, sup2 / a_crit) +
              fmt("slope of |P_k(3/4)| over [100,10^4] = %.4f (within 0.05 of -0.75)", fit.slope)};
}

Outcome invariants() {
  std::vector<std::string> failed;
  // synthetic fit
  {
    std::vector<double> k;
    std::vector<double> y;
    for (int i = 2; i <= 500; ++i) {
      k.push_back(i);
      y.push_back(std::log(0.4) - 0.75 * std::log(i));
    }
    const DecayFit f = fit_power_law(k, y, -0.75);
    if (std::abs(f.slope + 0.75) > 1e-12 || std::abs(std::exp(f.intercept) - 0.4) > 1e-12) failed.push_back("fit");
  }
  // alternating binomial zero identity
  {
    std::vector<Real> v;
    for (long j = 0; j <= 30; ++j) v.emplace_back(j * j * j - 5 * j + 2, 256);
    if (!alternating_binomial_sum(v, 30, 256).value.is_zero()) failed.push_back("binomial-zero");
  }
  PrecisionContext ctx;
  // P_k recurrence
  {
    const Complex x(0.5, 10.0, 256);
    const auto seq = pochhammer_sequence(200, x, ctx);
    for (std::uint32_t k = 1; k <= 200; ++k) {
      Complex f(Real(1L, 256) - x.re / Real(long(k), 256), -(x.im / Real(long(k), 256)));
      Complex want = seq[k - 1];
      want *= f;
      Complex d = seq[k];
      d -= want;
      if (d.abs().to_double() > 1e-60 * seq[k].abs().to_double()) {
        failed.push_back("recurrence");
        break;
      }
    }
  }
  // c_0 for both methods
  {
    const MobiusTable table(100000);
    for (double alpha : {2.0, 3.5, 4.0}) {
      const FamilyParams p{alpha, 2};
      const Real want = inv_zeta(Real(alpha, 256), ctx);
      const TruncatedSum m = ck_mobius(p, 0, table, ctx);
      if (Real::abs(ck_binomial(p, 0, ctx) - want).to_double() > 1e-70 ||
          Real::abs(m.value - want).to_double() > m.tail_bound.to_double()) {
        failed.push_back("c_0");
        break;
      }
    }
  }
  // byte determinism of CSV and JSON
  for (const char* format : {"csv", "json"}) {
    const auto once = [&] {
      const char* argv[] = {"riesz", "ck", "--alpha", "3.5", "--beta", "4", "--k-max", "60", "--format", format};
      std::ostringstream out;
      std::ostringstream err;
      cli::riesz_main(10, argv, out, err);
      return out.str();
    };
    const std::string a = once();
    if (a.empty() || a != once()) failed.push_back(std::string("determinism-") + format);
  }
  std::string detail = "fit exactness, binomial zero identity, P_k recurrence, c_0 = 1/zeta(alpha), CSV/JSON determinism";
  if (!failed.empty()) {
    detail += "; failed:";
    for (const auto& f : failed) detail += " " + f;
  }
  return {failed.empty(), detail};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"large-beta limit", beta_limit},
      {"cross-method oracle", cross_method},
      {"closed-form zeta", closed_form_zeta},
      {"decay of c_k(7/2,4)", decay_7half_4},
      {"three-quarter family vs -0.4 k^-3/4", family_reference},
      {"Poisson approximation", poisson},
      {"magnitude ordering", ordering},
      {"exponential weights at (3/2,1)", riesz_32_1},
      {"q_k Beta asymptotics", qk_beta},
      {"phi reconstruction of 1/zeta(3)", phi_reconstruction},
      {"Pochhammer bound probe", pochhammer_probe},
      {"invariant suites", invariants},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const long n = std::strtol(argv[i], nullptr, 10);
    if (n < 1 || n > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "usage: riesz_acceptance [1..%zu ...]\n", criteria.size());
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n - 1));
  }
  if (selected.empty()) {
    for (std::size_t i = 0; i < criteria.size(); ++i) selected.push_back(i);
  }

  int failures = 0;
  for (std::size_t i : selected) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu  %s: %s  [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
