#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "riesz/criteria.hpp"
#include "riesz/errors.hpp"

using namespace riesz;

namespace {

CoefficientSeries synthetic(double amplitude, double exponent, std::uint32_t k_max) {
  CoefficientSeries s;
  s.params = FamilyParams{3.5, 4};
  s.k_max = k_max;
  s.values.emplace_back(0L, 128);
  for (std::uint32_t k = 1; k <= k_max; ++k) s.values.emplace_back(-amplitude * std::pow(k, exponent), 128);
  return s;
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("exact power law is recovered") {
  std::vector<double> k;
  std::vector<double> y;
  for (int i = 10; i <= 1000; i += 7) {
    k.push_back(i);
    y.push_back(std::log(0.3) - 0.75 * std::log(i));
  }
  const DecayFit f = fit_power_law(k, y, -0.75);
  CHECK(f.slope == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(std::exp(f.intercept) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(f.residual_rms < 1e-12);
  CHECK(f.empirical_constant == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(f.points_used == k.size());
}

TEST_CASE("1% multiplicative noise moves the slope by well under 0.01") {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<double> k;
  std::vector<double> y;
  for (int i = 100; i <= 1000; ++i) {
    k.push_back(i);
    y.push_back(std::log(0.3 * std::pow(i, -0.75) * (1 + noise(rng))));
  }
  const DecayFit f = fit_power_law(k, y, -0.75);
  CHECK(std::abs(f.slope + 0.75) < 0.01);
  CHECK(f.residual_rms < 0.01);
}

TEST_CASE("zeros are masked; too few points are refused") {
  const double ninf = -INFINITY;
  std::vector<double> k{2, 3, 4, 5};
  std::vector<double> y{ninf, std::log(1.0 / 3), std::log(0.25), std::log(0.2)};
  const DecayFit f = fit_power_law(k, y, -1);
  CHECK(f.points_masked == 1);
  CHECK(f.slope == doctest::Approx(-1.0));
  std::vector<double> y2{ninf, ninf, 1, 2};
  CHECK_THROWS_AS(fit_power_law(k, y2, -1), InvalidArgument);
  CHECK_THROWS_AS(fit_power_law(std::vector<double>{1, 2}, std::vector<double>{1}, -1), InvalidArgument);
}

TEST_CASE("series fits and decay bound trend") {
  const auto s = synthetic(0.2, -0.9, 400);
  const DecayFit f = fit_log_slope(s, {40, 400});
  CHECK(f.slope == doctest::Approx(-0.9));
  CHECK(decay_exponent(FamilyParams{3.5, 4}, 0.5, 0.0) == doctest::Approx(0.75));
  const BoundCheck b = check_decay_bound(s, 0.5, 0.0);
  CHECK(b.theta == doctest::Approx(0.75));
  CHECK(b.trend == Trend::Down);
  CHECK(b.fit.window.lo == 40);
  CHECK(check_decay_bound(synthetic(0.2, -0.75, 400), 0.5, 0.0).trend == Trend::Flat);
  CHECK(check_decay_bound(synthetic(0.2, -0.5, 400), 0.5, 0.0).trend == Trend::Up);
  CHECK_THROWS_AS(check_decay_bound(s, 3.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(fit_log_slope(s, {10, 401}), InvalidArgument);
  CHECK(to_string(Trend::Down) == "down");
}

TEST_CASE("default window") {
  CHECK(default_window(1000).lo == 100);
  CHECK(default_window(1000).hi == 1000);
  CHECK(default_window(10).lo == 2);
}

TEST_CASE("magnitude ordering") {
  std::vector<CoefficientSeries> chain{synthetic(0.1, -1.0, 50), synthetic(0.2, -1.0, 50),
                                       synthetic(0.2, -0.5, 50)};
  const OrderingVerdict v = compare_series_magnitudes(chain, {1, 50});
  CHECK(v.fraction == 1.0);
  CHECK(v.holds.size() == 50);
  std::swap(chain[0], chain[2]);
  CHECK(compare_series_magnitudes(chain, {2, 50}).fraction == 0.0);
  CHECK_THROWS_AS(compare_series_magnitudes(chain, {1, 51}), InvalidArgument);
}

TEST_CASE("tangent intercept touches from above") {
  const std::vector<double> lk{0.0, 1.0, 2.0};
  const std::vector<double> y{-1.0, -1.5, -2.6};
  CHECK(tangent_intercept(lk, y, -0.75) == doctest::Approx(-0.75));
}

TEST_CASE("catalog") {
  const auto& names = experiment_catalog();
  REQUIRE(names.size() == 7);
  CHECK(names.front() == "riesz-7half-4");
  for (const auto& n : names) CHECK(default_experiment(n).name == n);
  try {
    (void)default_experiment("nope");
    FAIL("expected CatalogError");
  } catch (const CatalogError& e) {
    CHECK(std::string(e.what()).find("critical-strip") != std::string::npos);
  }
}

TEST_CASE("small experiment runs") {
  PrecisionContext ctx;
  const Dataset limit = run_experiment(default_experiment("alpha-half-limit"), ctx);
  CHECK(limit.rows() == 11);
  const Column& c = limit.column("c_k_limit");
  CHECK(c.reals[3].to_double() == doctest::Approx(-0.617206616).epsilon(1e-9));

  ExperimentSpec fam = default_experiment("family-2plus3beta");
  fam.k_max = 20;
  const Dataset d = run_experiment(fam, ctx);
  CHECK(d.rows() == 20);
  CHECK(d.column("k").integers.front() == 1);
  CHECK_THROWS_AS((void)d.column("missing"), InvalidArgument);
}

}
