#include "riesz/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riesz/errors.hpp"

namespace riesz {

KWindow default_window(std::uint32_t k_max) {
  return {std::max<std::uint32_t>(2, k_max / 10), k_max};
}

double log_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  return Real::log(Real::abs(x)).to_double();
}

DecayFit fit_power_law(std::span<const double> k, std::span<const double> log_abs_y,
                       double slope_target) {
  if (k.size() != log_abs_y.size()) {
    throw InvalidArgument("fit_power_law: k and log|y| differ in length");
  }
  DecayFit fit;
  fit.slope_target = slope_target;
  double sx = 0.0;
  double sy = 0.0;
  std::uint32_t n = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!std::isfinite(log_abs_y[i])) {
      ++fit.points_masked;
      continue;
    }
    sx += std::log(k[i]);
    sy += log_abs_y[i];
    ++n;
  }
  if (n < 3) {
    throw InvalidArgument("fit_power_law: need at least 3 nonzero points, have " + std::to_string(n));
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!std::isfinite(log_abs_y[i])) continue;
    const double lx = std::log(k[i]);
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (log_abs_y[i] - my);
    best = std::max(best, log_abs_y[i] - slope_target * lx);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_power_law: all points share one k");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!std::isfinite(log_abs_y[i])) continue;
    const double r = log_abs_y[i] - (fit.intercept + fit.slope * std::log(k[i]));
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.empirical_constant = std::exp(best);
  fit.points_used = n;
  return fit;
}

namespace {

void check_window(const CoefficientSeries& series, KWindow window, const char* what) {
  if (window.lo < 2 || window.hi < window.lo) {
    throw InvalidArgument(std::string(what) + ": window must satisfy 2 <= lo <= hi");
  }
  if (window.hi > series.k_max || series.values.size() <= window.hi) {
    throw InvalidArgument(std::string(what) + ": window reaches k = " + std::to_string(window.hi) +
                          " but the series stops at " + std::to_string(series.k_max));
  }
}

}  // namespace

DecayFit fit_log_slope(const CoefficientSeries& series, KWindow window, double slope_target) {
  check_window(series, window, "fit_log_slope");
  std::vector<double> ks;
  std::vector<double> logs;
  for (std::uint32_t k = window.lo; k <= window.hi; ++k) {
    ks.push_back(static_cast<double>(k));
    logs.push_back(log_abs(series.values[k]));
  }
  DecayFit fit = fit_power_law(ks, logs, slope_target);
  fit.window = window;
  return fit;
}

double decay_exponent(const FamilyParams& params, double rho, double epsilon) {
  return (params.alpha - rho - epsilon) / params.beta;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Flat: return "flat";
    case Trend::Down: return "down";
    case Trend::Up: return "up";
  }
  return "unknown";
}

BoundCheck check_decay_bound(const CoefficientSeries& series, double rho, double epsilon,
                             KWindow window) {
  BoundCheck out;
  out.theta = decay_exponent(series.params, rho, epsilon);
  if (!(out.theta > 0.0)) {
    throw InvalidArgument("check_decay_bound: exponent (alpha - rho - epsilon)/beta = " +
                          std::to_string(out.theta) + " is not positive");
  }
  if (window.hi == 0) window = default_window(series.k_max);
  out.fit = fit_log_slope(series, window, -out.theta);
  // slope of log(|c_k| k^theta)
  const double scaled = out.fit.slope + out.theta;
  if (scaled > 0.05) {
    out.trend = Trend::Up;
  } else if (scaled < -0.05) {
    out.trend = Trend::Down;
  } else {
    out.trend = Trend::Flat;
  }
  return out;
}

OrderingVerdict compare_series_magnitudes(std::span<const CoefficientSeries> series,
                                          KWindow window) {
  if (series.empty()) throw InvalidArgument("compare_series_magnitudes: no series given");
  if (window.hi < window.lo) throw InvalidArgument("compare_series_magnitudes: empty window");
  for (const auto& s : series) {
    if (s.values.size() <= window.hi) {
      throw InvalidArgument("compare_series_magnitudes: a series stops at k = " +
                            std::to_string(s.k_max) + ", window needs " + std::to_string(window.hi));
    }
  }
  OrderingVerdict out;
  out.window = window;
  std::size_t good = 0;
  for (std::uint32_t k = window.lo; k <= window.hi; ++k) {
    bool chain = true;
    for (std::size_t i = 1; i < series.size() && chain; ++i) {
      chain = mpfr_cmpabs(series[i - 1].values[k].raw(), series[i].values[k].raw()) <= 0;
    }
    out.holds.push_back(chain);
    good += chain ? 1 : 0;
  }
  out.fraction = static_cast<double>(good) / static_cast<double>(out.holds.size());
  return out;
}

double tangent_intercept(std::span<const double> log_k, std::span<const double> y, double slope) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_k.size() && i < y.size(); ++i) {
    if (std::isfinite(y[i])) best = std::max(best, y[i] - slope * log_k[i]);
  }
  return best;
}

const Column& Dataset::column(const std::string& wanted) const {
  for (const auto& c : columns) {
    if (c.name == wanted) return c;
  }
  throw InvalidArgument("dataset '" + name + "' has no column '" + wanted + "'");
}

}  // namespace riesz
