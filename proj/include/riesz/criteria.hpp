// Decay analysis of coefficient sequences: log-log slope fits, bound
// constants for |c_k| <= C k^-theta, magnitude orderings between series,
// and the fixed experiment catalog.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "riesz/coefficients.hpp"

namespace riesz {

struct KWindow {
  std::uint32_t lo = 2;
  std::uint32_t hi = 2;
};

/// Default fit window [max(2, k_max/10), k_max].
KWindow default_window(std::uint32_t k_max);

struct DecayFit {
  KWindow window;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  /// max over the window of |c_k| k^-slope_target, so |c_k| <= C k^slope_target
  /// holds on the window with equality somewhere.
  double empirical_constant = 0.0;
  double slope_target = 0.0;
  std::uint32_t points_used = 0;
  std::uint32_t points_masked = 0;  // zero entries left out of the fit
  /// Every value in the window was zero; slope and intercept are meaningless.
  bool degenerate = false;
};

/// Ordinary least squares of log|y| against log k over the points whose
/// |y| > 0. `log_abs[i]` is log|y| at k[i], or -inf for a masked zero.
/// Throws InvalidArgument with fewer than 3 usable points.
DecayFit fit_power_law(std::span<const double> k, std::span<const double> log_abs,
                       double slope_target);

/// log|x| in double precision; -inf for zero. Safe for magnitudes far outside
/// the double range.
double log_abs(const Real& x);

/// Slope fit of log|c_k| on the window, with empirical constant for
/// `slope_target`.
DecayFit fit_log_slope(const CoefficientSeries& series, KWindow window, double slope_target = -0.75);

/// theta = (alpha - rho - epsilon)/beta.
double decay_exponent(const FamilyParams& params, double rho, double epsilon);

enum class Trend { Flat, Down, Up };
std::string to_string(Trend t);

struct BoundCheck {
  double theta = 0.0;
  DecayFit fit;  // slope_target = -theta; empirical_constant is the minimal C
  Trend trend = Trend::Flat;  // direction of |c_k| k^theta over the window
};

/// Minimal C with |c_k| <= C k^-theta on the window (default window if
/// `window.hi == 0`). Throws InvalidArgument if theta <= 0.
BoundCheck check_decay_bound(const CoefficientSeries& series, double rho, double epsilon,
                             KWindow window = {0, 0});

struct OrderingVerdict {
  KWindow window;
  std::vector<bool> holds;  // holds[k - window.lo]
  double fraction = 0.0;
};

/// For each k on the window, whether |c_k(s_0)| <= |c_k(s_1)| <= ... in the
/// given order. Throws InvalidArgument unless every series reaches window.hi.
OrderingVerdict compare_series_magnitudes(std::span<const CoefficientSeries> series, KWindow window);

/// Intercept of the line of slope `slope` that touches {(log k, y_k)} from
/// above on the window: max_k (y_k - slope log k).
double tangent_intercept(std::span<const double> log_k, std::span<const double> y, double slope);

// ------------------------------------------------------------ experiments

/// A plot-ready table: equal-length columns of integers or reals.
struct Column {
  std::string name;
  std::vector<long> integers;
  std::vector<Real> reals;

  [[nodiscard]] bool is_integer() const { return reals.empty() && !integers.empty(); }
  [[nodiscard]] std::size_t size() const { return is_integer() ? integers.size() : reals.size(); }
};

struct Dataset {
  std::string name;
  std::vector<Column> columns;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  [[nodiscard]] std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  [[nodiscard]] const Column& column(const std::string& name) const;
};

struct ExperimentSpec {
  std::string name;
  std::vector<FamilyParams> params_list;
  std::uint32_t k_max = 0;
  std::uint32_t n_max = 10000;
  Method method = Method::BinomialZeta;
  unsigned threads = 0;
};

/// Names of the fixed experiment catalog, in catalog order.
const std::vector<std::string>& experiment_catalog();

/// Catalog defaults for `name`. Throws CatalogError listing valid names.
ExperimentSpec default_experiment(const std::string& name);

/// Runs one catalog experiment; the output depends only on (spec, ctx).
Dataset run_experiment(const ExperimentSpec& spec, const PrecisionContext& ctx);

}  // namespace riesz
