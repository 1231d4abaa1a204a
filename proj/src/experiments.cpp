// The experiment catalog. Each experiment yields one wide table whose
// columns are the curves of the experiment, plus the summary
// numbers (fits, bound constants, orderings) in `meta`.
#include <cmath>
#include <optional>
#include <sstream>

#include "riesz/criteria.hpp"
#include "riesz/errors.hpp"
#include "riesz/zeta.hpp"

namespace riesz {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kTangentSlope = -0.75;
constexpr double kFamilyReference = -0.4;  // reference curve -0.4 k^-3/4
constexpr double kRieszReference = -0.07;  // g(k) = -0.07 / k

std::string label(double v) {
  std::ostringstream os;
  os << v;
  std::string s = os.str();
  for (char& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

Column integer_column(std::string name, std::uint32_t lo, std::uint32_t hi) {
  Column c{std::move(name), {}, {}};
  for (std::uint32_t k = lo; k <= hi; ++k) c.integers.push_back(static_cast<long>(k));
  return c;
}

Column slice(std::string name, const CoefficientSeries& s, std::uint32_t lo, std::uint32_t hi) {
  Column c{std::move(name), {}, {}};
  for (std::uint32_t k = lo; k <= hi; ++k) c.reals.push_back(s.values[k]);
  return c;
}

Real real_log(const Real& x) { return Real::log(x); }

// log(|c_k| (log k)^m)
Column log_scaled(std::string name, const CoefficientSeries& s, std::uint32_t lo, std::uint32_t hi,
                  unsigned m, unsigned bits) {
  Column c{std::move(name), {}, {}};
  for (std::uint32_t k = lo; k <= hi; ++k) {
    Real v = Real::abs(s.values[k]);
    const Real lk = real_log(Real(static_cast<long>(k), bits));
    for (unsigned i = 0; i < m; ++i) v *= lk;
    c.reals.push_back(real_log(v));
  }
  return c;
}

std::vector<double> to_doubles(const Column& c) {
  std::vector<double> out;
  out.reserve(c.reals.size());
  for (const auto& r : c.reals) out.push_back(r.to_double());
  return out;
}

// Line of slope -3/4 touching the curve from above.
Column tangent_line(std::string name, const Column& log_k, const Column& curve, Json& meta_out,
                    unsigned bits) {
  const auto lk = to_doubles(log_k);
  const auto y = to_doubles(curve);
  const double b = tangent_intercept(lk, y, kTangentSlope);
  std::size_t touch = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] - kTangentSlope * lk[i] == b) touch = i;
  }
  meta_out = Json{{"slope", kTangentSlope}, {"intercept", b}, {"touch_row", touch}};
  Column c{std::move(name), {}, {}};
  const Real slope(kTangentSlope, bits);
  const Real intercept(b, bits);
  for (const auto& l : log_k.reals) c.reals.push_back(intercept + slope * l);
  return c;
}

Json fit_json(const DecayFit& f) {
  return Json{{"k_lo", f.window.lo},
              {"k_hi", f.window.hi},
              {"slope", f.slope},
              {"intercept", f.intercept},
              {"residual_rms", f.residual_rms},
              {"slope_target", f.slope_target},
              {"empirical_constant", f.empirical_constant},
              {"points_used", f.points_used},
              {"points_masked", f.points_masked}};
}

Json params_json(const FamilyParams& p) {
  Json j{{"alpha", p.alpha}, {"rho", p.rho}, {"epsilon", p.epsilon}};
  if (std::isinf(p.beta)) {
    j["beta"] = "inf";
  } else {
    j["beta"] = p.beta;
  }
  return j;
}

Json series_json(const CoefficientSeries& s) {
  Json j{{"params", params_json(s.params)},
         {"method", to_string(s.method)},
         {"k_max", s.k_max},
         {"precision_bits", s.precision_bits_used}};
  if (s.method == Method::MobiusTruncated) {
    j["n_max"] = s.n_max;
    j["truncation_tail_bound"] = s.truncation_tail_bound.to_string(6);
  }
  return j;
}

Column log_k_column(std::uint32_t lo, std::uint32_t hi, unsigned bits) {
  Column c{"log_k", {}, {}};
  for (std::uint32_t k = lo; k <= hi; ++k) c.reals.push_back(real_log(Real(static_cast<long>(k), bits)));
  return c;
}

class SeriesFactory {
 public:
  SeriesFactory(const ExperimentSpec& spec, const PrecisionContext& ctx) : spec_(spec), ctx_(ctx) {}

  CoefficientSeries make(const FamilyParams& p, std::uint32_t k_max) {
    SeriesOptions opts;
    opts.method = spec_.method;
    opts.threads = spec_.threads;
    if (spec_.method == Method::MobiusTruncated) {
      if (!table_) table_.emplace(spec_.n_max);
      opts.table = &*table_;
    }
    return ck_series(p, k_max, opts, ctx_);
  }

  const MobiusTable& table() {
    if (!table_) table_.emplace(spec_.n_max);
    return *table_;
  }

 private:
  const ExperimentSpec& spec_;
  PrecisionContext ctx_;
  std::optional<MobiusTable> table_;
};

void require_params(const ExperimentSpec& spec, std::size_t n) {
  if (spec.params_list.size() < n) {
    throw InvalidArgument("experiment '" + spec.name + "' needs " + std::to_string(n) +
                          " parameter sets, got " + std::to_string(spec.params_list.size()));
  }
}

void require_k_max(const ExperimentSpec& spec, std::uint32_t min) {
  if (spec.k_max < min) {
    throw InvalidArgument("experiment '" + spec.name + "' needs k_max >= " + std::to_string(min));
  }
}

// Figures 1-3: log|c_k| (log k)^m, m = 0, 1, 2, with tangent lines of slope -3/4.
Dataset riesz_7half_4(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 20);
  const unsigned bits = ctx.precision_bits;
  SeriesFactory factory(spec, ctx);
  const CoefficientSeries s = factory.make(spec.params_list[0], spec.k_max);
  const std::uint32_t lo = 2;
  const std::uint32_t hi = spec.k_max;

  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", lo, hi));
  d.columns.push_back(slice("c_k", s, lo, hi));
  d.columns.push_back(log_k_column(lo, hi, bits));
  Json tangents = Json::object();
  Json fits = Json::object();
  const KWindow window = default_window(spec.k_max);
  for (unsigned m = 0; m <= 2; ++m) {
    const std::string curve = m == 0 ? "log_abs_c_k" : m == 1 ? "log_abs_c_k_log_k" : "log_abs_c_k_log2_k";
    d.columns.push_back(log_scaled(curve, s, lo, hi, m, bits));
    Json t;
    d.columns.push_back(tangent_line("tangent_m" + std::to_string(m), d.columns[2], d.columns.back(), t, bits));
    tangents[curve] = t;

    const auto lk = to_doubles(d.columns[2]);
    const auto y = to_doubles(d.columns[d.columns.size() - 2]);
    std::vector<double> ks;
    std::vector<double> ys;
    for (std::uint32_t k = window.lo; k <= window.hi; ++k) {
      ks.push_back(static_cast<double>(k));
      ys.push_back(y[k - lo]);
    }
    DecayFit fit = fit_power_law(ks, ys, kTangentSlope);
    fit.window = window;
    fits[curve] = fit_json(fit);
  }
  d.meta["series"] = series_json(s);
  d.meta["fit_window"] = {window.lo, window.hi};
  d.meta["fits"] = fits;
  d.meta["tangents"] = tangents;
  const BoundCheck bound = check_decay_bound(s, spec.params_list[0].rho, spec.params_list[0].epsilon);
  d.meta["decay_bound"] = {{"theta", bound.theta},
                           {"constant", bound.fit.empirical_constant},
                           {"trend", to_string(bound.trend)}};
  return d;
}

// Figure 4: c_k((2 + 3 beta)/4, beta) against -0.4 k^-3/4.
Dataset family_2plus3beta(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 1);
  const unsigned bits = ctx.precision_bits;
  SeriesFactory factory(spec, ctx);
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", 1, spec.k_max));
  Json per_beta = Json::array();
  for (const auto& p : spec.params_list) {
    const CoefficientSeries s = factory.make(p, spec.k_max);
    d.columns.push_back(slice("c_k_beta" + label(p.beta), s, 1, spec.k_max));
    std::uint32_t negative = 0;
    std::uint32_t above = 0;
    for (std::uint32_t k = 1; k <= spec.k_max; ++k) {
      const double c = s.values[k].to_double();
      negative += c < 0.0 ? 1 : 0;
      above += c >= kFamilyReference * std::pow(static_cast<double>(k), -0.75) ? 1 : 0;
    }
    Json j = series_json(s);
    j["theta"] = decay_exponent(p, 0.5, 0.0);
    j["negative_count"] = negative;
    j["above_reference_count"] = above;
    per_beta.push_back(j);
  }
  Column ref{"reference", {}, {}};
  const Real a(kFamilyReference, bits);
  const Real e(-0.75, bits);
  for (std::uint32_t k = 1; k <= spec.k_max; ++k) {
    ref.reals.push_back(a * Real::pow(Real(static_cast<long>(k), bits), e));
  }
  d.columns.push_back(std::move(ref));
  d.meta["reference"] = "-0.4 k^(-3/4)";
  d.meta["series"] = per_beta;
  return d;
}

// Figure 5: alpha = 7/2 and growing beta, with the exact beta -> inf limit.
Dataset beta_limit(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 1);
  SeriesFactory factory(spec, ctx);
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", 1, spec.k_max));
  const CoefficientSeries limit = beta_limit_series(spec.params_list[0].alpha, spec.k_max, ctx);
  Json per_beta = Json::array();
  for (const auto& p : spec.params_list) {
    const CoefficientSeries s = factory.make(p, spec.k_max);
    d.columns.push_back(slice("c_k_beta" + label(p.beta), s, 1, spec.k_max));
    double worst = 0.0;
    for (std::uint32_t k = 1; k <= spec.k_max; ++k) {
      worst = std::max(worst, std::abs((s.values[k] - limit.values[k]).to_double()));
    }
    Json j = series_json(s);
    j["max_abs_deviation_from_limit"] = worst;
    per_beta.push_back(j);
  }
  d.columns.push_back(slice("limit", limit, 1, spec.k_max));
  d.meta["limit"] = limit.values[1].to_string(30);
  d.meta["c_0"] = limit.values[0].to_string(30);
  d.meta["series"] = per_beta;
  return d;
}

// Figure 6: c_k against its Poisson average over c_0..c_2k.
Dataset poisson(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 2);
  SeriesFactory factory(spec, ctx);
  const CoefficientSeries s = factory.make(spec.params_list[0], spec.k_max);
  const std::uint32_t hi = spec.k_max / 2;
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", 1, hi));
  d.columns.push_back(slice("c_k", s, 1, hi));
  Column pois{"poisson", {}, {}};
  Column dev{"rel_deviation", {}, {}};
  for (std::uint32_t k = 1; k <= hi; ++k) {
    Real p = poisson_approx(s, k, ctx);
    dev.reals.push_back(Real::abs((p - s.values[k]) / s.values[k]));
    pois.reals.push_back(std::move(p));
  }
  // last k at which the deviation is >= 1e-2; agreement holds beyond it
  std::uint32_t last_bad = 0;
  double worst_from_40 = 0.0;
  for (std::uint32_t k = 1; k <= hi; ++k) {
    const double v = dev.reals[k - 1].to_double();
    if (v >= 1e-2) last_bad = k;
    if (k >= 40) worst_from_40 = std::max(worst_from_40, v);
  }
  d.columns.push_back(std::move(pois));
  d.columns.push_back(std::move(dev));
  d.meta["series"] = series_json(s);
  d.meta["poisson_k_max"] = hi;
  d.meta["agreement_1e-2_from_k"] = last_bad + 1;
  d.meta["max_rel_deviation_k_ge_40"] = worst_from_40;
  return d;
}

// Figures 7-9: alpha = beta = 2, 3, 4 against slope -3/4, and the ordering
// |c_k(2,2)| <= |c_k(3,3)| <= |c_k(4,4)|.
Dataset critical_strip(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 20);
  const unsigned bits = ctx.precision_bits;
  SeriesFactory factory(spec, ctx);
  const std::uint32_t lo = 2;
  const std::uint32_t hi = spec.k_max;
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", lo, hi));
  d.columns.push_back(log_k_column(lo, hi, bits));
  std::vector<CoefficientSeries> all;
  Json per = Json::array();
  for (const auto& p : spec.params_list) {
    all.push_back(factory.make(p, spec.k_max));
    const auto& s = all.back();
    const std::string tag = label(p.alpha) + "_" + label(p.beta);
    d.columns.push_back(slice("c_k_" + tag, s, lo, hi));
    d.columns.push_back(log_scaled("log_abs_c_k_" + tag, s, lo, hi, 0, bits));
    Json t;
    d.columns.push_back(tangent_line("tangent_" + tag, d.columns[1], d.columns.back(), t, bits));
    const BoundCheck bound = check_decay_bound(s, p.rho, p.epsilon);
    Json j = series_json(s);
    j["fit"] = fit_json(bound.fit);
    j["theta"] = bound.theta;
    j["trend"] = to_string(bound.trend);
    j["tangent"] = t;
    per.push_back(j);
  }
  const KWindow order_window{std::min<std::uint32_t>(10, hi), hi};
  const OrderingVerdict verdict = compare_series_magnitudes(all, order_window);
  Column chain = integer_column("chain_holds", lo, hi);
  for (std::uint32_t k = lo; k <= hi; ++k) {
    chain.integers[k - lo] = k >= order_window.lo && verdict.holds[k - order_window.lo] ? 1 : 0;
  }
  d.columns.push_back(std::move(chain));
  d.meta["series"] = per;
  d.meta["ordering_window"] = {order_window.lo, order_window.hi};
  d.meta["ordering_fraction"] = verdict.fraction;
  return d;
}

// Figure 10: f(k) = sum mu(n) n^-3/2 e^-k/n against g(k) = -0.07/k.
Dataset hardy_littlewood(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  require_k_max(spec, 1);
  const unsigned bits = ctx.precision_bits;
  SeriesFactory factory(spec, ctx);
  const RieszSum kernel(spec.params_list[0], factory.table(), ctx);
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", 1, spec.k_max));
  Column f{"f_k", {}, {}};
  Column g{"g_k", {}, {}};
  Column fk{"f_k_times_k", {}, {}};
  double worst = 0.0;
  const Real ref(kRieszReference, bits);
  for (std::uint32_t k = 1; k <= spec.k_max; ++k) {
    const Real kr(static_cast<long>(k), bits);
    Real v = kernel.evaluate(kr);
    Real scaled = v * kr;
    if (k >= 50) worst = std::max(worst, std::abs(scaled.to_double()));
    f.reals.push_back(std::move(v));
    g.reals.push_back(ref / kr);
    fk.reals.push_back(std::move(scaled));
  }
  d.columns.push_back(std::move(f));
  d.columns.push_back(std::move(g));
  d.columns.push_back(std::move(fk));
  d.meta["params"] = params_json(spec.params_list[0]);
  d.meta["n_max"] = spec.n_max;
  d.meta["truncation_tail_bound"] = kernel.tail_bound().to_string(6);
  d.meta["reference"] = "-0.07 / k";
  d.meta["max_abs_f_k_times_k_k_ge_50"] = worst;
  return d;
}

// Large-beta limit values; only alpha > 1 is computable.
Dataset alpha_half_limit(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  require_params(spec, 1);
  const double alpha = spec.params_list[0].alpha;
  const CoefficientSeries s = beta_limit_series(alpha, spec.k_max, ctx);
  Dataset d;
  d.name = spec.name;
  d.columns.push_back(integer_column("k", 0, spec.k_max));
  d.columns.push_back(slice("c_k_limit", s, 0, spec.k_max));
  const Real limit = inv_zeta_minus_one(alpha, ctx);
  d.meta["alpha"] = alpha;
  d.meta["inv_zeta_minus_one"] = limit.to_string(30);
  d.meta["abs_inv_zeta_minus_one"] = Real::abs(limit).to_string(30);
  d.meta["finite_beta_at_alpha_half"] = "not computed: the Moebius and binomial-zeta series need alpha > 1";
  return d;
}

FamilyParams with_rho(double alpha, double beta, double rho) {
  FamilyParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.rho = rho;
  return p;
}

}  // namespace

const std::vector<std::string>& experiment_catalog() {
  static const std::vector<std::string> names = {
      "riesz-7half-4",  "family-2plus3beta",     "beta-limit",      "poisson-approx",
      "critical-strip", "hardy-littlewood-32-1", "alpha-half-limit"};
  return names;
}

ExperimentSpec default_experiment(const std::string& name) {
  ExperimentSpec spec;
  spec.name = name;
  if (name == "riesz-7half-4") {
    spec.params_list = {with_rho(3.5, 4.0, 0.5)};
    spec.k_max = 1000;
    spec.method = Method::MobiusTruncated;
  } else if (name == "family-2plus3beta") {
    for (int b = 1; b <= 6; ++b) spec.params_list.push_back(three_quarter_family(b));
    spec.k_max = 100;
  } else if (name == "beta-limit") {
    for (double b : {4.0, 5.0, 6.0, 7.0, 20.0}) spec.params_list.push_back(with_rho(3.5, b, 0.5));
    spec.k_max = 100;
  } else if (name == "poisson-approx") {
    spec.params_list = {with_rho(3.5, 4.0, 0.5)};
    spec.k_max = 1000;  // c_0..c_1000, Poisson column for k <= 500
    spec.method = Method::MobiusTruncated;
  } else if (name == "critical-strip") {
    spec.params_list = {with_rho(2, 2, 0.5), with_rho(3, 3, 0.75), with_rho(4, 4, 1.0)};
    spec.k_max = 500;
  } else if (name == "hardy-littlewood-32-1") {
    spec.params_list = {with_rho(1.5, 1.0, 0.5)};
    spec.k_max = 600;
    spec.method = Method::MobiusTruncated;
  } else if (name == "alpha-half-limit") {
    // the large-beta value quoted for the alpha = 1/2 discussion is 1/zeta(3/2) - 1
    spec.params_list = {with_rho(1.5, std::numeric_limits<double>::infinity(), 0.5)};
    spec.k_max = 10;
    spec.method = Method::BetaLimit;
  } else {
    std::string list;
    for (const auto& n : experiment_catalog()) list += "\n  " + n;
    throw CatalogError("unknown experiment '" + name + "'; valid names:" + list);
  }
  return spec;
}

Dataset run_experiment(const ExperimentSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  const std::string& n = spec.name;
  if (n == "riesz-7half-4") return riesz_7half_4(spec, ctx);
  if (n == "family-2plus3beta") return family_2plus3beta(spec, ctx);
  if (n == "beta-limit") return beta_limit(spec, ctx);
  if (n == "poisson-approx") return poisson(spec, ctx);
  if (n == "critical-strip") return critical_strip(spec, ctx);
  if (n == "hardy-littlewood-32-1") return hardy_littlewood(spec, ctx);
  if (n == "alpha-half-limit") return alpha_half_limit(spec, ctx);
  default_experiment(n);  // throws CatalogError with the list
  throw CatalogError("unknown experiment '" + n + "'");
}

}  // namespace riesz
