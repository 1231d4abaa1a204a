#include "riesz/pochhammer.hpp"

#include <cmath>
#include <limits>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

// p <- p (1 - x/r)
void step(Complex& p, const Complex& x, std::uint32_t r) {
  const unsigned bits = p.precision();
  Complex factor(Real(x.re, bits), Real(x.im, bits));
  factor.re /= static_cast<long>(r);
  factor.im /= static_cast<long>(r);
  mpfr_ui_sub(factor.re.raw(), 1, factor.re.raw(), MPFR_RNDN);
  mpfr_neg(factor.im.raw(), factor.im.raw(), MPFR_RNDN);
  p *= factor;
}

Complex unit(unsigned bits) { return Complex(Real(1L, bits), Real(0L, bits)); }

}  // namespace

Complex pochhammer_eval(std::uint32_t k, const Complex& x, const PrecisionContext& ctx) {
  ctx.validate();
  Complex p = unit(ctx.precision_bits);
  for (std::uint32_t r = 1; r <= k; ++r) step(p, x, r);
  return p;
}

std::vector<Complex> pochhammer_sequence(std::uint32_t k_max, const Complex& x,
                                         const PrecisionContext& ctx) {
  ctx.validate();
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  Complex p = unit(ctx.precision_bits);
  out.push_back(p);
  for (std::uint32_t r = 1; r <= k_max; ++r) {
    step(p, x, r);
    out.push_back(p);
  }
  return out;
}

Complex pochhammer_argument(const Complex& s, const FamilyParams& params, unsigned bits) {
  const Real alpha(params.alpha, bits);
  const Real beta(params.beta, bits);
  Complex w(Real(s.re, bits) - alpha, Real(s.im, bits));
  w /= beta;
  w.re += Real(1L, bits);
  return w;
}

std::vector<PhiPartialSum> phi_partial_sums(const Complex& s, const FamilyParams& params,
                                            std::uint32_t terms, const CoefficientSeries& coeffs,
                                            const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  if (coeffs.params.alpha != params.alpha || coeffs.params.beta != params.beta) {
    throw InvalidArgument("phi_partial: coefficients were computed for other (alpha, beta)");
  }
  if (coeffs.values.size() < static_cast<std::size_t>(terms) + 1) {
    throw InvalidArgument("phi_partial: need c_0..c_" + std::to_string(terms) + ", series stops at " +
                          std::to_string(coeffs.k_max));
  }
  const unsigned bits = ctx.precision_bits + 16;
  const Complex w = pochhammer_argument(s, params, bits);

  std::vector<PhiPartialSum> out;
  out.reserve(static_cast<std::size_t>(terms) + 1);
  Complex p = unit(bits);
  Complex sum(bits);
  for (std::uint32_t k = 0; k <= terms; ++k) {
    if (k > 0) step(p, w, k);
    Complex term = p;
    term *= coeffs.values[k];
    sum += term;
    PhiPartialSum partial;
    partial.s = s;
    partial.params = params;
    partial.terms = k;
    partial.value = Complex(Real(sum.re, ctx.precision_bits), Real(sum.im, ctx.precision_bits));
    partial.term_tail_estimate = Real(term.abs(), 64);
    out.push_back(std::move(partial));
  }
  return out;
}

PhiPartialSum phi_partial(const Complex& s, const FamilyParams& params, std::uint32_t terms,
                          const CoefficientSeries& coeffs, const PrecisionContext& ctx) {
  auto all = phi_partial_sums(s, params, terms, coeffs, ctx);
  return std::move(all.back());
}

DecayFit pochhammer_bound_probe(const Complex& s, KWindow window, const PrecisionContext& ctx) {
  ctx.validate();
  if (window.lo < 2 || window.hi < window.lo) {
    throw InvalidArgument("pochhammer_bound_probe: window must satisfy 2 <= lo <= hi");
  }
  const double sigma = s.re.to_double();
  std::vector<double> ks;
  std::vector<double> logs;
  ks.reserve(window.hi - window.lo + 1);
  logs.reserve(window.hi - window.lo + 1);

  Complex p = unit(ctx.precision_bits);
  for (std::uint32_t r = 1; r <= window.hi; ++r) {
    step(p, s, r);
    if (r >= window.lo) {
      ks.push_back(static_cast<double>(r));
      logs.push_back(log_abs(p.abs()));
    }
  }

  bool all_zero = true;
  for (double v : logs) all_zero = all_zero && std::isinf(v);
  if (all_zero) {
    DecayFit fit;
    fit.window = window;
    fit.slope_target = -sigma;
    fit.points_masked = static_cast<std::uint32_t>(logs.size());
    fit.degenerate = true;
    return fit;
  }
  DecayFit fit = fit_power_law(ks, logs, -sigma);
  fit.window = window;
  return fit;
}

}  // namespace riesz
