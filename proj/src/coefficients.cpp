#include "riesz/coefficients.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.hpp"
#include "riesz/errors.hpp"
#include "riesz/zeta.hpp"

namespace riesz {

namespace {

constexpr unsigned kGuardBits = 32;
constexpr long kTrustedBits = 48;

void require_alpha_above_one(double alpha, const char* what) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(what) + ": alpha must be > 1 (got " + std::to_string(alpha) +
                      "); the Moebius series does not converge absolutely");
  }
}

bool is_small_integer(double v) {
  return v >= 0.0 && v <= 1.0e6 && std::floor(v) == v;
}

// n^-e at `bits`; integer exponents go through exact integer powering.
Real inverse_power(unsigned long n, double e, unsigned bits) {
  Real out(bits);
  if (is_small_integer(e)) {
    mpfr_ui_pow_ui(out.raw(), n, static_cast<unsigned long>(e), MPFR_RNDN);
    mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
  } else {
    const Real neg(-e, bits);
    mpfr_ui_pow(out.raw(), n, neg.raw(), MPFR_RNDN);
  }
  return out;
}

}  // namespace

void FamilyParams::validate() const {
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  if (!(beta > 0.0)) throw InvalidArgument("beta must be > 0");
  if (!(rho >= 0.5) || !std::isfinite(rho)) throw InvalidArgument("rho must lie in [1/2, inf)");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be >= 0");
}

FamilyParams three_quarter_family(double beta) {
  FamilyParams p;
  p.beta = beta;
  p.alpha = (2.0 + 3.0 * beta) / 4.0;
  return p;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::MobiusTruncated: return "mobius";
    case Method::BinomialZeta: return "binomial";
    case Method::BetaLimit: return "beta-limit";
  }
  return "unknown";
}

Real power_tail_bound(double alpha, std::uint32_t n, unsigned bits) {
  require_alpha_above_one(alpha, "power_tail_bound");
  const Real a(alpha, bits);
  const Real one(1L, bits);
  return Real::ui_pow(n, one - a) / (a - one);
}

// ------------------------------------------------------------------ Moebius

MobiusSum::MobiusSum(const FamilyParams& params, const MobiusTable& table,
                     const PrecisionContext& ctx)
    : limit_(table.limit()), bits_(ctx.precision_bits + 16) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "ck_mobius");
  if (table.limit() < 2) throw InvalidArgument("ck_mobius: Moebius table limit must be >= 2");
  for (std::uint32_t n = 1; n <= limit_; ++n) {
    const int mu = table[n];
    if (mu == 0) continue;
    Real weight = inverse_power(n, params.alpha, bits_);
    Real base(1L, bits_);
    base -= inverse_power(n, params.beta, bits_);
    terms_.push_back(Term{n, mu, std::move(weight), std::move(base)});
  }
  tail_ = power_tail_bound(params.alpha, limit_);
}

Real MobiusSum::evaluate(std::uint32_t k) const {
  Real sum(0L, bits_);
  Real term(bits_);
  for (const Term& t : terms_) {
    mpfr_pow_ui(term.raw(), t.base.raw(), k, MPFR_RNDN);
    mpfr_mul(term.raw(), term.raw(), t.weight.raw(), MPFR_RNDN);
    if (t.mu > 0) {
      mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    }
  }
  return Real(sum, bits_ - 16);
}

TruncatedSum ck_mobius(const FamilyParams& params, std::uint32_t k, const MobiusTable& table,
                       const PrecisionContext& ctx) {
  const MobiusSum kernel(params, table, ctx);
  return {kernel.evaluate(k), kernel.tail_bound(), table.limit()};
}

// ------------------------------------------------------------ binomial-zeta

unsigned binomial_precision_floor(std::uint32_t k) { return k + 64; }

AlternatingSum alternating_binomial_sum(std::span<const Real> values, std::uint32_t k,
                                        unsigned bits) {
  if (values.size() < static_cast<std::size_t>(k) + 1) {
    throw InvalidArgument("alternating_binomial_sum: need k+1 values");
  }
  Real sum(0L, bits);
  Real magnitude(0L, 64);
  Real term(bits);
  Real abs_term(64);
  mpz_class binom = 1;  // C(k, j)
  for (std::uint32_t j = 0; j <= k; ++j) {
    mpfr_mul_z(term.raw(), values[j].raw(), binom.get_mpz_t(), MPFR_RNDN);
    if (j % 2 == 0) {
      mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    }
    mpfr_abs(abs_term.raw(), term.raw(), MPFR_RNDU);
    mpfr_add(magnitude.raw(), magnitude.raw(), abs_term.raw(), MPFR_RNDU);
    if (j < k) {
      binom *= (k - j);
      binom /= (j + 1);  // exact: C(k, j+1) = C(k, j) (k - j) / (j + 1)
    }
  }
  return {std::move(sum), std::move(magnitude)};
}

BinomialZetaKernel::BinomialZetaKernel(const FamilyParams& params, std::uint32_t k_max,
                                       unsigned bits) {
  params.validate();
  require_alpha_above_one(params.alpha, "ck_binomial");
  PrecisionContext ctx;
  ctx.precision_bits = bits;
  inverse_zeta_.reserve(static_cast<std::size_t>(k_max) + 1);
  const Real alpha(params.alpha, 64);
  const Real beta(params.beta, 64);
  for (std::uint32_t j = 0; j <= k_max; ++j) {
    // alpha + beta j is exact in 64 + 32 bits for double inputs and j < 2^32
    Real s(alpha, 128);
    s += Real(beta, 128) * Real(static_cast<long>(j), 128);
    inverse_zeta_.push_back(inv_zeta(s, ctx));
  }
}

Real BinomialZetaKernel::evaluate(std::uint32_t k, unsigned bits) const {
  if (static_cast<std::size_t>(k) >= inverse_zeta_.size()) {
    throw InvalidArgument("BinomialZetaKernel: k beyond precomputed range");
  }
  const unsigned floor = binomial_precision_floor(k);
  if (bits < floor) {
    throw InsufficientPrecision("ck_binomial: k = " + std::to_string(k) + " needs at least " +
                                    std::to_string(floor) + " bits, context has " +
                                    std::to_string(bits),
                                floor);
  }
  const AlternatingSum acc = alternating_binomial_sum(inverse_zeta_, k, bits + kGuardBits);
  // Bits lost to cancellation: log2(sum |terms| / |result|).
  if (acc.value.is_zero()) {
    throw InsufficientPrecision("ck_binomial: result cancelled to zero at k = " + std::to_string(k),
                                bits * 2);
  }
  const long lost = acc.magnitude.exponent2() - acc.value.exponent2() + 1;
  const long trusted = static_cast<long>(bits) - lost;
  if (trusted < kTrustedBits) {
    const auto required = static_cast<unsigned>(static_cast<long>(bits) + kTrustedBits - trusted + 8);
    throw InsufficientPrecision("ck_binomial: only " + std::to_string(trusted) +
                                    " bits survive cancellation at k = " + std::to_string(k),
                                required);
  }
  return Real(acc.value, bits);
}

Real ck_binomial(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "ck_binomial");
  const unsigned floor = binomial_precision_floor(k);
  if (ctx.precision_bits < floor) {
    throw InsufficientPrecision("ck_binomial: k = " + std::to_string(k) + " needs at least " +
                                    std::to_string(floor) + " bits, context has " +
                                    std::to_string(ctx.precision_bits),
                                floor);
  }
  const BinomialZetaKernel kernel(params, k, ctx.precision_bits + kGuardBits);
  return kernel.evaluate(k, ctx.precision_bits);
}

// ------------------------------------------------------------ batch driver

CoefficientSeries ck_series(const FamilyParams& params, std::uint32_t k_max,
                            const SeriesOptions& options, const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  if (options.method == Method::BetaLimit) {
    return beta_limit_series(params.alpha, k_max, ctx);
  }

  CoefficientSeries out;
  out.params = params;
  out.k_max = k_max;
  out.method = options.method;
  out.values.resize(static_cast<std::size_t>(k_max) + 1);
  const std::size_t count = out.values.size();

  if (options.method == Method::MobiusTruncated) {
    if (options.table == nullptr) {
      throw InvalidArgument("ck_series: the Moebius method needs a MobiusTable");
    }
    const MobiusSum kernel(params, *options.table, ctx);
    detail::parallel_for(count, options.threads, [&](std::size_t k) {
      out.values[k] = kernel.evaluate(static_cast<std::uint32_t>(k));
    });
    out.n_max = options.table->limit();
    out.precision_bits_used = ctx.precision_bits;
    out.truncation_tail_bound = kernel.tail_bound();
    return out;
  }

  // BinomialZeta
  require_alpha_above_one(params.alpha, "ck_binomial");
  auto bits_for = [&](std::uint32_t k) {
    return options.policy == PrecisionPolicy::RaisePerTerm
               ? std::max(ctx.precision_bits, binomial_precision_floor(k))
               : ctx.precision_bits;
  };
  if (options.policy == PrecisionPolicy::Fixed &&
      ctx.precision_bits < binomial_precision_floor(k_max)) {
    throw InsufficientPrecision("ck_series: k_max = " + std::to_string(k_max) + " needs at least " +
                                    std::to_string(binomial_precision_floor(k_max)) + " bits",
                                binomial_precision_floor(k_max));
  }
  const unsigned top_bits = bits_for(k_max);
  const BinomialZetaKernel kernel(params, k_max, top_bits + kGuardBits);
  detail::parallel_for(count, options.threads, [&](std::size_t k) {
    const auto kk = static_cast<std::uint32_t>(k);
    out.values[k] = kernel.evaluate(kk, bits_for(kk));
  });
  out.precision_bits_used = top_bits;
  out.truncation_tail_bound = Real(0L, 64);
  return out;
}

CoefficientSeries beta_limit_series(double alpha, std::uint32_t k_max,
                                    const PrecisionContext& ctx) {
  ctx.validate();
  require_alpha_above_one(alpha, "beta_limit_series");
  CoefficientSeries out;
  out.params.alpha = alpha;
  out.params.beta = std::numeric_limits<double>::infinity();
  out.k_max = k_max;
  out.method = Method::BetaLimit;
  out.precision_bits_used = ctx.precision_bits;
  out.truncation_tail_bound = Real(0L, 64);
  const Real a(alpha, 64);
  const Real limit = inv_zeta_minus_one(a, ctx);
  out.values.reserve(static_cast<std::size_t>(k_max) + 1);
  out.values.push_back(inv_zeta(a, ctx));
  for (std::uint32_t k = 1; k <= k_max; ++k) out.values.push_back(limit);
  return out;
}

// -------------------------------------------------------------------- q_k

TruncatedSum qk_direct(const FamilyParams& params, std::uint32_t k, std::uint32_t n_max,
                       const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "qk_direct");
  if (n_max < 1) throw InvalidArgument("qk_direct: n_max must be >= 1");
  const unsigned bits = ctx.precision_bits + 16;
  Real sum(0L, bits);
  Real base(bits);
  Real term(bits);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const Real weight = inverse_power(n, params.alpha, bits);
    const Real decay = inverse_power(n, params.beta, bits);
    mpfr_ui_sub(base.raw(), 1, decay.raw(), MPFR_RNDN);
    mpfr_pow_ui(term.raw(), base.raw(), k, MPFR_RNDN);
    mpfr_mul(term.raw(), term.raw(), weight.raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }
  return {Real(sum, ctx.precision_bits), power_tail_bound(params.alpha, n_max), n_max};
}

Real qk_beta_asymptotic(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "qk_beta_asymptotic");
  const unsigned bits = ctx.precision_bits + 16;
  const Real beta(params.beta, bits);
  const Real lambda = (Real(params.alpha, bits) - Real(1L, bits)) / beta;
  const Real mu(static_cast<long>(k) + 1, bits);
  // B(lambda, mu) = Gamma(lambda) Gamma(mu) / Gamma(lambda + mu)
  const Real log_b = Real::lgamma(lambda) + Real::lgamma(mu) - Real::lgamma(lambda + mu);
  return Real(Real::exp(log_b) / beta, ctx.precision_bits);
}

Real qk_power_asymptotic(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "qk_power_asymptotic");
  if (k == 0) throw InvalidArgument("qk_power_asymptotic: k must be >= 1");
  const unsigned bits = ctx.precision_bits + 16;
  const Real beta(params.beta, bits);
  const Real lambda = (Real(params.alpha, bits) - Real(1L, bits)) / beta;
  Real kr(static_cast<long>(k), bits);
  Real out = Real::gamma(lambda) / beta * Real::pow(kr, -lambda);
  return Real(out, ctx.precision_bits);
}

// -------------------------------------------------------------------- psi

namespace {

// 1/zeta(alpha + beta k) for increasing k, each at a caller-chosen
// relative precision. Large arguments are summed directly from running
// powers n^-(alpha + beta k); small ones go through zeta_real.
class InverseZetaSweep {
 public:
  static constexpr std::uint32_t kMaxDirect = 32;

  InverseZetaSweep(const FamilyParams& params, unsigned bits, const PrecisionContext& ctx)
      : params_(params), bits_(bits), ctx_(ctx) {
    for (std::uint32_t n = 1; n <= kMaxDirect; ++n) {
      step_.push_back(inverse_power(n, params.beta, bits_));
      current_.push_back(inverse_power(n, params.alpha, bits_));
      at_k_.push_back(0);
    }
  }

  Real at(std::uint32_t k, unsigned rel_bits) {
    const double s = params_.alpha + params_.beta * static_cast<double>(k);
    // smallest N with N^(1-s)/(s-1) < 2^-(rel_bits + 2)
    const double log2_n = (static_cast<double>(rel_bits) + 2.0 - std::log2(s - 1.0)) / (s - 1.0);
    const double n_needed = std::ceil(std::exp2(std::max(log2_n, 1.0)));
    if (n_needed > kMaxDirect) {
      Real arg(params_.alpha, 128);
      arg += Real(params_.beta, 128) * Real(static_cast<long>(k), 128);
      return inv_zeta(arg, ctx_.with_bits(rel_bits));
    }
    const auto n_max = static_cast<std::uint32_t>(n_needed);
    Real sum(1L, rel_bits + 8);
    Real jump(bits_);
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      const std::size_t i = n - 1;
      if (at_k_[i] != k) {
        mpfr_pow_ui(jump.raw(), step_[i].raw(), k - at_k_[i], MPFR_RNDN);
        mpfr_mul(current_[i].raw(), current_[i].raw(), jump.raw(), MPFR_RNDN);
        at_k_[i] = k;
      }
      mpfr_add(sum.raw(), sum.raw(), current_[i].raw(), MPFR_RNDN);
    }
    Real out(rel_bits);
    mpfr_ui_div(out.raw(), 1, sum.raw(), MPFR_RNDN);
    return out;
  }

 private:
  FamilyParams params_;
  unsigned bits_;
  PrecisionContext ctx_;
  std::vector<Real> step_;     // n^-beta
  std::vector<Real> current_;  // n^-(alpha + beta at_k)
  std::vector<std::uint32_t> at_k_;
};

}  // namespace

PsiEvaluation psi_eval(const Real& x, const FamilyParams& params, const PrecisionContext& ctx) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "psi_eval");
  if (x.sign() < 0 || !x.is_finite()) throw DomainError("psi_eval: x must be >= 0");

  const unsigned p = ctx.precision_bits;
  const double xd = x.to_double();
  // max_k x^k/k! <= e^x
  const auto growth = static_cast<unsigned>(std::ceil(xd * std::numbers::log2e)) + 1;
  const unsigned acc_bits = p + growth + 48;

  InverseZetaSweep inverse_zeta(params, acc_bits + 32, ctx);
  const Real xw(x, acc_bits);
  Real term(1L, acc_bits);  // x^k / k!
  Real sum(0L, acc_bits);
  Real product(acc_bits);
  Real next_bound(64);

  std::uint32_t k = 0;
  for (;; ++k) {
    if (k >= ctx.max_terms) {
      throw InvalidArgument("psi_eval: series did not settle within max_terms");
    }
    // Term k needs its zeta factor to ~(log2 term + p + guard) relative bits.
    const long log2_term = term.is_zero() ? 0 : term.exponent2();
    const long rel = std::clamp<long>(log2_term + static_cast<long>(p) + 40, 64,
                                      static_cast<long>(acc_bits));
    const Real inv = inverse_zeta.at(k, static_cast<unsigned>(rel));
    mpfr_mul(product.raw(), term.raw(), inv.raw(), MPFR_RNDN);
    if (k % 2 == 0) {
      mpfr_add(sum.raw(), sum.raw(), product.raw(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.raw(), sum.raw(), product.raw(), MPFR_RNDN);
    }

    term *= xw;
    term.div_ui(k + 1);
    // The majorant x^(K+1)/(K+1)! only bounds the tail once terms shrink.
    if (static_cast<double>(k + 1) > xd) {
      if (term.is_zero()) break;
      const long floor_exp = sum.is_zero() ? -static_cast<long>(2 * p)
                                           : sum.exponent2() - static_cast<long>(p) - 1;
      if (term.exponent2() < floor_exp) break;
    }
  }
  return {Real(x), params, Real(sum, p), k + 1};
}

// ------------------------------------------------------ exponential weights

RieszSum::RieszSum(const FamilyParams& params, const MobiusTable& table,
                   const PrecisionContext& ctx)
    : bits_(ctx.precision_bits + 16) {
  ctx.validate();
  params.validate();
  require_alpha_above_one(params.alpha, "riesz_f");
  if (table.limit() < 2) throw InvalidArgument("riesz_f: Moebius table limit must be >= 2");
  for (std::uint32_t n = 1; n <= table.limit(); ++n) {
    const int mu = table[n];
    if (mu == 0) continue;
    terms_.push_back(Term{mu, inverse_power(n, params.alpha, bits_),
                          inverse_power(n, params.beta, bits_)});
  }
  tail_ = power_tail_bound(params.alpha, table.limit());
}

Real RieszSum::evaluate(const Real& k) const {
  if (k.sign() < 0 || !k.is_finite()) throw DomainError("riesz_f: k must be >= 0");
  const Real kw(k, bits_);
  Real sum(0L, bits_);
  Real term(bits_);
  for (const Term& t : terms_) {
    mpfr_mul(term.raw(), kw.raw(), t.rate.raw(), MPFR_RNDN);
    mpfr_neg(term.raw(), term.raw(), MPFR_RNDN);
    mpfr_exp(term.raw(), term.raw(), MPFR_RNDN);
    mpfr_mul(term.raw(), term.raw(), t.weight.raw(), MPFR_RNDN);
    if (t.mu > 0) {
      mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    }
  }
  return Real(sum, bits_ - 16);
}

TruncatedSum riesz_f(const Real& k, const FamilyParams& params, const MobiusTable& table,
                     const PrecisionContext& ctx) {
  const RieszSum kernel(params, table, ctx);
  return {kernel.evaluate(k), kernel.tail_bound(), table.limit()};
}

// ---------------------------------------------------------------- Poisson

Real poisson_approx(const CoefficientSeries& source, std::uint32_t k, const PrecisionContext& ctx) {
  ctx.validate();
  if (k == 0) throw InvalidArgument("poisson_approx: k must be >= 1");
  const std::uint64_t needed = 2ull * k;
  if (source.values.size() < needed + 1) {
    throw InvalidArgument("poisson_approx: k = " + std::to_string(k) + " needs a series with k_max >= " +
                          std::to_string(needed) + ", got k_max = " + std::to_string(source.k_max));
  }
  const auto uplift = static_cast<unsigned>(std::ceil(static_cast<double>(k) * std::numbers::log2e)) + 64;
  const unsigned bits = ctx.precision_bits + uplift;
  const Real kr(static_cast<long>(k), bits);
  Real weight = Real::exp(-kr);  // e^-k k^p / p! at p = 0
  Real sum(0L, bits);
  Real term(bits);
  for (std::uint64_t p = 0; p <= needed; ++p) {
    mpfr_mul(term.raw(), weight.raw(), source.values[p].raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
    weight *= kr;
    weight.div_ui(static_cast<unsigned long>(p + 1));
  }
  return Real(sum, ctx.precision_bits);
}

}  // namespace riesz
