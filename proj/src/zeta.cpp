#include "riesz/zeta.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr unsigned kGuardBits = 32;
constexpr unsigned kBoundBits = 64;

// B_2, B_4, ..., B_2n from the tangent numbers T_1..T_n, all integer work:
// B_2k = (-1)^(k-1) * 2k * T_k / (4^k (4^k - 1)).
std::vector<mpq_class> even_bernoulli_upto(unsigned n) {
  std::vector<mpz_class> t(n + 1);
  t[1] = 1;
  for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (unsigned k = 2; k <= n; ++k) {
    for (unsigned j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  std::vector<mpq_class> out(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpq_class b(2 * k * t[k], four_k * (four_k - 1));
    b.canonicalize();
    out[k] = (k % 2 == 1) ? b : mpq_class(-b);
  }
  return out;
}

class BernoulliCache {
 public:
  // B_2j for 1 <= j.
  mpq_class even(unsigned j) {
    std::lock_guard lock(mutex_);
    if (j >= table_.size()) {
      unsigned n = table_.empty() ? 64u : static_cast<unsigned>(table_.size() - 1);
      while (n < j) n *= 2;
      table_ = even_bernoulli_upto(n);
    }
    return table_[j];
  }

  // Converts B_2..B_2m to reals in one lock acquisition.
  std::vector<Real> even_reals(unsigned m, unsigned bits) {
    even(m);
    std::lock_guard lock(mutex_);
    std::vector<Real> out;
    out.reserve(m + 1);
    out.emplace_back(0L, bits);
    for (unsigned j = 1; j <= m; ++j) {
      Real r(bits);
      mpfr_set_q(r.raw(), table_[j].get_mpq_t(), MPFR_RNDN);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::mutex mutex_;
  std::vector<mpq_class> table_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

struct Evaluation {
  Real value;
  Real bound;  // absolute
};

// Sum over n >= 1 (or n >= 2 with `exclude_one`) of n^-s, to relative
// accuracy 2^-target_bits.
Evaluation zeta_core(const Real& s, unsigned target_bits, bool exclude_one,
                     const PrecisionContext& ctx) {
  const double sd = s.to_double();
  const double t = static_cast<double>(target_bits);

  const unsigned max_corrections = target_bits / 2 + 8;
  const double n_em_d = std::ceil((sd + 2.0 * max_corrections + 1.0) / std::numbers::pi) + 1.0;

  // Smallest N with tail N^(1-s)/(s-1) below 2^-t times the result size
  // (1 for zeta, 2^-s for zeta - 1).
  const double log2_result = exclude_one ? -sd : 0.0;
  double log2_n_dir = (t - log2_result - std::log2(sd - 1.0)) / (sd - 1.0);
  if (log2_n_dir < 1.0) log2_n_dir = 1.0;
  const bool direct = log2_n_dir < 40.0 && std::ceil(std::exp2(log2_n_dir)) <= n_em_d;

  if (direct) {
    const auto n_dir = static_cast<unsigned long>(std::ceil(std::exp2(log2_n_dir)));
    if (n_dir > ctx.max_terms) {
      throw InvalidArgument("zeta: direct summation needs " + std::to_string(n_dir) +
                            " terms, above max_terms");
    }
    const unsigned wp = target_bits + kGuardBits;
    const Real neg_s = -Real(s, wp);
    Real sum(0L, wp);
    for (unsigned long n = exclude_one ? 2 : 1; n <= n_dir; ++n) sum += Real::ui_pow(n, neg_s);

    // sum_{n > N} n^-s <= int_N^inf x^-s dx = N^(1-s)/(s-1)
    Real s_lo(s, kBoundBits);
    Real one_minus_s = Real(1L, kBoundBits) - s_lo;
    Real tail = Real::ui_pow(n_dir, one_minus_s) / (s_lo - Real(1L, kBoundBits));
    Real rounding = Real::abs(Real(sum, kBoundBits));
    rounding.mul_ui(n_dir + 2).mul_2exp(-static_cast<long>(wp));
    return {std::move(sum), tail + rounding};
  }

  const auto n_em = static_cast<unsigned long>(n_em_d);
  if (n_em > ctx.max_terms) {
    throw InvalidArgument("zeta: Euler-Maclaurin needs " + std::to_string(n_em) +
                          " terms, above max_terms");
  }
  // zeta - 1 is formed by cancellation against the n = 1 term, losing
  // about sigma bits.
  const unsigned loss = exclude_one ? static_cast<unsigned>(std::ceil(sd)) + 8 : 0;
  const unsigned wp = target_bits + kGuardBits + loss;
  const Real sw(s, wp);
  const Real neg_s = -sw;
  const Real one(1L, wp);

  Real sum(0L, wp);
  for (unsigned long n = 1; n < n_em; ++n) sum += Real::ui_pow(n, neg_s);

  const Real n_pow = Real::ui_pow(n_em, neg_s);  // N^-s
  Real integral = n_pow;
  integral.mul_ui(n_em);
  integral /= (sw - one);  // N^(1-s)/(s-1)
  sum += integral;
  Real half = n_pow;
  half.mul_2exp(-1);
  sum += half;

  // g_j = s(s+1)...(s+2j-2) N^(-s-2j+1) / (2j)!, correction T_j = B_2j g_j.
  const std::vector<Real> bern = bernoulli_cache().even_reals(max_corrections + 1, wp);
  Real n_sq(static_cast<long>(n_em), wp);
  n_sq *= n_sq;
  Real g = n_pow * sw;
  g.div_ui(n_em);
  g.mul_2exp(-1);

  const Real eps = [&] {
    Real e(Real::abs(sum), kBoundBits);
    e.mul_2exp(-static_cast<long>(target_bits + loss));
    return e;
  }();

  Real first_omitted(kBoundBits);
  bool converged = false;
  unsigned j = 1;
  for (; j <= max_corrections; ++j) {
    Real term = bern[j] * g;
    Real mag(Real::abs(term), kBoundBits);
    if (mag < eps) {
      first_omitted = mag;
      converged = true;
      break;
    }
    sum += term;
    // g_{j+1} = g_j (s+2j-1)(s+2j) / (N^2 (2j+1)(2j+2))
    g *= sw + Real(static_cast<long>(2 * j - 1), wp);
    g *= sw + Real(static_cast<long>(2 * j), wp);
    g /= n_sq;
    g.div_ui(static_cast<unsigned long>(2 * j + 1) * (2 * j + 2));
  }
  if (!converged) {
    // unreachable with N >= (s + 2M)/pi; keep the bound honest regardless
    first_omitted = Real(Real::abs(bern[j > max_corrections ? max_corrections : j] * g), kBoundBits);
  }

  Real rounding = Real::abs(Real(sum, kBoundBits));
  rounding.mul_ui(n_em + 2 * j + 4).mul_2exp(-static_cast<long>(wp));
  Evaluation out{std::move(sum), first_omitted + rounding};
  if (exclude_one) {
    out.value -= one;
  }
  return out;
}

void require_right_of_pole(const Real& sigma, const char* what) {
  if (!sigma.is_finite() || sigma <= Real(1L, 64)) {
    throw DomainError(std::string(what) + ": argument must be > 1, got " + sigma.to_string(17));
  }
}

ZetaValue finish(const Real& sigma, Evaluation eval, unsigned bits) {
  Real value(eval.value, bits);
  Real rounding(Real::abs(Real(value, kBoundBits)));
  rounding.mul_2exp(-static_cast<long>(bits));
  return {Real(sigma), std::move(value), eval.bound + rounding};
}

}  // namespace

mpq_class bernoulli_number(unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return mpq_class(-1, 2);
  if (n % 2 == 1) return 0;
  return bernoulli_cache().even(n / 2);
}

ZetaValue zeta_real(const Real& sigma, const PrecisionContext& ctx) {
  ctx.validate();
  require_right_of_pole(sigma, "zeta_real");
  return finish(sigma, zeta_core(sigma, ctx.precision_bits + 8, false, ctx), ctx.precision_bits);
}

ZetaValue zeta_real(double sigma, const PrecisionContext& ctx) {
  return zeta_real(Real(sigma, 64), ctx);
}

ZetaValue zeta_minus_one(const Real& sigma, const PrecisionContext& ctx) {
  ctx.validate();
  require_right_of_pole(sigma, "zeta_minus_one");
  return finish(sigma, zeta_core(sigma, ctx.precision_bits + 8, true, ctx), ctx.precision_bits);
}

Real inv_zeta_minus_one(const Real& alpha, const PrecisionContext& ctx) {
  ctx.validate();
  require_right_of_pole(alpha, "inv_zeta_minus_one");
  const unsigned wp = ctx.precision_bits + kGuardBits;
  // 1/zeta - 1 = -(zeta - 1)/zeta keeps full relative accuracy as zeta -> 1
  const ZetaValue zm1 = zeta_minus_one(alpha, ctx.with_bits(wp));
  const Real zeta = zm1.value + Real(1L, wp);
  return Real(-(zm1.value / zeta), ctx.precision_bits);
}

Real inv_zeta_minus_one(double alpha, const PrecisionContext& ctx) {
  return inv_zeta_minus_one(Real(alpha, 64), ctx);
}

Real inv_zeta(const Real& s, const PrecisionContext& ctx) {
  const ZetaValue z = zeta_real(s, ctx);
  return Real(1L, ctx.precision_bits) / z.value;
}

}  // namespace riesz
