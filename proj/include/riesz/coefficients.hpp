// The coefficient family
//
//   c_k(alpha, beta) = sum_n mu(n) n^-alpha (1 - n^-beta)^k
//                    = sum_{j=0..k} (-1)^j C(k, j) / zeta(alpha + beta j)
//
// and its companions: the positive-term sum q_k, the Riesz-type function
// psi(x), the exponential-weight sum f(k), the Poisson average of c_p, and
// the beta -> infinity limit.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "riesz/mobius.hpp"
#include "riesz/real.hpp"

namespace riesz {

struct FamilyParams {
  double alpha = 2.0;
  double beta = 2.0;  // +infinity for the large-beta limit series
  double rho = 0.5;
  double epsilon = 0.0;

  /// beta > 0, rho >= 1/2, epsilon >= 0, all finite except beta.
  void validate() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// alpha = (2 + 3 beta)/4, the family whose decay exponent at rho = 1/2 is 3/4.
FamilyParams three_quarter_family(double beta);

enum class Method { MobiusTruncated, BinomialZeta, BetaLimit };

std::string to_string(Method m);

/// A truncated sum together with a majorant of the dropped terms.
struct TruncatedSum {
  Real value;
  Real tail_bound;
  std::uint32_t terms = 0;
};

struct CoefficientSeries {
  FamilyParams params;
  std::uint32_t k_max = 0;
  std::vector<Real> values;  // c_0 .. c_k_max
  Method method = Method::BinomialZeta;
  std::uint32_t n_max = 0;  // MobiusTruncated only
  unsigned precision_bits_used = 0;
  Real truncation_tail_bound;  // 0 unless MobiusTruncated

  [[nodiscard]] const Real& operator[](std::size_t k) const { return values[k]; }
};

/// N^(1-alpha)/(alpha-1): majorant of sum_{n > N} n^-alpha.
Real power_tail_bound(double alpha, std::uint32_t n, unsigned bits = 64);

// ------------------------------------------------------------------ Moebius

/// Precomputed n^-alpha and 1 - n^-beta over squarefree n <= N, shared by
/// every k. Immutable after construction.
class MobiusSum {
 public:
  MobiusSum(const FamilyParams& params, const MobiusTable& table, const PrecisionContext& ctx);

  /// sum_{n <= N} mu(n) n^-alpha (1 - n^-beta)^k, ascending n.
  [[nodiscard]] Real evaluate(std::uint32_t k) const;
  [[nodiscard]] const Real& tail_bound() const { return tail_; }
  [[nodiscard]] std::uint32_t limit() const { return limit_; }

 private:
  struct Term {
    std::uint32_t n;
    int mu;
    Real weight;  // n^-alpha
    Real base;    // 1 - n^-beta
  };
  std::vector<Term> terms_;
  std::uint32_t limit_;
  unsigned bits_;
  Real tail_;
};

/// c_k by the Moebius series truncated at table.limit().
/// Throws DomainError for alpha <= 1, InvalidArgument for a table below 2.
TruncatedSum ck_mobius(const FamilyParams& params, std::uint32_t k, const MobiusTable& table,
                       const PrecisionContext& ctx);

// ------------------------------------------------------------ binomial-zeta

/// Bits below which ck_binomial refuses to run: k + 64.
unsigned binomial_precision_floor(std::uint32_t k);

struct AlternatingSum {
  Real value;
  Real magnitude;  // sum of |terms|
};

/// sum_{j=0..k} (-1)^j C(k, j) values[j] with exact integer binomials,
/// accumulated in ascending j at `bits` of precision.
AlternatingSum alternating_binomial_sum(std::span<const Real> values, std::uint32_t k,
                                        unsigned bits);

/// c_k = sum_j (-1)^j C(k, j) / zeta(alpha + beta j), no truncation.
///
/// The terms reach C(k, k/2) ~ 2^k while c_k is O(k^-3/4), so the context
/// must carry at least k + 64 bits; afterwards at least 48 bits must
/// survive the cancellation. Either failure throws InsufficientPrecision.
Real ck_binomial(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx);

/// 1/zeta(alpha + beta j) for j = 0..k_max, shared across k.
class BinomialZetaKernel {
 public:
  BinomialZetaKernel(const FamilyParams& params, std::uint32_t k_max, unsigned bits);

  /// c_k at `bits` (>= binomial_precision_floor(k)), with the same
  /// trusted-bits check as ck_binomial.
  [[nodiscard]] Real evaluate(std::uint32_t k, unsigned bits) const;

 private:
  std::vector<Real> inverse_zeta_;
};

// ------------------------------------------------------------ batch driver

enum class PrecisionPolicy {
  Fixed,          // use the context precision as-is (refuse if too low)
  RaisePerTerm,   // BinomialZeta: max(context, k + 64) per k
};

struct SeriesOptions {
  Method method = Method::BinomialZeta;
  const MobiusTable* table = nullptr;  // required for MobiusTruncated
  PrecisionPolicy policy = PrecisionPolicy::RaisePerTerm;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// c_0 .. c_k_max, each entry independent of the others; the result is the
/// same for any thread count.
CoefficientSeries ck_series(const FamilyParams& params, std::uint32_t k_max,
                            const SeriesOptions& options, const PrecisionContext& ctx);

/// Exact beta -> infinity limit: c_0 = 1/zeta(alpha), c_k = 1/zeta(alpha) - 1
/// for k >= 1. Throws DomainError for alpha <= 1.
CoefficientSeries beta_limit_series(double alpha, std::uint32_t k_max, const PrecisionContext& ctx);

// -------------------------------------------------------------------- q_k

/// q_k = sum_{n <= N} n^-alpha (1 - n^-beta)^k with tail N^(1-alpha)/(alpha-1).
TruncatedSum qk_direct(const FamilyParams& params, std::uint32_t k, std::uint32_t n_max,
                       const PrecisionContext& ctx);

/// (1/beta) B((alpha-1)/beta, k+1) via log-gamma.
Real qk_beta_asymptotic(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx);

/// Large-k form Gamma((alpha-1)/beta)/beta * k^-((alpha-1)/beta), k >= 1.
Real qk_power_asymptotic(const FamilyParams& params, std::uint32_t k, const PrecisionContext& ctx);

// -------------------------------------------------------------------- psi

struct PsiEvaluation {
  Real x;
  FamilyParams params;
  Real value;
  std::uint32_t terms_used = 0;
};

/// psi(x) = sum_k (-1)^k x^k / (k! zeta(alpha + beta k)).
///
/// Terms grow to ~e^x before the alternating sum settles, so the
/// accumulator runs at precision + x log2(e) bits; each zeta is taken only
/// to the relative accuracy its term needs. Stops once x^K/K! falls below
/// 2^-precision of the partial sum.
PsiEvaluation psi_eval(const Real& x, const FamilyParams& params, const PrecisionContext& ctx);

// ------------------------------------------------------ exponential weights

/// Precomputed n^-alpha and n^-beta over squarefree n <= N for
/// f(k) = sum_n mu(n) n^-alpha exp(-k / n^beta).
class RieszSum {
 public:
  RieszSum(const FamilyParams& params, const MobiusTable& table, const PrecisionContext& ctx);

  [[nodiscard]] Real evaluate(const Real& k) const;
  [[nodiscard]] const Real& tail_bound() const { return tail_; }

 private:
  struct Term {
    int mu;
    Real weight;    // n^-alpha
    Real rate;      // n^-beta
  };
  std::vector<Term> terms_;
  unsigned bits_;
  Real tail_;
};

/// Truncated f(k), ascending n <= table.limit(). Throws DomainError for
/// alpha <= 1 or k < 0.
TruncatedSum riesz_f(const Real& k, const FamilyParams& params, const MobiusTable& table,
                     const PrecisionContext& ctx);

// ---------------------------------------------------------------- Poisson

/// sum_{p=0..2k} c_p k^p / p! e^-k, evaluated with k log2(e) + 64 extra bits.
/// Throws InvalidArgument when k == 0 or source.k_max < 2k.
Real poisson_approx(const CoefficientSeries& source, std::uint32_t k, const PrecisionContext& ctx);

}  // namespace riesz
