// Pochhammer polynomials P_k(x) = prod_{r=1..k} (1 - x/r) at complex x, and
// the partial sums of 1/zeta(s) = sum_k c_k P_k((s - alpha)/beta + 1).
#pragma once

#include <cstdint>
#include <vector>

#include "riesz/coefficients.hpp"
#include "riesz/criteria.hpp"
#include "riesz/real.hpp"

namespace riesz {

/// P_k(x), product in ascending r. P_0 = 1.
Complex pochhammer_eval(std::uint32_t k, const Complex& x, const PrecisionContext& ctx);

/// P_0(x) .. P_k_max(x) by the same ascending product, so entry k is
/// bit-identical to pochhammer_eval(k, x).
std::vector<Complex> pochhammer_sequence(std::uint32_t k_max, const Complex& x,
                                         const PrecisionContext& ctx);

/// (s - alpha)/beta + 1
Complex pochhammer_argument(const Complex& s, const FamilyParams& params, unsigned bits);

struct PhiPartialSum {
  Complex s;
  FamilyParams params;
  std::uint32_t terms = 0;  // K
  Complex value;
  Real term_tail_estimate;  // |c_K P_K(w)|
};

/// sum_{k=0..K} c_k P_k(w), w = (s - alpha)/beta + 1. Throws InvalidArgument
/// when coeffs were computed for other parameters or stop short of K.
PhiPartialSum phi_partial(const Complex& s, const FamilyParams& params, std::uint32_t terms,
                          const CoefficientSeries& coeffs, const PrecisionContext& ctx);

/// Every partial sum for K = 0..terms in one pass.
std::vector<PhiPartialSum> phi_partial_sums(const Complex& s, const FamilyParams& params,
                                            std::uint32_t terms, const CoefficientSeries& coeffs,
                                            const PrecisionContext& ctx);

/// Empirical form of |P_k(s)| <= A k^-Re(s): the sup of |P_k(s)| k^Re(s) over
/// the window (empirical_constant) and the log-log slope of |P_k(s)|.
/// A sequence that is identically zero on the window (s a positive integer
/// <= window.lo) is reported as degenerate. Throws InvalidArgument when
/// window.lo < 2 or the window is empty.
DecayFit pochhammer_bound_probe(const Complex& s, KWindow window, const PrecisionContext& ctx);

}  // namespace riesz
