// Riemann zeta at real arguments right of the pole, and the exact
// Bernoulli numbers behind its Euler-Maclaurin evaluation.
#pragma once

#include <gmpxx.h>

#include "riesz/real.hpp"

namespace riesz {

/// zeta(argument) together with a rigorous absolute error bound.
struct ZetaValue {
  Real argument;
  Real value;
  /// |value - zeta(argument)| <= error_bound.
  Real error_bound;
};

/// Exact Bernoulli number B_n (B_1 = -1/2, B_odd>1 = 0). Cached and
/// thread-safe; the cache grows on demand.
mpq_class bernoulli_number(unsigned n);

/// zeta(sigma) for real sigma > 1 to relative accuracy 2^-(precision_bits)
/// or better.
///
/// Large sigma is summed directly with an integral tail bound; otherwise
/// Euler-Maclaurin with N direct terms and M Bernoulli corrections, where
/// N >= (sigma + 2M)/pi makes successive corrections shrink by at least 4x
/// and the first omitted correction bounds the remainder.
///
/// Throws DomainError for sigma <= 1.
ZetaValue zeta_real(const Real& sigma, const PrecisionContext& ctx);
ZetaValue zeta_real(double sigma, const PrecisionContext& ctx);

/// zeta(sigma) - 1 with *relative* accuracy 2^-(precision_bits), which the
/// plain zeta value cannot give once zeta(sigma) is close to 1.
ZetaValue zeta_minus_one(const Real& sigma, const PrecisionContext& ctx);

/// 1/zeta(alpha) - 1, the large-beta limit of c_k for k >= 1. Negative for
/// every alpha > 1 and tends to 0 from below as alpha grows.
Real inv_zeta_minus_one(const Real& alpha, const PrecisionContext& ctx);
Real inv_zeta_minus_one(double alpha, const PrecisionContext& ctx);

/// 1/zeta(s) at the context precision.
Real inv_zeta(const Real& s, const PrecisionContext& ctx);

}  // namespace riesz
