#pragma once

// Floor and fractional parts through roots-of-unity filters,
//   floor(n/p) = (1/p) sum_{k=1}^{n} sum_{m=0}^{p-1} e^{2 pi i m k/p},
// plus the exact recursions for {f/p} and a one-sided bound on it.

#include <cstdint>

#include "ecrep/numerics.hpp"

namespace ecrep {

struct FloorSumReport {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t floor_value = 0;
  XComplex expsum_value;
  XReal deviation;  // |expsum_value - floor_value|
};

inline constexpr std::int64_t kFloorMaxN = 100000;
inline constexpr std::int64_t kFloorMaxP = 101;

/// Evaluates the double sum term by term. n outside [1, 1e5] or p outside
/// [2, 101] throws BudgetExceeded (n < 1 or p < 2: DomainError); a
/// deviation of 1/2 or more throws PrecisionExceeded.
FloorSumReport floor_via_expsum(std::int64_t n, std::int64_t p, const PrecisionContext& ctx);

/// f/p - floor(f/p), the floor taken from floor_via_expsum's real part
/// before rounding.
XReal frac_via_expsum(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);

/// Exact check of {f/p} = {(f-1)/p} + 1/p (p does not divide f) or
/// {(f-2)/p} = 1 - 2/p (p divides f). Needs p >= 3, f >= 2.
bool prop4_verify(std::int64_t f_val, std::int64_t p);

/// f/p - (1/p) sum_{m=0}^{floor(p/2)} min(p/m, f)
///     - (1/p) sum_{m>floor(p/2)}^{p-1} min(1/(1-m/p), f),
/// with the m = 0 term taken as f. Exact.
Rational prop5_lower_bound_exact(std::int64_t f_val, std::int64_t p);
/// The same bound rounded toward -infinity, so it stays a lower bound.
XReal prop5_lower_bound(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);

/// Number of roots of f mod p in [0, p). More than 3 throws InvariantViolation.
int lagrange_root_count(const CurveParams& curve);

/// {f/p} as an exact rational.
Rational exact_frac(const BigInt& f_val, std::int64_t p);

}  // namespace ecrep
