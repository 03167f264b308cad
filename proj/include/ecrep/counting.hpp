#pragma once

// Point counts N_p = #E(F_p) (affine solutions plus the point at infinity)
// for y^2 = x^3 + a x + b, by enumeration, by Legendre symbols, and by the
// exponential-sum representations.
//
// All analytic methods factor the triple sum
//   N_p = 1 + (1/p) sum_{x,y} sum_m e^{2 pi i m F(x,y)/p},  F = y^2 - f(x),
// into  1 + p + (1/p) sum_{m=1}^{p-1} G(m) X(m)  with the quadratic Gauss
// sum G(m) = sum_y e^{2 pi i m y^2/p} and X(m) = sum_x e^{-2 pi i m f(x)/p}.
// They differ only in how each e^{-2 pi i f(x)/p} is produced.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ecrep/numerics.hpp"
#include "ecrep/special.hpp"

namespace ecrep {

enum class Method { naive, legendre, expsum, thm2, thm3 };

std::string_view to_string(Method m);
/// Throws DomainError on an unknown name.
Method parse_method(std::string_view name);

struct CountResult {
  Method method = Method::naive;
  std::int64_t n_p = 0;
  /// Pre-rounding value of the analytic formula; empty for exact methods.
  std::optional<XComplex> raw;
  /// |raw - n_p|; zero for exact methods.
  XReal residual;
  std::optional<SeriesDiagnostics> diagnostics;
  /// Split point used by the two-range representation.
  std::optional<std::int64_t> l_value;
};

struct GaussSumValue {
  std::int64_t m = 0;
  XComplex value;
};

enum class DiscriminantClass { nonsingular, singular };

/// x^3 + a x + b, exact.
BigInt f_eval(const CurveParams& curve, const BigInt& x);

DiscriminantClass discriminant_class(const CurveParams& curve);

/// Full enumeration of (x, y) in [0,p)^2. Composite p throws
/// InvalidModulus; a singular curve throws SingularCurve unless
/// include_singular is set, in which case the congruence is counted anyway.
CountResult count_naive(const CurveParams& curve, bool include_singular = false);

/// 1 + p + sum_x (f(x)/p). Same errors as count_naive; p must be odd.
CountResult count_legendre(const CurveParams& curve, bool include_singular = false);

GaussSumValue gauss_sum_direct(std::int64_t m, std::int64_t p, const PrecisionContext& ctx);
/// (m/p) sqrt(p) for p = 1 mod 4, (m/p) i sqrt(p) for p = 3 mod 4.
GaussSumValue gauss_sum_closed(std::int64_t m, std::int64_t p, const PrecisionContext& ctx);

/// Factored exponential sum with x-terms e^{-2 pi i m f(x)/p} from unit_exp.
/// Needs ctx.bits() >= required_bits(p, 2^-40).
CountResult count_expsum(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers = 1);

/// The unfactored triple sum over (x, y, m); a self-test for p <= 13.
CountResult count_expsum_triple(const CurveParams& curve, const PrecisionContext& ctx);

/// x-terms (Q(x) + i R(x))^{m p^2} with Q, R evaluated at f(x)/p^2.
/// Requires |f(x)| < p^3 on [0, p-1] (AdmissibilityError otherwise) and
/// ctx.bits() >= required_bits((p-1) p^2, 2^-40).
CountResult count_thm2(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers = 1);

/// Largest L in [-1, p-1] with f(x) < p for 0 <= x <= L, by integer
/// bisection. Needs a, b >= 0 (BranchError otherwise).
std::int64_t find_L(const CurveParams& curve);

/// Two-range representation: (Q + iR)^m where |f(x)| < p and
/// (Q1 + iR1)(r(x,p))^m elsewhere.
///   branch I:  a >= 0, b >= 0, split at find_L.
///   branch II: a < -3(p-1)^2, b <= 0, f strictly decreasing.
/// Anything else throws BranchError. Needs ctx.bits() >= required_bits(p-1, 2^-40).
CountResult count_thm3(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers = 1);

/// Split point for branch II: smallest L in [-1, p-1] such that |f(x)| < p
/// for every L < x <= p-1. Verifies strict decrease (AdmissibilityError).
std::int64_t find_L_decreasing(const CurveParams& curve);

/// (n_p - p - 1)^2 < 4p, in exact integers.
bool hasse_check(std::int64_t n_p, std::int64_t p);

}  // namespace ecrep
