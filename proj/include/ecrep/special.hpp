#pragma once

// Analytic toolkit: Bernoulli numbers, zeta at integers, the auxiliary
// series C(lambda) = sum_{n>=1} 1/(n(n+lambda)) and its A/B
// specializations, and the integral representation of
// sum_{k>=1} 1/((k+alpha)(k+beta)).

#include <cstddef>

#include "ecrep/numerics.hpp"

namespace ecrep {

struct SeriesDiagnostics {
  std::size_t terms_used = 0;
  /// Upper bound on the truncated remainder.
  XReal tail_bound;
};

struct SeriesValue {
  XReal value;
  SeriesDiagnostics diagnostics;
};

/// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
/// Memoized; safe to call concurrently.
Rational bernoulli(unsigned n);

/// zeta(s) for integer s >= 2, within ctx.epsilon(). Direct summation with
/// an Euler-Maclaurin tail.
XReal zeta_pos(long s, const PrecisionContext& ctx);
SeriesValue zeta_pos_series(long s, const PrecisionContext& ctx, const XReal& tol);

/// zeta(-n) = -B_{n+1}/(n+1), exact. n = 0 throws UnsupportedArgument.
Rational zeta_neg(long n);

/// zeta(-n) from the functional equation,
/// -sin(pi n/2) / (2^n pi^{n+1}) * n! * zeta(n+1).
XReal zeta_neg_via_functional(long n, const PrecisionContext& ctx);

/// sum_{k>=1} 1/((k+alpha)(k+beta)) for alpha, beta > -1, summed directly
/// up to a precision-dependent cutoff with an Euler-Maclaurin tail whose
/// first omitted correction bounds the remainder.
SeriesValue shifted_pair_series(const XReal& alpha, const XReal& beta, const PrecisionContext& ctx,
                                const XReal& tol);

/// C(lambda) = sum_{n>=1} 1/(n(n+lambda)). lambda <= 0 throws DomainError.
SeriesValue series_C(const XReal& lambda, const PrecisionContext& ctx, const XReal& tol);

struct AuxPair {
  XReal first;
  XReal second;
  SeriesDiagnostics diagnostics;  // combined: terms summed, worst tail bound
};

/// (A1, B1) = (C(1-t), C(1+t)) for |t| < 1.
AuxPair aux_A1B1(const XReal& t, const PrecisionContext& ctx, const XReal& tol);
/// (A2, B2) = (C(1-r), C(1+r)) for r in [0, 1).
AuxPair aux_A2B2(const XReal& r, const PrecisionContext& ctx, const XReal& tol);

/// Default series tolerance for a context: 2^-bits, well inside epsilon.
XReal default_series_tol(const PrecisionContext& ctx);

/// (x^alpha - x^beta)/(1 - x), extended by its limit beta - alpha at x = 1.
XReal lemma1_integrand(const XReal& x, const XReal& alpha, const XReal& beta);

/// (1/(beta-alpha)) * integral_0^1 (x^alpha - x^beta)/(1-x) dx by adaptive
/// Gauss-Legendre on a dyadically graded partition of [0, 1]. Requires
/// beta > alpha > 0.
XReal lemma1_integral(const XReal& alpha, const XReal& beta, const PrecisionContext& ctx, const XReal& tol);

}  // namespace ecrep
