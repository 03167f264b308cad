#pragma once

// Rational-function representations of points on the unit circle.
//
// For |f| < p,  e^{-2 pi i f/p} = Q + iR  with
//   Q = 1 - 2 pi^2 f^2 / D,   R = 2 pi f (2S - p) / D,
//   D = (p - 2S)^2 + (pi f)^2,   S = sum_{n odd} zeta(n+1) f^{n+1} / p^n.
// For the fractional part r of f/p the same holds with p -> 1, f -> r and
// S -> W(r) = sum_{n odd} zeta(n+1) r^{n+1}.
//
// S and W are available both as their defining zeta series (used as the
// oracle) and in closed form through the C(lambda) series.

#include <cstddef>
#include <cstdint>
#include <utility>

#include "ecrep/numerics.hpp"
#include "ecrep/special.hpp"

namespace ecrep {

struct UnitPoint {
  XReal q;
  XReal r_im;

  XComplex to_complex() const { return {q, r_im}; }
};

struct FracDecomposition {
  BigInt k;               // floor(f / p)
  std::int64_t residue;   // f - k p, in [0, p)
  XReal r;                // residue / p
};

inline constexpr std::size_t kDefaultMaxTerms = 100000;

/// Zeta series for S at integer f. |f| >= p throws DomainError; failure to
/// reach epsilon within max_terms throws TruncationFailure.
SeriesValue S_series(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx,
                     std::size_t max_terms = kDefaultMaxTerms);
/// Same for a real argument (the rescaled f/p^2 of the power representation).
SeriesValue S_series(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx,
                     std::size_t max_terms = kDefaultMaxTerms);

/// S from the closed form built on A1 = C(1 - f/p), B1 = C(1 + f/p).
XReal S_closed(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);
XReal S_closed(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx);

/// lo = f^2 (p/(p^2-f^2) + 3/(4p)),  hi = f^2 (p/(p^2-f^2) + (pi^2/6+1)/p).
/// f = 0 gives (0, 0).
std::pair<XReal, XReal> S_bounds(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);

/// The lower bound above does not hold: S - f^2 p/(p^2-f^2) = (f^2/p) psi'(xi)
/// for some xi in (1, 3), and psi'(xi) < 3/4 on most of that range. This
/// pair uses psi'(3) = pi^2/6 - 5/4 and psi'(1) = pi^2/6 instead, which is
/// strict for 0 < |f| < p.
std::pair<XReal, XReal> S_bounds_sharp(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);

UnitPoint QR(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx);
UnitPoint QR(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx);
/// QR with series diagnostics accumulated into `diag` (terms added, worst
/// tail bound kept).
UnitPoint QR(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx, SeriesDiagnostics& diag);

/// f/p = k + r with k = floor(f/p), 0 <= r < 1.
FracDecomposition frac_decompose(const BigInt& f_val, std::int64_t p, const PrecisionContext& ctx);

SeriesValue W_series(const XReal& r, const PrecisionContext& ctx, std::size_t max_terms = kDefaultMaxTerms);
XReal W_closed(const XReal& r, const PrecisionContext& ctx);

/// e^{-2 pi i r} as (Q1, R1). R1 carries the sign that makes the pair
/// equal e^{-2 pi i r}: R1 = 2 pi r (2W - 1) / D.
UnitPoint Q1R1(const XReal& r, const PrecisionContext& ctx);
UnitPoint Q1R1(const XReal& r, const PrecisionContext& ctx, SeriesDiagnostics& diag);

}  // namespace ecrep
