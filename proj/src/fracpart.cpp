#include "ecrep/fracpart.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ecrep/counting.hpp"

namespace ecrep {

namespace {

void check_floor_args(std::int64_t n, std::int64_t p) {
  if (n < 1) throw Error(ErrorKind::DomainError, "n must be at least 1");
  if (p < 2) throw Error(ErrorKind::DomainError, "p must be at least 2");
  if (n > kFloorMaxN || p > kFloorMaxP) {
    throw Error(ErrorKind::BudgetExceeded, "floor sum limited to n <= 100000, p <= 101 (got n=" +
                                               std::to_string(n) + ", p=" + std::to_string(p) + ")");
  }
}

}  // namespace

FloorSumReport floor_via_expsum(std::int64_t n, std::int64_t p, const PrecisionContext& ctx) {
  check_floor_args(n, p);
  std::vector<XComplex> roots;
  roots.reserve(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) roots.push_back(unit_exp_ratio(BigInt(static_cast<long>(j)), p, ctx));

  XComplex acc(ctx.bits());
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t step = k % p;
    std::int64_t idx = 0;  // m k mod p
    for (std::int64_t m = 0; m < p; ++m) {
      acc += roots[static_cast<std::size_t>(idx)];
      idx += step;
      if (idx >= p) idx -= p;
    }
  }
  acc /= ctx.real(static_cast<long>(p));

  FloorSumReport out;
  out.n = n;
  out.p = p;
  const BigInt rounded = acc.re.round_to_integer();
  out.floor_value = rounded.get_si();
  const XReal dr = acc.re - ctx.real(rounded);
  out.deviation = sqrt(dr * dr + acc.im * acc.im);
  if (!(out.deviation < XReal(0.5, ctx.bits()))) {
    throw Error(ErrorKind::PrecisionExceeded, "floor sum deviation " + out.deviation.to_string(6));
  }
  out.expsum_value = std::move(acc);
  return out;
}

XReal frac_via_expsum(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  const FloorSumReport report = floor_via_expsum(f_val, p, ctx);
  return ctx.real(static_cast<long>(f_val)) / static_cast<long>(p) - report.expsum_value.re;
}

Rational exact_frac(const BigInt& f_val, std::int64_t p) {
  return Rational(BigInt(mod_floor(f_val, p)), BigInt(static_cast<long>(p)));
}

bool prop4_verify(std::int64_t f_val, std::int64_t p) {
  if (p < 3) throw Error(ErrorKind::DomainError, "p must be at least 3");
  if (f_val < 2) throw Error(ErrorKind::DomainError, "f must be at least 2");
  const BigInt f(static_cast<long>(f_val));
  const Rational inv_p(1, p);
  if (f_val % p != 0) return exact_frac(f, p) == exact_frac(f - 1, p) + inv_p;
  return exact_frac(f - 2, p) == 1 - 2 * inv_p;
}

Rational prop5_lower_bound_exact(std::int64_t f_val, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidModulus, "p must be an odd prime");
  if (f_val < 1) throw Error(ErrorKind::DomainError, "f must be at least 1");
  const Rational f(static_cast<long>(f_val));
  Rational sum = f;  // m = 0: the k-sum is f ones
  const std::int64_t half = p / 2;
  for (std::int64_t m = 1; m <= half; ++m) sum += std::min(Rational(p, m), f);
  for (std::int64_t m = half + 1; m < p; ++m) sum += std::min(Rational(p, p - m), f);  // 1/(1 - m/p)
  Rational out = (f - sum) / p;
  out.canonicalize();
  return out;
}

XReal prop5_lower_bound(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  return XReal(prop5_lower_bound_exact(f_val, p), ctx.bits(), MPFR_RNDD);
}

int lagrange_root_count(const CurveParams& curve) {
  if (!is_prime(curve.p)) throw Error(ErrorKind::InvalidModulus, std::to_string(curve.p) + " is not prime");
  int roots = 0;
  for (std::int64_t x = 0; x < curve.p; ++x) {
    if (mod_floor(f_eval(curve, x), curve.p) == 0) ++roots;
  }
  if (roots > 3) {
    throw Error(ErrorKind::InvariantViolation,
                "cubic has " + std::to_string(roots) + " roots mod " + std::to_string(curve.p));
  }
  return roots;
}

}  // namespace ecrep
