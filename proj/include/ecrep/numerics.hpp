#pragma once

#include <cstdint>

#include "ecrep/error.hpp"
#include "ecrep/xreal.hpp"

namespace ecrep {

/// Working precision threaded through every numeric routine.
///
/// `bits` is the mantissa width values are computed at; `guard_bits` of it
/// are reserved for accumulated rounding, so the tolerance callers may
/// assert against is epsilon = 2^-(bits - guard_bits).
class PrecisionContext {
 public:
  static constexpr int kGuardBits = 32;
  static constexpr int kMinBits = 64;

  int bits() const { return bits_; }
  int guard_bits() const { return kGuardBits; }
  const XReal& epsilon() const { return epsilon_; }

  XReal zero() const { return XReal(static_cast<mpfr_prec_t>(bits_)); }
  XReal real(long v) const { return XReal(v, bits_); }
  XReal real(const BigInt& v) const { return XReal(v, bits_); }
  XReal real(const Rational& v) const { return XReal(v, bits_); }
  XReal pi() const { return XReal::pi(bits_); }

 private:
  friend PrecisionContext make_context(int bits);
  explicit PrecisionContext(int bits);

  int bits_;
  XReal epsilon_;
};

/// Throws PrecisionTooLow when bits < 64.
PrecisionContext make_context(int bits);

/// Bits needed so that raising a unit-modulus value to `max_power` keeps the
/// argument error below `target_eps`: ceil(log2(max_power / target_eps)) + 32,
/// never less than 64.
int required_bits(std::uint64_t max_power, const XReal& target_eps);

/// Throws PrecisionTooLow unless ctx.bits() >= required_bits(max_power, target_eps).
void require_precision(const PrecisionContext& ctx, std::uint64_t max_power, const XReal& target_eps);

/// y^2 = x^3 + a x + b over Z/pZ.
struct CurveParams {
  BigInt a;
  BigInt b;
  std::int64_t p = 2;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::int64_t n);

/// Least nonnegative residue of n mod p (p > 0).
std::int64_t mod_floor(const BigInt& n, std::int64_t p);

/// Legendre symbol (n/p) by Euler's criterion. `p` must be an odd prime;
/// even p or p < 3 throws InvalidModulus.
int legendre_symbol(const BigInt& n, std::int64_t p);

/// (cos 2 pi t, sin 2 pi t). Reference for the rational-function
/// reconstructions of e^{-2 pi i f/p}. Quarter turns are exact.
XComplex unit_exp(const XReal& t, const PrecisionContext& ctx);

/// unit_exp(num / den) with the rational reduced exactly before rounding.
XComplex unit_exp_ratio(const BigInt& num, std::int64_t den, const PrecisionContext& ctx);

}  // namespace ecrep
