#include "ecrep/numerics.hpp"

#include <array>
#include <string>

namespace ecrep {

PrecisionContext::PrecisionContext(int bits)
    : bits_(bits), epsilon_(XReal::pow2(-(bits - kGuardBits), bits)) {}

PrecisionContext make_context(int bits) {
  if (bits < PrecisionContext::kMinBits) {
    throw Error(ErrorKind::PrecisionTooLow,
                "need at least " + std::to_string(PrecisionContext::kMinBits) + " bits, got " +
                    std::to_string(bits));
  }
  return PrecisionContext(bits);
}

int required_bits(std::uint64_t max_power, const XReal& target_eps) {
  // log2 of an exact power of two is exact in MPFR, so the examples with
  // power-of-two inputs land on integers without fuzz.
  constexpr mpfr_prec_t kWork = 128;
  XReal power(kWork);
  mpfr_set_ui(power.get(), max_power == 0 ? 1 : max_power, MPFR_RNDN);
  XReal budget = log2(power) - log2(XReal(target_eps, kWork));
  budget = ceil(budget);
  const long bits = mpfr_get_si(budget.get(), MPFR_RNDN) + PrecisionContext::kGuardBits;
  return static_cast<int>(std::max<long>(bits, PrecisionContext::kMinBits));
}

void require_precision(const PrecisionContext& ctx, std::uint64_t max_power, const XReal& target_eps) {
  const int need = required_bits(max_power, target_eps);
  if (ctx.bits() < need) {
    throw Error(ErrorKind::PrecisionTooLow, "context has " + std::to_string(ctx.bits()) +
                                                " bits; exponent budget needs " + std::to_string(need));
  }
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent != 0) {
    if (exponent & 1U) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % modulus);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % modulus);
    exponent >>= 1U;
  }
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // Miller-Rabin with the first 12 prime bases is exact below 3.3e24.
  const auto m = static_cast<std::uint64_t>(n);
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1U) == 0) d >>= 1U, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = mod_pow(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t mod_floor(const BigInt& n, std::int64_t p) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t());
  return r.get_si();
}

int legendre_symbol(const BigInt& n, std::int64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw Error(ErrorKind::InvalidModulus, "Legendre symbol needs an odd prime, got " + std::to_string(p));
  }
  const auto residue = static_cast<std::uint64_t>(mod_floor(n, p));
  if (residue == 0) return 0;
  const std::uint64_t e = mod_pow(residue, static_cast<std::uint64_t>(p - 1) / 2, static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

XComplex unit_exp(const XReal& t, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  // Reduce to u in [-1/8, 1/8] plus k quarter turns; both steps are exact
  // in binary floating point.
  XReal frac(t, std::max<mpfr_prec_t>(bits, t.precision()));
  frac -= floor(frac);
  XReal four = ldexp(frac, 2);
  XReal quarters(four);
  mpfr_round(quarters.get(), four.get());
  const long k = mpfr_get_si(quarters.get(), MPFR_RNDN) & 3L;
  XReal u = ldexp(four - quarters, -2);

  XReal angle = ldexp(XReal::pi(bits), 1) * u;
  XReal c(bits), s(bits);
  if (u.is_zero()) {
    c = XReal(1L, bits);
  } else {
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  }
  switch (k) {
    case 0: return {std::move(c), std::move(s)};
    case 1: return {-s, std::move(c)};
    case 2: return {-c, -s};
    default: return {std::move(s), -c};
  }
}

XComplex unit_exp_ratio(const BigInt& num, std::int64_t den, const PrecisionContext& ctx) {
  const std::int64_t residue = mod_floor(num, den);
  XReal t(ctx.real(static_cast<long>(residue)));
  t /= static_cast<long>(den);
  return unit_exp(t, ctx);
}

}  // namespace ecrep
