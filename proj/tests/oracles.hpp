#pragma once

// Test-only references, computed independently of the library paths they
// check: MPFR's own zeta/digamma/cot, square tables, plain loops.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "ecrep/xreal.hpp"

namespace doctest {
template <>
struct StringMaker<ecrep::XReal> {
  static String convert(const ecrep::XReal& x) { return x.to_string(12).c_str(); }
};
}  // namespace doctest

namespace oracle {

using ecrep::XReal;

inline XReal zeta(unsigned long s, mpfr_prec_t bits) {
  XReal out(bits);
  mpfr_zeta_ui(out.get(), s, MPFR_RNDN);
  return out;
}

// C(lambda) = (psi(1 + lambda) + gamma) / lambda.
inline XReal series_C(const XReal& lambda, mpfr_prec_t bits) {
  XReal arg = XReal(lambda, bits + 32) + 1L;
  XReal psi(bits + 32), gamma(bits + 32);
  mpfr_digamma(psi.get(), arg.get(), MPFR_RNDN);
  mpfr_const_euler(gamma.get(), MPFR_RNDN);
  return XReal((psi + gamma) / XReal(lambda, bits + 32), bits);
}

// sum_{n odd} zeta(n+1) t^{n+1} = (1 - pi t cot(pi t)) / 2.
inline XReal half_one_minus_cot(const XReal& t, mpfr_prec_t bits) {
  const mpfr_prec_t w = bits + 32;
  XReal pt = XReal::pi(w) * XReal(t, w);
  XReal c(w);
  mpfr_cot(c.get(), pt.get(), MPFR_RNDN);
  return XReal(ecrep::ldexp(1L - pt * c, -1), bits);
}

inline XReal S(long f, long p, mpfr_prec_t bits) {
  if (f == 0) return XReal(bits);
  return XReal(half_one_minus_cot(XReal(f, bits + 32) / p, bits + 32) * p, bits);
}

// (cos(-2 pi num/den), sin(-2 pi num/den)), straight from MPFR.
inline std::pair<XReal, XReal> rotation(long num, long den, mpfr_prec_t bits) {
  const mpfr_prec_t w = bits + 32;
  XReal angle = ecrep::ldexp(XReal::pi(w), 1) * XReal(-num, w) / den;
  XReal s(w), c(w);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {XReal(c, bits), XReal(s, bits)};
}

inline long mod(long v, long p) { return ((v % p) + p) % p; }

// 1 + #{(x, y): y^2 = x^3 + a x + b mod p} via a table of square roots.
inline std::int64_t count_points(long a, long b, long p) {
  std::vector<int> roots(p, 0);
  for (long y = 0; y < p; ++y) ++roots[y * y % p];
  std::int64_t n = 1;
  for (long x = 0; x < p; ++x) n += roots[mod(mod(x * x % p * x, p) + mod(a, p) * x + b, p)];
  return n;
}

inline bool is_square_mod(long n, long p) {
  for (long y = 0; y < p; ++y)
    if (y * y % p == mod(n, p)) return true;
  return false;
}

inline std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long k = 2; k <= n; ++k) {
    bool prime = true;
    for (long d = 2; d * d <= k; ++d) prime = prime && k % d != 0;
    if (prime) out.push_back(k);
  }
  return out;
}

}  // namespace oracle
