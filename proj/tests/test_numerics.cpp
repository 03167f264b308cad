#include "doctest.h"
#include "ecrep/numerics.hpp"
#include "oracles.hpp"

using namespace ecrep;

TEST_CASE("context epsilon and minimum width") {
  CHECK(make_context(128).epsilon() == XReal::pow2(-96, 128));
  CHECK(make_context(64).epsilon() == XReal::pow2(-32, 64));
  CHECK_THROWS_AS(make_context(32), Error);
  try {
    make_context(63);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionTooLow);
  }
}

TEST_CASE("required_bits budget") {
  CHECK(required_bits(1, XReal::pow2(-50, 64)) == 82);
  CHECK(required_bits(1u << 20, XReal::pow2(-50, 64)) == 102);
  CHECK(required_bits(23 * 23 * 22, XReal::pow2(-60, 64)) == 106);
  CHECK(required_bits(1, XReal::pow2(-4, 64)) == 64);
  const auto ctx = make_context(96);
  CHECK_NOTHROW(require_precision(ctx, 1000, XReal::pow2(-40, 64)));
  CHECK_THROWS_AS(require_precision(ctx, 1u << 30, XReal::pow2(-40, 64)), Error);
}

TEST_CASE("primality and modular helpers") {
  const auto primes = oracle::primes_up_to(400);
  for (long n = -3; n < 400; ++n) {
    const bool expected = std::find(primes.begin(), primes.end(), n) != primes.end();
    CHECK(is_prime(n) == expected);
  }
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(3215031751LL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(mod_pow(3, 200, 1000000007) == mod_pow(9, 100, 1000000007));
  CHECK(mod_pow(2, 100, 1000000007) == 976371285u);
  CHECK(mod_floor(BigInt(-1), 7) == 6);
  CHECK(mod_floor(BigInt("-100000000000000000000"), 13) == 4);
}

TEST_CASE("legendre symbol against square tables") {
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(0, 11) == 0);
  CHECK(legendre_symbol(3, 7) == -1);
  for (long p : oracle::primes_up_to(101)) {
    if (p == 2) continue;
    for (long n = -p; n < 2 * p; ++n) {
      const int expected = oracle::mod(n, p) == 0 ? 0 : (oracle::is_square_mod(n, p) ? 1 : -1);
      CHECK(legendre_symbol(n, p) == expected);
    }
  }
  CHECK_THROWS_AS(legendre_symbol(1, 2), Error);
  CHECK_THROWS_AS(legendre_symbol(1, 8), Error);
}

TEST_CASE("unit_exp exact quarter turns") {
  const auto ctx = make_context(128);
  auto check_exact = [&](const XReal& t, long re, long im) {
    const XComplex z = unit_exp(t, ctx);
    CHECK(z.re == re);
    CHECK(z.im == im);
  };
  check_exact(ctx.zero(), 1, 0);
  check_exact(XReal(0.5, 128), -1, 0);
  check_exact(XReal(0.25, 128), 0, 1);
  check_exact(XReal(-0.25, 128), 0, -1);
  check_exact(XReal(7L, 128), 1, 0);
}

TEST_CASE("unit_exp_ratio matches MPFR sin/cos") {
  const auto ctx = make_context(160);
  const XReal tol = ctx.epsilon();
  for (long den : {3L, 7L, 12L, 101L}) {
    for (long num = -2 * den; num <= 2 * den; num += 3) {
      const XComplex z = unit_exp_ratio(BigInt(-num), den, ctx);
      const auto [c, s] = oracle::rotation(num, den, 160);
      CHECK(abs(z.re - c) <= tol);
      CHECK(abs(z.im - s) <= tol);
    }
  }
}

TEST_CASE("complex products and powers") {
  const auto ctx = make_context(192);
  const XComplex base = unit_exp_ratio(BigInt(1), 13, ctx);
  XComplex out(192);
  multiply_into(out, base, base);
  const XComplex sq = unit_exp_ratio(BigInt(2), 13, ctx);
  CHECK(abs(out.re - sq.re) <= ctx.epsilon());
  CHECK(abs(out.im - sq.im) <= ctx.epsilon());
  // e^{2 pi i k/13} raised to 13^2 * 5 is 1.
  const XComplex one = unit_pow(base, 13 * 13 * 5);
  CHECK(abs(one.re - 1L) <= ctx.epsilon());
  CHECK(abs(one.im) <= ctx.epsilon());
  const XComplex seven = unit_pow(base, 7);
  const XComplex ref = unit_exp_ratio(BigInt(7), 13, ctx);
  CHECK(abs(seven.re - ref.re) <= ctx.epsilon());
  CHECK(unit_pow(base, 0).re == 1L);
}

TEST_CASE("serialization round trip") {
  const auto ctx = make_context(192);
  const XReal x = ctx.pi() / 7L;
  const XReal back = XReal::parse(x.serialize(), 192);
  CHECK(abs(back - x) <= ctx.epsilon() * XReal::pow2(-20, 64));
  const XComplex z = unit_exp_ratio(BigInt(3), 11, ctx);
  const XComplex zb = XComplex::parse(z.serialize(), 192);
  CHECK(abs(zb.re - z.re) <= ctx.epsilon());
  CHECK(abs(zb.im - z.im) <= ctx.epsilon());
  CHECK_THROWS_AS(XReal::parse("1.2.3x", 64), Error);
}

TEST_CASE("mixed precision widens") {
  const XReal a = XReal::pi(64);
  const XReal b = XReal::pi(256);
  CHECK((a + b).precision() == 256);
  CHECK((b * 3L).precision() == 256);
}
