#include "doctest.h"
#include "ecrep/fracpart.hpp"
#include "oracles.hpp"

using namespace ecrep;

TEST_CASE("floor through roots of unity") {
  const auto ctx = make_context(128);
  const XReal tol(1e-20, 128);
  CHECK(floor_via_expsum(7, 7, ctx).floor_value == 1);
  CHECK(floor_via_expsum(6, 7, ctx).floor_value == 0);
  CHECK(floor_via_expsum(100, 7, ctx).floor_value == 14);
  for (long p : {2L, 3L, 10L, 29L, 101L}) {
    for (long n : {1L, 5L, 64L, 303L, 2024L}) {
      const FloorSumReport r = floor_via_expsum(n, p, ctx);
      CHECK(r.floor_value == n / p);
      CHECK(r.deviation < tol);
      CHECK(abs(r.expsum_value.im) <= ctx.epsilon() * (n * p));
    }
  }
  CHECK(floor_via_expsum(100000, 101, ctx).floor_value == 990);
  try {
    floor_via_expsum(100001, 7, ctx);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(floor_via_expsum(10, 102, ctx), Error);
  CHECK_THROWS_AS(floor_via_expsum(0, 7, ctx), Error);
}

TEST_CASE("fractional part through roots of unity") {
  const auto ctx = make_context(128);
  const XReal tol(1e-20, 128);
  CHECK(abs(frac_via_expsum(10, 7, ctx) - ctx.real(3L) / 7L) <= tol);
  CHECK(abs(frac_via_expsum(14, 7, ctx)) <= tol);
  CHECK(abs(frac_via_expsum(1, 101, ctx) - ctx.real(1L) / 101L) <= tol);
  for (long f = 1; f <= 300; f += 7) {
    CHECK(abs(frac_via_expsum(f, 13, ctx) - ctx.real(f % 13) / 13L) <= tol);
  }
}

TEST_CASE("fractional-part recursions") {
  CHECK(prop4_verify(10, 7));
  CHECK(prop4_verify(14, 7));
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long f = 2; f <= 500; ++f) CHECK(prop4_verify(f, p));
  }
  CHECK(exact_frac(BigInt(12), 7) == Rational(5, 7));
  CHECK(exact_frac(BigInt(-1), 7) == Rational(6, 7));
  CHECK_THROWS_AS(prop4_verify(10, 2), Error);
  CHECK_THROWS_AS(prop4_verify(1, 7), Error);
}

TEST_CASE("lower bound on the fractional part") {
  const auto ctx = make_context(128);
  CHECK(prop5_lower_bound(10, 7, ctx) <= ctx.real(Rational(3, 7)));
  CHECK(prop5_lower_bound(1, 7, ctx) <= ctx.real(Rational(1, 7)));
  // Hand evaluation for f = 1, p = 7: every min is 1, so 1/7 - 7/7.
  CHECK(prop5_lower_bound_exact(1, 7) == Rational(-6, 7));
  for (long p : {5L, 7L, 11L, 13L}) {
    for (long f = 1; f <= 200; ++f) {
      const Rational bound = prop5_lower_bound_exact(f, p);
      CHECK(bound <= exact_frac(BigInt(f), p));
      // Rounded toward -infinity, so the XReal never exceeds the rational.
      CHECK(mpfr_cmp_q(prop5_lower_bound(f, p, ctx).get(), bound.get_mpq_t()) <= 0);
    }
  }
  CHECK_THROWS_AS(prop5_lower_bound_exact(3, 9), Error);
}

TEST_CASE("roots of the cubic mod p") {
  CHECK(lagrange_root_count({0, 0, 7}) == 1);
  CHECK(lagrange_root_count({-1, 0, 7}) == 3);
  CHECK(lagrange_root_count({1, 1, 5}) <= 3);
  for (long p : oracle::primes_up_to(53)) {
    for (long a = -4; a <= 4; ++a) {
      for (long b = -4; b <= 4; ++b) {
        int expected = 0;
        for (long x = 0; x < p; ++x) expected += oracle::mod(x * x * x + a * x + b, p) == 0;
        CHECK(lagrange_root_count({a, b, p}) == expected);
      }
    }
  }
  CHECK_THROWS_AS(lagrange_root_count({1, 1, 9}), Error);
}
