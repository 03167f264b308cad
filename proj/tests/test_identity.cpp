#include "doctest.h"
#include "ecrep/identity.hpp"
#include "ecrep/repr.hpp"
#include "oracles.hpp"

using namespace ecrep;

TEST_CASE("identity at small moduli") {
  const auto ctx = make_context(128);
  const IdentityReport two = identity_check(2, ctx);
  CHECK(abs(two.identity_sum - 2L) < XReal(1e-25, 128));
  // Only x = 1 contributes, with Q(1) = -1: the two points are e^0 and e^{-pi i}.
  CHECK(abs(two.q_sum) < XReal(1e-25, 128));
  const IdentityReport five = identity_check(5, ctx);
  CHECK(five.abs_error < XReal(1e-25, 128));
  CHECK(abs(five.q_sum) < XReal(1e-25, 128));
  CHECK(abs(five.r_sum) < XReal(1e-25, 128));
  const IdentityReport twelve = identity_check(12, ctx);
  CHECK(twelve.abs_error < XReal(1e-25, 128));
  CHECK_THROWS_AS(identity_check(1, ctx), Error);
}

TEST_CASE("identity over a range of moduli") {
  const auto ctx = make_context(192);
  for (long p = 2; p <= 101; ++p) {
    const IdentityReport r = identity_check(p, ctx);
    const XReal tol = XReal(1e-20, 192) * p;
    CHECK(r.abs_error <= tol);
    CHECK(abs(r.q_sum) <= tol);
    CHECK(abs(r.r_sum) <= tol);
  }
}

TEST_CASE("Q + iR summed agrees with the rotation sum") {
  const auto ctx = make_context(160);
  for (long p : {7L, 12L, 45L}) {
    XReal re(160), im(160);
    for (long x = 0; x < p; ++x) {
      const auto [c, s] = oracle::rotation(x, p, 160);
      re += c;
      im += s;
    }
    const IdentityReport r = identity_check(p, ctx);
    CHECK(abs(r.q_sum - re) <= ctx.epsilon() * (32 * p));
    CHECK(abs(r.r_sum - im) <= ctx.epsilon() * (32 * p));
  }
}

TEST_CASE("identity is independent of worker count") {
  const auto ctx = make_context(192);
  const IdentityReport one = identity_check(97, ctx, 1);
  for (unsigned w : {4u, 8u}) {
    const IdentityReport many = identity_check(97, ctx, w);
    CHECK(many.identity_sum == one.identity_sum);
    CHECK(many.q_sum == one.q_sum);
    CHECK(many.r_sum == one.r_sum);
  }
}
