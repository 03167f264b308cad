#include "doctest.h"
#include "ecrep/repr.hpp"
#include "oracles.hpp"

using namespace ecrep;

TEST_CASE("S series and closed form against the cotangent oracle") {
  const auto ctx = make_context(128);
  const XReal tol(1e-25, 128);
  for (long p = 2; p <= 13; ++p) {
    for (long f = -(p - 1); f < p; ++f) {
      const XReal ref = oracle::S(f, p, 128);
      const XReal closed = S_closed(f, p, ctx);
      CHECK(abs(closed - ref) <= ctx.epsilon() * 4L);
      if (f >= 0) CHECK(abs(S_series(f, p, ctx).value - closed) <= tol);
      CHECK(abs(S_closed(-f, p, ctx) - closed) <= ctx.epsilon() * 4L);
    }
  }
  CHECK(S_closed(0, 7, ctx).is_zero());
  CHECK(S_series(0, 7, ctx).value.is_zero());
  // S(1, 2) = (1 - (pi/2) cot(pi/2)) = 1.
  CHECK(abs(S_series(1, 2, ctx).value - 1L) <= ctx.epsilon());
  CHECK(abs(S_closed(3, 7, ctx) - XReal::parse("2.424427966439142261572658891008257372501", 128)) <= ctx.epsilon());
  CHECK_THROWS_AS(S_closed(7, 7, ctx), Error);
  CHECK_THROWS_AS(S_series(-8, 7, ctx), Error);
}

TEST_CASE("S series diagnostics and truncation") {
  const auto ctx = make_context(128);
  const SeriesValue v = S_series(5, 11, ctx);
  CHECK(v.diagnostics.terms_used > 10);
  CHECK(v.diagnostics.tail_bound <= ctx.epsilon());
  CHECK(abs(v.value - XReal::parse("4.370767919599295859491469789386352858474", 128)) <= XReal(1e-25, 128));
  try {
    S_series(12, 13, ctx, 5);
    FAIL("expected truncation failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationFailure);
  }
}

TEST_CASE("S bounds") {
  const auto ctx = make_context(128);
  const auto [lo, hi] = S_bounds(1, 10, ctx);
  CHECK(abs(lo - (XReal(10L, 128) / 99L + ctx.real(Rational(3, 40)))) <= ctx.epsilon());
  const XReal pi = ctx.pi();
  CHECK(abs(hi - (XReal(10L, 128) / 99L + (pi * pi / 6L + 1L) / 10L)) <= ctx.epsilon());
  const auto zero = S_bounds(0, 7, ctx);
  CHECK(zero.first.is_zero());
  CHECK(zero.second.is_zero());
  for (long p = 3; p <= 13; ++p) {
    for (long f = 1; f < p; ++f) {
      const XReal s = S_closed(f, p, ctx);
      CHECK(s < S_bounds(f, p, ctx).second);
      // The stated lower bound sits above S on this whole grid.
      CHECK(S_bounds(f, p, ctx).first > s);
      const auto [slo, shi] = S_bounds_sharp(f, p, ctx);
      CHECK(slo < s);
      CHECK(s < shi);
    }
  }
}

TEST_CASE("W series and closed form") {
  const auto ctx = make_context(128);
  const XReal tol(1e-25, 128);
  for (long j = 0; j < 64; ++j) {
    const XReal r = ctx.real(j) / 64L;
    const XReal closed = W_closed(r, ctx);
    CHECK(abs(W_series(r, ctx).value - closed) <= tol);
    if (j > 0) CHECK(abs(closed - oracle::half_one_minus_cot(r, 128)) <= ctx.epsilon() * 4L);
  }
  CHECK(W_closed(ctx.zero(), ctx).is_zero());
  CHECK(abs(W_closed(XReal(0.5, 128), ctx) - XReal(0.5, 128)) <= ctx.epsilon());
  CHECK(abs(W_closed(ctx.real(1L) / 3L, ctx) - XReal::parse("0.1977001059609636915676536237263073779527", 128)) <=
        ctx.epsilon());
  CHECK(abs(W_closed(XReal::parse("0.9", 128), ctx) - XReal::parse("4.850972595708811431476824486322388448114", 128)) <=
        ctx.epsilon() * 8L);
  CHECK_THROWS_AS(W_closed(ctx.real(1L), ctx), Error);
  CHECK_THROWS_AS(W_series(XReal(-0.25, 128), ctx), Error);
}

TEST_CASE("Q, R reproduce e^{-2 pi i f/p}") {
  const auto ctx = make_context(192);
  const XReal tol = ctx.epsilon() * 16L;
  for (long p = 2; p <= 101; p += (p < 20 ? 1 : 9)) {
    for (long f = -(p - 1); f < p; ++f) {
      const UnitPoint pt = QR(f, p, ctx);
      const auto [c, s] = oracle::rotation(f, p, 192);
      CHECK(abs(pt.q - c) <= tol);
      CHECK(abs(pt.r_im - s) <= tol);
      CHECK(abs(pt.to_complex().norm() - 1L) <= tol);
    }
  }
  const UnitPoint quarter = QR(1, 4, ctx);
  CHECK(abs(quarter.q) <= tol);
  CHECK(abs(quarter.r_im + 1L) <= tol);
  const UnitPoint origin = QR(0, 5, ctx);
  CHECK(origin.q == 1L);
  CHECK(origin.r_im.is_zero());
  CHECK_THROWS_AS(QR(5, 5, ctx), Error);
}

TEST_CASE("Q, R at real arguments") {
  const auto ctx = make_context(192);
  const XReal tol = ctx.epsilon() * 16L;
  SeriesDiagnostics diag{0, ctx.zero()};
  // f = 31/49 with p = 7: e^{-2 pi i 31/343}.
  const XReal f = ctx.real(Rational(31, 49));
  const UnitPoint pt = QR(f, 7, ctx, diag);
  const auto [c, s] = oracle::rotation(31, 343, 192);
  CHECK(abs(pt.q - c) <= tol);
  CHECK(abs(pt.r_im - s) <= tol);
  CHECK(diag.terms_used > 0);
}

TEST_CASE("Q1, R1 reproduce e^{-2 pi i r}") {
  const auto ctx = make_context(192);
  const XReal tol = ctx.epsilon() * 16L;
  for (long den : {4L, 7L, 64L, 101L}) {
    for (long num = 0; num < den; ++num) {
      const UnitPoint pt = Q1R1(ctx.real(num) / den, ctx);
      const auto [c, s] = oracle::rotation(num, den, 192);
      CHECK(abs(pt.q - c) <= tol);
      CHECK(abs(pt.r_im - s) <= tol);
    }
  }
  const UnitPoint q = Q1R1(XReal(0.25, 192), ctx);
  CHECK(abs(q.q) <= tol);
  CHECK(abs(q.r_im + 1L) <= tol);
  const UnitPoint zero = Q1R1(ctx.zero(), ctx);
  CHECK(zero.q == 1L);
  CHECK(zero.r_im.is_zero());
}

TEST_CASE("fractional decomposition") {
  const auto ctx = make_context(128);
  const FracDecomposition a = frac_decompose(BigInt(10), 7, ctx);
  CHECK(a.k == 1);
  CHECK(a.residue == 3);
  CHECK(abs(a.r - ctx.real(3L) / 7L) <= ctx.epsilon());
  const FracDecomposition b = frac_decompose(BigInt(-10), 7, ctx);
  CHECK(b.k == -2);
  CHECK(b.residue == 4);
  const FracDecomposition c = frac_decompose(BigInt(14), 7, ctx);
  CHECK(c.residue == 0);
  CHECK(c.r.is_zero());
  const FracDecomposition big = frac_decompose(BigInt("1000000000000000000000001"), 1087, ctx);
  CHECK(big.k * 1087 + big.residue == BigInt("1000000000000000000000001"));
}
