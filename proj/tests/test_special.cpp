#include "doctest.h"
#include "ecrep/special.hpp"
#include "oracles.hpp"

using namespace ecrep;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("zeta at positive integers against MPFR") {
  for (int bits : {64, 128, 256}) {
    const auto ctx = make_context(bits);
    for (long s = 2; s <= 60; ++s) {
      CHECK(abs(zeta_pos(s, ctx) - oracle::zeta(s, bits)) <= ctx.epsilon());
    }
  }
  const auto ctx = make_context(128);
  const XReal pi = ctx.pi();
  CHECK(abs(zeta_pos(2, ctx) - pi * pi / 6L) <= ctx.epsilon());
  CHECK(abs(zeta_pos(4, ctx) - pow(pi, 4) / 90L) <= ctx.epsilon());
  // zeta(50) - 1 - 2^-50 is below 3^-50 ~ 2^-79.2.
  const XReal rest = zeta_pos(50, ctx) - 1L - XReal::pow2(-50, 128);
  CHECK(rest > 0L);
  CHECK(rest < XReal::pow2(-79, 128));
  CHECK_THROWS_AS(zeta_pos(1, ctx), Error);
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg(1) == Rational(-1, 12));
  CHECK(zeta_neg(2) == 0);
  CHECK(zeta_neg(3) == Rational(1, 120));
  for (long n = 2; n <= 18; n += 2) CHECK(zeta_neg(n) == 0);
  try {
    zeta_neg(0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedArgument);
  }
  const auto ctx = make_context(192);
  for (long n = 1; n <= 19; ++n) {
    CHECK(abs(zeta_neg_via_functional(n, ctx) - ctx.real(zeta_neg(n))) <= ctx.epsilon());
  }
}

TEST_CASE("series C against digamma") {
  const auto ctx = make_context(128);
  const XReal tol = default_series_tol(ctx);
  CHECK(abs(series_C(ctx.real(1L), ctx, tol).value - 1L) <= ctx.epsilon());
  CHECK(abs(series_C(ctx.real(2L), ctx, tol).value - XReal(0.75, 128)) <= ctx.epsilon());
  CHECK(abs(series_C(ctx.real(3L), ctx, tol).value - ctx.real(Rational(11, 18))) <= ctx.epsilon());
  for (double lam : {1e-6, 0.01, 0.5, 0.999, 1.5, 1.75, 1.999, 7.25}) {
    const XReal l(lam, 128);
    const SeriesValue v = series_C(l, ctx, tol);
    CHECK(abs(v.value - oracle::series_C(l, 128)) <= ctx.epsilon());
    CHECK(v.diagnostics.tail_bound <= tol);
    CHECK(v.diagnostics.terms_used > 0);
  }
  // Frozen mpmath values (40 digits).
  CHECK(abs(series_C(XReal(0.5, 128), ctx, tol).value -
            XReal::parse("1.227411277760218762331071514167293727698", 128)) <= ctx.epsilon());
  CHECK(abs(series_C(XReal(1.5, 128), ctx, tol).value -
            XReal::parse("0.8535815370311840318881349491668756870104", 128)) <= ctx.epsilon());
  // C(lambda) -> zeta(2) as lambda -> 0.
  CHECK(abs(series_C(XReal(1e-6, 128), ctx, tol).value - oracle::zeta(2, 128)) < XReal(1e-5, 128));
  CHECK_THROWS_AS(series_C(ctx.zero(), ctx, tol), Error);
  CHECK_THROWS_AS(series_C(ctx.real(-1L), ctx, tol), Error);
}

TEST_CASE("A1/B1 and A2/B2 pairs") {
  const auto ctx = make_context(128);
  const XReal tol = default_series_tol(ctx);
  const AuxPair zero = aux_A1B1(ctx.zero(), ctx, tol);
  CHECK(abs(zero.first - 1L) <= ctx.epsilon());
  CHECK(abs(zero.second - 1L) <= ctx.epsilon());
  const AuxPair half = aux_A1B1(XReal(0.5, 128), ctx, tol);
  const AuxPair minus_half = aux_A1B1(XReal(-0.5, 128), ctx, tol);
  const XReal upper = oracle::zeta(2, 128) + 1L;
  for (const XReal* v : {&half.first, &half.second}) {
    CHECK(*v > XReal(0.75, 128));
    CHECK(*v < upper);
  }
  CHECK(abs(minus_half.first - half.second) <= ctx.epsilon());
  CHECK_THROWS_AS(aux_A1B1(ctx.real(1L), ctx, tol), Error);

  const AuxPair r0 = aux_A2B2(ctx.zero(), ctx, tol);
  CHECK(abs(r0.first - 1L) <= ctx.epsilon());
  const AuxPair r_half = aux_A2B2(XReal(0.5, 128), ctx, tol);
  CHECK(r_half.first > r_half.second);
  CHECK_THROWS_AS(aux_A2B2(ctx.real(1L), ctx, tol), Error);
  CHECK_THROWS_AS(aux_A2B2(XReal(-0.1, 128), ctx, tol), Error);
}

TEST_CASE("shifted pair series and its integral form") {
  const auto ctx = make_context(128);
  const XReal tol = default_series_tol(ctx);
  const XReal quad_tol(1e-12, 128);
  CHECK(abs(shifted_pair_series(ctx.real(1L), ctx.real(2L), ctx, tol).value - XReal(0.5, 128)) <= ctx.epsilon());
  CHECK(abs(shifted_pair_series(ctx.real(1L), ctx.real(3L), ctx, tol).value - ctx.real(Rational(5, 12))) <=
        ctx.epsilon());
  const XReal frozen = XReal::parse("0.6899814698985290508104676927238034121485", 128);
  CHECK(abs(shifted_pair_series(XReal::parse("0.3", 128), XReal::parse("1.7", 128), ctx, tol).value - frozen) <=
        XReal(1e-30, 128));

  const std::pair<double, double> pairs[] = {{1, 2}, {1, 3}, {0.5, 1.5}, {0.3, 1.7}};
  for (const auto& [a, b] : pairs) {
    const XReal alpha(a, 128), beta(b, 128);
    const XReal quad = lemma1_integral(alpha, beta, ctx, tol);
    const XReal series = shifted_pair_series(alpha, beta, ctx, tol).value;
    CHECK(abs(quad - series) <= quad_tol);
  }
  CHECK(abs(lemma1_integral(ctx.real(1L), ctx.real(2L), ctx, tol) - XReal(0.5, 128)) <= quad_tol);
  CHECK(lemma1_integrand(ctx.real(1L), XReal(0.3, 128), XReal(1.7, 128)) == XReal(1.7, 128) - XReal(0.3, 128));
  CHECK_THROWS_AS(lemma1_integral(ctx.real(2L), ctx.real(1L), ctx, tol), Error);
  CHECK_THROWS_AS(lemma1_integral(ctx.zero(), ctx.real(1L), ctx, tol), Error);
}
