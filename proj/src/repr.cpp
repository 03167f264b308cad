#include "ecrep/repr.hpp"

#include <string>

namespace ecrep {

namespace {

constexpr int kGuard = 16;

void merge(SeriesDiagnostics& into, const SeriesDiagnostics& from) {
  into.terms_used += from.terms_used;
  if (into.tail_bound.precision() < from.tail_bound.precision() || into.tail_bound < from.tail_bound) {
    into.tail_bound = from.tail_bound;
  }
}

void check_below_p(const XReal& f, std::int64_t p) {
  if (p < 2) throw Error(ErrorKind::DomainError, "modulus must be at least 2");
  if (!(abs(f) < static_cast<long>(p))) {
    throw Error(ErrorKind::DomainError, "|f| must be below p=" + std::to_string(p));
  }
}

void check_unit_interval(const XReal& r) {
  if (!(r >= 0L) || !(r < 1L)) throw Error(ErrorKind::DomainError, "r must lie in [0, 1)");
}

// scale * sum_{k>=1} zeta(2k) t^{2k}, stopped once the geometric majorant
// zeta(2) * scale * t^{2k+2} / (1 - t^2) of the remainder is below epsilon.
SeriesValue even_zeta_series(const XReal& t, const XReal& scale, const PrecisionContext& ctx,
                             std::size_t max_terms) {
  const int bits = ctx.bits() + kGuard;
  const PrecisionContext wide = make_context(bits);
  const XReal q = XReal(t, bits) * XReal(t, bits);
  if (q.is_zero()) return {ctx.zero(), {0, ctx.zero()}};
  const XReal zeta2 = zeta_pos(2, wide);
  const XReal geometric = q / (1L - q);
  const XReal& target = ctx.epsilon();

  XReal sum(bits);
  XReal power(q);  // t^{2k}
  for (std::size_t k = 1; k <= max_terms; ++k) {
    sum += zeta_pos(static_cast<long>(2 * k), wide) * power * scale;
    XReal bound = zeta2 * abs(scale) * power * geometric;
    if (bound <= target) return {XReal(sum, ctx.bits()), {k, XReal(bound, ctx.bits())}};
    power *= q;
  }
  throw Error(ErrorKind::TruncationFailure,
              "zeta power series did not reach epsilon in " + std::to_string(max_terms) + " terms");
}

// Half of the bracket shared by both closed forms:
//   x/2 * (2x/(1-x^2) - (1-x) C(1-x) + (1+x) C(1+x)).
// S = p * half_bracket(f/p) and W = half_bracket(r).
XReal half_bracket(const XReal& x, const PrecisionContext& wide, SeriesDiagnostics* diag) {
  if (x.is_zero()) return wide.zero();
  const AuxPair aux = aux_A1B1(x, wide, default_series_tol(wide));
  if (diag != nullptr) merge(*diag, aux.diagnostics);
  XReal bracket = ldexp(x, 1) / (1L - x * x) - (1L - x) * aux.first + (1L + x) * aux.second;
  return ldexp(x * bracket, -1);
}

XReal s_closed_impl(const XReal& f, std::int64_t p, const PrecisionContext& ctx, SeriesDiagnostics* diag) {
  check_below_p(f, p);
  if (f.is_zero()) return ctx.zero();
  const PrecisionContext wide = make_context(ctx.bits() + kGuard);
  const XReal t = XReal(f, wide.bits()) / static_cast<long>(p);
  return XReal(half_bracket(t, wide, diag) * static_cast<long>(p), ctx.bits());
}

// The shared Q/R construction: e^{-2 pi i f/m} from f, m and 2S (or 2W).
UnitPoint unit_point(const XReal& f, const XReal& modulus, const XReal& two_s, mpfr_prec_t bits) {
  const XReal pi = XReal::pi(bits);
  const XReal pf = pi * f;
  const XReal gap = modulus - two_s;  // p - 2S
  const XReal d = gap * gap + pf * pf;
  XReal q = 1L - ldexp(pf * pf, 1) / d;
  // R = 2 pi f (2S - p) / D in both cases; for (Q1, R1) that is
  // 2 pi r (2W - 1) / D.
  XReal r = -ldexp(pf * gap, 1) / d;
  return {XReal(q, bits), XReal(r, bits)};
}

UnitPoint qr_impl(const XReal& f, std::int64_t p, const PrecisionContext& ctx, SeriesDiagnostics* diag) {
  check_below_p(f, p);
  const int bits = ctx.bits() + kGuard;
  const XReal s = s_closed_impl(f, p, make_context(bits), diag);
  UnitPoint wide = unit_point(XReal(f, bits), XReal(static_cast<long>(p), bits), ldexp(s, 1), bits);
  return {XReal(wide.q, ctx.bits()), XReal(wide.r_im, ctx.bits())};
}

XReal w_closed_impl(const XReal& r, const PrecisionContext& ctx, SeriesDiagnostics* diag) {
  check_unit_interval(r);
  if (r.is_zero()) return ctx.zero();
  const PrecisionContext wide = make_context(ctx.bits() + kGuard);
  return XReal(half_bracket(XReal(r, wide.bits()), wide, diag), ctx.bits());
}

UnitPoint q1r1_impl(const XReal& r, const PrecisionContext& ctx, SeriesDiagnostics* diag) {
  check_unit_interval(r);
  const int bits = ctx.bits() + kGuard;
  const XReal w = w_closed_impl(r, make_context(bits), diag);
  UnitPoint wide = unit_point(XReal(r, bits), XReal(1L, bits), ldexp(w, 1), bits);
  return {XReal(wide.q, ctx.bits()), XReal(wide.r_im, ctx.bits())};
}

}  // namespace

SeriesValue S_series(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx, std::size_t max_terms) {
  return S_series(ctx.real(static_cast<long>(f_val)), p, ctx, max_terms);
}

SeriesValue S_series(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx, std::size_t max_terms) {
  check_below_p(f_val, p);
  const int bits = ctx.bits() + kGuard;
  const XReal t = XReal(f_val, bits) / static_cast<long>(p);
  return even_zeta_series(t, XReal(static_cast<long>(p), bits), ctx, max_terms);
}

XReal S_closed(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  return s_closed_impl(ctx.real(static_cast<long>(f_val)), p, ctx, nullptr);
}

XReal S_closed(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx) {
  return s_closed_impl(f_val, p, ctx, nullptr);
}

std::pair<XReal, XReal> S_bounds(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  if (f_val == 0) return {ctx.zero(), ctx.zero()};
  check_below_p(ctx.real(static_cast<long>(f_val)), p);
  const int bits = ctx.bits() + kGuard;
  const XReal f(static_cast<long>(f_val), bits);
  const XReal pp(static_cast<long>(p), bits);
  const XReal f2 = f * f;
  const XReal base = pp / (pp * pp - f2);
  const XReal pi = XReal::pi(bits);
  XReal lo = f2 * (base + XReal(3L, bits) / (4L * pp));
  XReal hi = f2 * (base + (pi * pi / 6L + 1L) / pp);
  return {XReal(lo, ctx.bits()), XReal(hi, ctx.bits())};
}

std::pair<XReal, XReal> S_bounds_sharp(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  if (f_val == 0) return {ctx.zero(), ctx.zero()};
  check_below_p(ctx.real(static_cast<long>(f_val)), p);
  const int bits = ctx.bits() + kGuard;
  const XReal f(static_cast<long>(f_val), bits);
  const XReal pp(static_cast<long>(p), bits);
  const XReal f2 = f * f;
  const XReal base = pp / (pp * pp - f2);
  const XReal pi = XReal::pi(bits);
  const XReal zeta2 = pi * pi / 6L;
  XReal lo = f2 * (base + (zeta2 - XReal(1.25, bits)) / pp);
  XReal hi = f2 * (base + zeta2 / pp);
  return {XReal(lo, ctx.bits()), XReal(hi, ctx.bits())};
}

UnitPoint QR(std::int64_t f_val, std::int64_t p, const PrecisionContext& ctx) {
  return qr_impl(ctx.real(static_cast<long>(f_val)), p, ctx, nullptr);
}

UnitPoint QR(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx) {
  return qr_impl(f_val, p, ctx, nullptr);
}

UnitPoint QR(const XReal& f_val, std::int64_t p, const PrecisionContext& ctx, SeriesDiagnostics& diag) {
  return qr_impl(f_val, p, ctx, &diag);
}

FracDecomposition frac_decompose(const BigInt& f_val, std::int64_t p, const PrecisionContext& ctx) {
  if (p < 2) throw Error(ErrorKind::DomainError, "modulus must be at least 2");
  FracDecomposition out{BigInt(), 0, ctx.zero()};
  const BigInt modulus(static_cast<long>(p));
  BigInt rem;
  mpz_fdiv_qr(out.k.get_mpz_t(), rem.get_mpz_t(), f_val.get_mpz_t(), modulus.get_mpz_t());
  out.residue = rem.get_si();
  out.r = ctx.real(static_cast<long>(out.residue)) / static_cast<long>(p);
  return out;
}

SeriesValue W_series(const XReal& r, const PrecisionContext& ctx, std::size_t max_terms) {
  check_unit_interval(r);
  if (r.is_zero()) return {ctx.zero(), {0, ctx.zero()}};
  return even_zeta_series(r, XReal(1L, ctx.bits() + kGuard), ctx, max_terms);
}

XReal W_closed(const XReal& r, const PrecisionContext& ctx) { return w_closed_impl(r, ctx, nullptr); }

UnitPoint Q1R1(const XReal& r, const PrecisionContext& ctx) { return q1r1_impl(r, ctx, nullptr); }

UnitPoint Q1R1(const XReal& r, const PrecisionContext& ctx, SeriesDiagnostics& diag) {
  return q1r1_impl(r, ctx, &diag);
}

}  // namespace ecrep
