#include "ecrep/counting.hpp"

#include <string>
#include <vector>

#include "ecrep/parallel.hpp"
#include "ecrep/repr.hpp"

namespace ecrep {

namespace {

constexpr std::size_t kChunk = 8;
constexpr unsigned kRenormEvery = 16;

std::string curve_label(const CurveParams& c) {
  return "(a=" + c.a.get_str() + ", b=" + c.b.get_str() + ", p=" + std::to_string(c.p) + ")";
}

void require_prime(const CurveParams& curve) {
  if (!is_prime(curve.p)) throw Error(ErrorKind::InvalidModulus, std::to_string(curve.p) + " is not prime");
}

void require_odd_prime(const CurveParams& curve) {
  require_prime(curve);
  if (curve.p == 2) throw Error(ErrorKind::InvalidModulus, "this method needs an odd prime");
}

void require_nonsingular(const CurveParams& curve, bool include_singular) {
  if (!include_singular && discriminant_class(curve) == DiscriminantClass::singular) {
    throw Error(ErrorKind::SingularCurve, "4a^3 + 27b^2 = 0 mod p for " + curve_label(curve));
  }
}

XReal target_eps(const PrecisionContext& ctx) { return XReal::pow2(-40, ctx.bits()); }

CountResult exact_result(Method method, std::int64_t n_p, const PrecisionContext* ctx = nullptr) {
  CountResult out;
  out.method = method;
  out.n_p = n_p;
  out.residual = ctx != nullptr ? ctx->zero() : XReal(64);
  return out;
}

// raw = 1 + p + weighted / p, rounded under the residual gate.
CountResult finish_analytic(Method method, std::int64_t p, XComplex weighted, const PrecisionContext& ctx) {
  XComplex raw = std::move(weighted);
  raw /= ctx.real(static_cast<long>(p));
  raw.re += static_cast<long>(p + 1);
  CountResult out;
  out.method = method;
  const BigInt rounded = raw.re.round_to_integer();
  out.n_p = rounded.get_si();
  const XReal dr = raw.re - ctx.real(rounded);
  out.residual = sqrt(dr * dr + raw.im * raw.im);
  if (!(out.residual < XReal(0.5, ctx.bits()))) {
    throw Error(ErrorKind::PrecisionExceeded,
                "residual " + out.residual.to_string(6) + " is not below 1/2; refusing to round");
  }
  out.raw = std::move(raw);
  return out;
}

// sum_{m=1}^{p-1} G(m) X(m), X indexed by m (X[0] unused).
XComplex weight_by_gauss(const std::vector<XComplex>& x_sums, std::int64_t p, const PrecisionContext& ctx) {
  XComplex acc(ctx.bits());
  for (std::int64_t m = 1; m < p; ++m) acc += gauss_sum_closed(m, p, ctx).value * x_sums[static_cast<std::size_t>(m)];
  return acc;
}

std::vector<XComplex> zero_vector(std::size_t n, const PrecisionContext& ctx) {
  return std::vector<XComplex>(n, XComplex(ctx.bits()));
}

void add_into(std::vector<XComplex>& acc, std::vector<XComplex>&& part) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
}

// Adds base^m to sums[m] for m = 1 .. p-1, multiplying incrementally and
// renormalizing to unit modulus every kRenormEvery steps.
void accumulate_powers(const XComplex& base, std::vector<XComplex>& sums, XComplex& cur, XComplex& scratch) {
  cur = base;
  for (std::size_t m = 1; m < sums.size(); ++m) {
    if (m > 1) {
      multiply_into(scratch, cur, base);
      swap(cur, scratch);
      if (m % kRenormEvery == 0) cur.normalize();
    }
    sums[m] += cur;
  }
}

struct PowerSums {
  std::vector<XComplex> sums;
  SeriesDiagnostics diag;
};

void merge_diag(SeriesDiagnostics& into, const SeriesDiagnostics& from) {
  into.terms_used += from.terms_used;
  if (into.tail_bound < from.tail_bound) into.tail_bound = from.tail_bound;
}

// Evaluates sum_x base(x)^m for all m using `base_of(x, diag)` to produce
// the unit-circle point for each x.
template <class BaseFn>
PowerSums power_sums(std::int64_t p, const PrecisionContext& ctx, unsigned workers, BaseFn&& base_of) {
  const auto n = static_cast<std::size_t>(p);
  PowerSums init{zero_vector(n, ctx), {0, ctx.zero()}};
  return ordered_reduce(
      n, kChunk, workers, std::move(init),
      [&](std::size_t begin, std::size_t end) {
        PowerSums part{zero_vector(n, ctx), {0, ctx.zero()}};
        XComplex cur(ctx.bits()), scratch(ctx.bits());
        for (std::size_t x = begin; x < end; ++x) {
          const XComplex base = base_of(static_cast<std::int64_t>(x), part.diag);
          accumulate_powers(base, part.sums, cur, scratch);
        }
        return part;
      },
      [](PowerSums& acc, PowerSums&& part) {
        add_into(acc.sums, std::move(part.sums));
        merge_diag(acc.diag, part.diag);
      });
}

void check_strictly_monotone(const CurveParams& curve, int direction) {
  BigInt prev = f_eval(curve, 0);
  for (std::int64_t x = 1; x < curve.p; ++x) {
    BigInt cur = f_eval(curve, x);
    if ((direction > 0 && !(cur > prev)) || (direction < 0 && !(cur < prev))) {
      throw Error(ErrorKind::AdmissibilityError, "f is not strictly monotone on [0, p-1] for " + curve_label(curve));
    }
    prev = std::move(cur);
  }
}

}  // namespace

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::legendre: return "legendre";
    case Method::expsum: return "expsum";
    case Method::thm2: return "thm2";
    case Method::thm3: return "thm3";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::naive, Method::legendre, Method::expsum, Method::thm2, Method::thm3}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::DomainError, "unknown method '" + std::string(name) + "'");
}

BigInt f_eval(const CurveParams& curve, const BigInt& x) { return x * x * x + curve.a * x + curve.b; }

DiscriminantClass discriminant_class(const CurveParams& curve) {
  const BigInt disc = 4 * curve.a * curve.a * curve.a + 27 * curve.b * curve.b;
  return mod_floor(disc, curve.p) == 0 ? DiscriminantClass::singular : DiscriminantClass::nonsingular;
}

CountResult count_naive(const CurveParams& curve, bool include_singular) {
  require_prime(curve);
  require_nonsingular(curve, include_singular);
  const std::int64_t p = curve.p;
  std::int64_t affine = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t fx = mod_floor(f_eval(curve, x), p);
    for (std::int64_t y = 0; y < p; ++y) {
      if (static_cast<std::int64_t>(static_cast<__int128>(y) * y % p) == fx) ++affine;
    }
  }
  return exact_result(Method::naive, affine + 1);
}

CountResult count_legendre(const CurveParams& curve, bool include_singular) {
  require_odd_prime(curve);
  require_nonsingular(curve, include_singular);
  std::int64_t total = 1 + curve.p;
  for (std::int64_t x = 0; x < curve.p; ++x) total += legendre_symbol(f_eval(curve, x), curve.p);
  return exact_result(Method::legendre, total);
}

GaussSumValue gauss_sum_direct(std::int64_t m, std::int64_t p, const PrecisionContext& ctx) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidModulus, "Gauss sums need an odd prime");
  if (m % p == 0) throw Error(ErrorKind::DomainError, "Gauss sum needs m != 0 mod p");
  XComplex acc(ctx.bits());
  for (std::int64_t y = 0; y < p; ++y) {
    const BigInt phase = BigInt(static_cast<long>(m)) * y * y;
    acc += unit_exp_ratio(phase, p, ctx);
  }
  return {m, std::move(acc)};
}

GaussSumValue gauss_sum_closed(std::int64_t m, std::int64_t p, const PrecisionContext& ctx) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidModulus, "Gauss sums need an odd prime");
  if (m % p == 0) throw Error(ErrorKind::DomainError, "Gauss sum needs m != 0 mod p");
  const XReal root = sqrt(ctx.real(static_cast<long>(p))) * static_cast<long>(legendre_symbol(m, p));
  if (p % 4 == 1) return {m, XComplex(root, ctx.zero())};
  return {m, XComplex(ctx.zero(), root)};
}

CountResult count_expsum(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers) {
  require_odd_prime(curve);
  require_precision(ctx, static_cast<std::uint64_t>(curve.p), target_eps(ctx));
  const std::int64_t p = curve.p;
  // e^{-2 pi i k/p} for every residue k.
  std::vector<XComplex> roots;
  roots.reserve(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) roots.push_back(unit_exp_ratio(BigInt(static_cast<long>(-k)), p, ctx));
  std::vector<std::int64_t> residues(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) residues[static_cast<std::size_t>(x)] = mod_floor(f_eval(curve, x), p);

  const auto n = static_cast<std::size_t>(p);
  std::vector<XComplex> x_sums = ordered_reduce(
      n, kChunk, workers, zero_vector(n, ctx),
      [&](std::size_t begin, std::size_t end) {
        auto part = zero_vector(n, ctx);
        for (std::size_t x = begin; x < end; ++x) {
          for (std::int64_t m = 1; m < p; ++m) {
            const auto k = static_cast<std::size_t>(static_cast<__int128>(m) * residues[x] % p);
            part[static_cast<std::size_t>(m)] += roots[k];
          }
        }
        return part;
      },
      [](std::vector<XComplex>& acc, std::vector<XComplex>&& part) { add_into(acc, std::move(part)); });
  return finish_analytic(Method::expsum, p, weight_by_gauss(x_sums, p, ctx), ctx);
}

CountResult count_expsum_triple(const CurveParams& curve, const PrecisionContext& ctx) {
  require_odd_prime(curve);
  if (curve.p > 13) throw Error(ErrorKind::BudgetExceeded, "triple-sum self-test is limited to p <= 13");
  const std::int64_t p = curve.p;
  XComplex acc(ctx.bits());
  for (std::int64_t x = 0; x < p; ++x) {
    const BigInt fx = f_eval(curve, x);
    for (std::int64_t y = 0; y < p; ++y) {
      const BigInt big_f = BigInt(static_cast<long>(y * y)) - fx;
      for (std::int64_t m = 0; m < p; ++m) acc += unit_exp_ratio(big_f * m, p, ctx);
    }
  }
  acc /= ctx.real(static_cast<long>(p));
  acc.re += 1L;
  CountResult out;
  out.method = Method::expsum;
  const BigInt rounded = acc.re.round_to_integer();
  out.n_p = rounded.get_si();
  const XReal dr = acc.re - ctx.real(rounded);
  out.residual = sqrt(dr * dr + acc.im * acc.im);
  if (!(out.residual < XReal(0.5, ctx.bits()))) throw Error(ErrorKind::PrecisionExceeded, "triple sum residual too large");
  out.raw = std::move(acc);
  return out;
}

CountResult count_thm2(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers) {
  require_odd_prime(curve);
  const std::int64_t p = curve.p;
  const BigInt p_cubed = BigInt(static_cast<long>(p)) * p * p;
  for (std::int64_t x = 0; x < p; ++x) {
    if (abs(f_eval(curve, x)) >= p_cubed) {
      throw Error(ErrorKind::AdmissibilityError,
                  "|f(" + std::to_string(x) + ")| >= p^3, so f/p^2 leaves (-p, p) for " + curve_label(curve));
    }
  }
  const auto p_squared = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p);
  require_precision(ctx, static_cast<std::uint64_t>(p - 1) * p_squared, target_eps(ctx));

  const Rational p2(static_cast<long>(p * p));
  PowerSums sums = power_sums(p, ctx, workers, [&](std::int64_t x, SeriesDiagnostics& diag) {
    const XReal scaled = ctx.real(Rational(f_eval(curve, x)) / p2);  // f(x)/p^2
    const UnitPoint point = QR(scaled, p, ctx, diag);
    return unit_pow(point.to_complex(), p_squared, kRenormEvery);
  });
  CountResult out = finish_analytic(Method::thm2, p, weight_by_gauss(sums.sums, p, ctx), ctx);
  out.diagnostics = std::move(sums.diag);
  return out;
}

std::int64_t find_L(const CurveParams& curve) {
  if (curve.a < 0 || curve.b < 0) {
    throw Error(ErrorKind::BranchError, "find_L needs a, b >= 0 (increasing branch) for " + curve_label(curve));
  }
  const BigInt p(static_cast<long>(curve.p));
  // Invariant: f(lo) < p (or lo = -1), f(hi) >= p (or hi = p).
  std::int64_t lo = -1;
  std::int64_t hi = curve.p;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (f_eval(curve, mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t find_L_decreasing(const CurveParams& curve) {
  check_strictly_monotone(curve, -1);
  const BigInt p(static_cast<long>(curve.p));
  std::int64_t split = curve.p - 1;
  while (split >= 0 && abs(f_eval(curve, split)) < p) --split;
  return split;
}

CountResult count_thm3(const CurveParams& curve, const PrecisionContext& ctx, unsigned workers) {
  require_odd_prime(curve);
  const std::int64_t p = curve.p;
  const BigInt pp(static_cast<long>(p));
  const bool increasing = curve.a >= 0 && curve.b >= 0;
  const bool decreasing = curve.a < -3 * (pp - 1) * (pp - 1) && curve.b <= 0;
  if (!increasing && !decreasing) {
    throw Error(ErrorKind::BranchError,
                "f is not monotone on [0, p-1]; the two-range split needs a, b >= 0 or a < -3(p-1)^2, b <= 0, got " +
                    curve_label(curve));
  }
  require_precision(ctx, static_cast<std::uint64_t>(p - 1), target_eps(ctx));

  std::int64_t split = 0;
  if (increasing) {
    check_strictly_monotone(curve, +1);
    split = find_L(curve);
  } else {
    split = find_L_decreasing(curve);
  }

  auto fractional_point = [&](const BigInt& fx, SeriesDiagnostics& diag) {
    const FracDecomposition dec = frac_decompose(fx, p, ctx);
    // f = 0 mod p: e^{-2 pi i r} = 1 (at most three such x).
    if (dec.residue == 0) return XComplex(ctx.real(1L), ctx.zero());
    return Q1R1(dec.r, ctx, diag).to_complex();
  };
  auto direct_point = [&](const BigInt& fx, SeriesDiagnostics& diag) {
    return QR(ctx.real(fx), p, ctx, diag).to_complex();
  };

  PowerSums sums = power_sums(p, ctx, workers, [&](std::int64_t x, SeriesDiagnostics& diag) {
    const BigInt fx = f_eval(curve, x);
    const bool in_prefix = x <= split;
    // Branch I: |f| < p on the prefix; branch II: on the suffix.
    if (in_prefix == increasing) return direct_point(fx, diag);
    return fractional_point(fx, diag);
  });
  // The m = 0 term is exactly p (p inner ones times the y-sum p, over p);
  // finish_analytic adds it as part of 1 + p.
  CountResult out = finish_analytic(Method::thm3, p, weight_by_gauss(sums.sums, p, ctx), ctx);
  out.diagnostics = std::move(sums.diag);
  out.l_value = split;
  return out;
}

bool hasse_check(std::int64_t n_p, std::int64_t p) {
  const __int128 dev = static_cast<__int128>(n_p) - p - 1;
  return dev * dev < static_cast<__int128>(4) * p;
}

}  // namespace ecrep
