#include "ecrep/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace ecrep {

namespace {

class BernoulliTable {
 public:
  Rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return values_[n];
  }

 private:
  void extend_to(unsigned n) {
    if (values_.empty()) values_.emplace_back(1);
    for (auto m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
      Rational acc = 0;
      BigInt binom = 1;  // C(m+1, 0)
      for (unsigned k = 0; k < m; ++k) {
        if (!(k >= 3 && k % 2 == 1)) acc += binom * values_[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      Rational b = -acc / Rational(m + 1);
      b.canonicalize();
      values_.push_back(b);
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

// Explicit-term count for an Euler-Maclaurin tail aimed at `tol`: the
// corrections bottom out near e^{-2 pi N}.
long initial_cutoff(const XReal& tol) {
  const long tol_exp = mpfr_get_exp(tol.get());
  const double neg_log = static_cast<double>(-tol_exp) * std::log(2.0);
  return std::max(4L, static_cast<long>(neg_log / (2.0 * M_PI)) + 4);
}

constexpr long kMaxCutoff = 1L << 20;
constexpr int kInternalGuard = 16;

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_table().get(n); }

XReal default_series_tol(const PrecisionContext& ctx) { return XReal::pow2(-ctx.bits(), ctx.bits()); }

SeriesValue zeta_pos_series(long s, const PrecisionContext& ctx, const XReal& tol) {
  if (s < 2) throw Error(ErrorKind::DomainError, "zeta_pos needs s >= 2, got " + std::to_string(s));
  const mpfr_prec_t bits = ctx.bits() + kInternalGuard;

  // For large s a handful of terms suffices: the tail past N is below
  // N^-s + N^{1-s}/(s-1).
  for (long n_direct = 2; n_direct <= 64; ++n_direct) {
    XReal nn(n_direct, bits);
    XReal bound = pow(nn, -s) + pow(nn, 1 - s) / (s - 1);
    if (bound <= tol) {
      XReal sum(bits);
      for (long n = n_direct - 1; n >= 1; --n) sum += pow(XReal(n, bits), -s);
      return {XReal(sum, ctx.bits()), {static_cast<std::size_t>(n_direct - 1), XReal(bound, ctx.bits())}};
    }
  }

  for (long cutoff = initial_cutoff(tol); cutoff <= kMaxCutoff; cutoff *= 2) {
    // Small terms first.
    XReal sum(bits);
    for (long n = cutoff - 1; n >= 1; --n) sum += pow(XReal(n, bits), -s);
    const XReal big_n(cutoff, bits);
    const XReal n_pow = pow(big_n, 1 - s);  // N^{1-s}
    XReal tail = n_pow / (s - 1) + ldexp(n_pow / big_n, -1);
    const XReal inv_n2 = 1L / (big_n * big_n);
    // coeff_k = s (s+1) ... (s+2k-2) / (2k)!,  term_k = B_2k coeff_k N^{1-s-2k}
    XReal coeff = XReal(s, bits) / 2L;
    XReal npow = n_pow * inv_n2;
    XReal previous_mag(bits);
    bool converged = false;
    XReal bound(bits);
    std::size_t used = static_cast<std::size_t>(cutoff - 1);
    for (long k = 1; k < 4 * cutoff + 64; ++k) {
      XReal term = XReal(bernoulli(static_cast<unsigned>(2 * k)), bits) * coeff * npow;
      XReal mag = abs(term);
      if (mag <= tol) {
        bound = mag;
        converged = true;
        break;
      }
      if (k > 1 && mag >= previous_mag) break;  // asymptotic series turned; raise N
      tail += term;
      ++used;
      previous_mag = mag;
      coeff *= XReal((s + 2 * k - 1) * (s + 2 * k), bits) / ((2 * k + 1) * (2 * k + 2));
      npow *= inv_n2;
    }
    if (converged) return {XReal(sum + tail, ctx.bits()), {used, XReal(bound, ctx.bits())}};
  }
  throw Error(ErrorKind::TruncationFailure, "zeta(" + std::to_string(s) + ") did not reach tolerance");
}

XReal zeta_pos(long s, const PrecisionContext& ctx) {
  return zeta_pos_series(s, ctx, ldexp(ctx.epsilon(), -4)).value;
}

Rational zeta_neg(long n) {
  if (n < 1) {
    throw Error(ErrorKind::UnsupportedArgument,
                "zeta(-n) is only defined here for n >= 1 (B_1 convention is ambiguous)");
  }
  Rational v = -bernoulli(static_cast<unsigned>(n + 1)) / Rational(n + 1);
  v.canonicalize();
  return v;
}

XReal zeta_neg_via_functional(long n, const PrecisionContext& ctx) {
  if (n < 1) throw Error(ErrorKind::UnsupportedArgument, "functional-equation route needs n >= 1");
  const mpfr_prec_t bits = ctx.bits() + kInternalGuard;
  const PrecisionContext wide = make_context(static_cast<int>(bits));
  const XReal pi = XReal::pi(bits);
  XReal sine = sin(ldexp(pi * n, -1));
  XReal factorial(bits);
  mpfr_fac_ui(factorial.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  XReal denom = ldexp(pow(pi, n + 1), n);
  XReal v = -(sine / denom) * factorial * zeta_pos(n + 1, wide);
  return XReal(v, ctx.bits());
}

SeriesValue shifted_pair_series(const XReal& alpha, const XReal& beta, const PrecisionContext& ctx,
                                const XReal& tol) {
  if (!(alpha > -1L) || !(beta > -1L)) {
    throw Error(ErrorKind::DomainError, "shifted pair series needs alpha, beta > -1");
  }
  if (!(tol > 0L)) throw Error(ErrorKind::DomainError, "tolerance must be positive");
  const mpfr_prec_t bits = ctx.bits() + kInternalGuard;
  const XReal a(alpha, bits);
  const XReal b(beta, bits);
  const XReal diff = b - a;

  for (long cutoff = initial_cutoff(tol); cutoff <= kMaxCutoff; cutoff *= 2) {
    XReal sum(bits);
    for (long n = cutoff - 1; n >= 1; --n) sum += 1L / ((a + n) * (b + n));

    // Tail from N: integral + g(N)/2 + sum_k B_2k/(2k) * u v H_2k with
    // u = 1/(N+alpha), v = 1/(N+beta), H_j = sum_{i<j} u^i v^{j-1-i}.
    // Every piece is a sum of same-signed terms, so there is no
    // cancellation even when alpha and beta nearly coincide.
    const XReal u = 1L / (a + cutoff);
    const XReal v = 1L / (b + cutoff);
    const XReal uv = u * v;
    XReal integral(bits);
    if (diff.is_zero()) {
      integral = u;
    } else {
      integral = log1p(diff * u) / diff;
    }
    XReal tail = integral + ldexp(uv, -1);

    XReal h(1L, bits);    // H_1
    XReal u_pow(u);       // u^1
    // Advance to H_2.
    h = v * h + u_pow;
    u_pow *= u;
    XReal previous_mag(bits);
    XReal bound(bits);
    bool converged = false;
    std::size_t used = static_cast<std::size_t>(cutoff - 1);
    for (long k = 1; k < 4 * cutoff + 64; ++k) {
      XReal term = XReal(bernoulli(static_cast<unsigned>(2 * k)), bits) / (2 * k) * uv * h;
      XReal mag = abs(term);
      if (mag <= tol) {
        bound = mag;
        converged = true;
        break;
      }
      if (k > 1 && mag >= previous_mag) break;
      tail += term;
      ++used;
      previous_mag = mag;
      // H_{2k} -> H_{2k+2}
      for (int step = 0; step < 2; ++step) {
        h = v * h + u_pow;
        u_pow *= u;
      }
    }
    if (converged) return {XReal(sum + tail, ctx.bits()), {used, XReal(bound, ctx.bits())}};
  }
  throw Error(ErrorKind::TruncationFailure, "shifted pair series did not reach tolerance");
}

SeriesValue series_C(const XReal& lambda, const PrecisionContext& ctx, const XReal& tol) {
  if (!(lambda > 0L)) throw Error(ErrorKind::DomainError, "C(lambda) needs lambda > 0");
  if (!(tol > 0L)) throw Error(ErrorKind::DomainError, "series tolerance must be positive");
  return shifted_pair_series(ctx.zero(), lambda, ctx, tol);
}

namespace {

AuxPair aux_pair(const XReal& x, const PrecisionContext& ctx, const XReal& tol) {
  SeriesValue minus = series_C(1L - x, ctx, tol);
  SeriesValue plus = series_C(1L + x, ctx, tol);
  SeriesDiagnostics combined{minus.diagnostics.terms_used + plus.diagnostics.terms_used,
                             max(minus.diagnostics.tail_bound, plus.diagnostics.tail_bound)};
  return {std::move(minus.value), std::move(plus.value), std::move(combined)};
}

}  // namespace

AuxPair aux_A1B1(const XReal& t, const PrecisionContext& ctx, const XReal& tol) {
  if (!(abs(t) < 1L)) throw Error(ErrorKind::DomainError, "A1/B1 need |t| < 1");
  return aux_pair(t, ctx, tol);
}

AuxPair aux_A2B2(const XReal& r, const PrecisionContext& ctx, const XReal& tol) {
  if (!(r >= 0L) || !(r < 1L)) throw Error(ErrorKind::DomainError, "A2/B2 need r in [0, 1)");
  return aux_pair(r, ctx, tol);
}

XReal lemma1_integrand(const XReal& x, const XReal& alpha, const XReal& beta) {
  const mpfr_prec_t bits = std::max({x.precision(), alpha.precision(), beta.precision()});
  if (x == 1L) return XReal(beta - alpha, bits);
  if (x.is_zero()) return XReal(bits);
  // x^alpha (1 - x^{beta-alpha}) / (1 - x), written to stay accurate near 1.
  const XReal log_x = log(XReal(x, bits));
  XReal numer = -(exp(alpha * log_x) * expm1((beta - alpha) * log_x));
  return numer / (1L - x);
}

namespace {

struct GaussLegendreRule {
  std::vector<XReal> nodes;    // on [-1, 1]
  std::vector<XReal> weights;
};

GaussLegendreRule make_rule(int order, mpfr_prec_t bits) {
  GaussLegendreRule rule;
  const XReal tol = XReal::pow2(-static_cast<long>(bits) + 4, bits);
  for (int i = 1; i <= order / 2; ++i) {
    XReal x(std::cos(M_PI * (i - 0.25) / (order + 0.5)), bits);
    XReal deriv(bits);
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_order(x) and P'_order(x).
      XReal p0(1L, bits), p1(x);
      for (int k = 2; k <= order; ++k) {
        XReal p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      deriv = static_cast<long>(order) * (x * p1 - p0) / (x * x - 1L);
      XReal dx = p1 / deriv;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    // Refresh the derivative at the converged node.
    XReal p0(1L, bits), p1(x);
    for (int k = 2; k <= order; ++k) {
      XReal p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / static_cast<long>(k);
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    deriv = static_cast<long>(order) * (x * p1 - p0) / (x * x - 1L);
    XReal w = 2L / ((1L - x * x) * deriv * deriv);
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
    rule.nodes.push_back(-x);
    rule.weights.push_back(w);
  }
  if (order % 2 == 1) {
    // Odd orders are not used; the middle node would go here.
    throw Error(ErrorKind::DomainError, "Gauss-Legendre order must be even");
  }
  return rule;
}

class PanelIntegrator {
 public:
  PanelIntegrator(const XReal& alpha, const XReal& beta, mpfr_prec_t bits)
      : alpha_(alpha, bits), beta_(beta, bits), rule_(make_rule(20, bits)), bits_(bits) {}

  XReal rule(const XReal& lo, const XReal& hi) const {
    const XReal half = ldexp(hi - lo, -1);
    const XReal mid = lo + half;
    XReal acc(bits_);
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      acc += rule_.weights[i] * lemma1_integrand(mid + half * rule_.nodes[i], alpha_, beta_);
    }
    return acc * half;
  }

  XReal adaptive(const XReal& lo, const XReal& hi, const XReal& whole, const XReal& tol, int depth) const {
    const XReal mid = ldexp(lo + hi, -1);
    XReal left = rule(lo, mid);
    XReal right = rule(mid, hi);
    XReal refined = left + right;
    if (abs(refined - whole) <= ldexp(tol, -1) || depth >= 48) return refined;
    const XReal half_tol = ldexp(tol, -1);
    return adaptive(lo, mid, left, half_tol, depth + 1) + adaptive(mid, hi, right, half_tol, depth + 1);
  }

 private:
  XReal alpha_;
  XReal beta_;
  GaussLegendreRule rule_;
  mpfr_prec_t bits_;
};

}  // namespace

XReal lemma1_integral(const XReal& alpha, const XReal& beta, const PrecisionContext& ctx, const XReal& tol) {
  if (!(alpha > 0L) || !(beta > alpha)) throw Error(ErrorKind::DomainError, "need beta > alpha > 0");
  if (!(tol > 0L)) throw Error(ErrorKind::DomainError, "quadrature tolerance must be positive");
  const mpfr_prec_t bits = ctx.bits() + kInternalGuard;
  const XReal diff(beta - alpha, bits);
  // Target for the raw integral; the result is divided by beta - alpha.
  const XReal target = ldexp(tol * diff, -1);

  // x^alpha is not smooth at 0, so panels are graded dyadically toward 0
  // and the innermost piece [0, 2^-J] is small enough to be bounded:
  // its integral is below 2^{-J(1+alpha)} / ((1+alpha)(1 - 2^-J)).
  const XReal one_plus_alpha = XReal(alpha, bits) + 1L;
  long depth = 1;
  for (; depth < 4000; ++depth) {
    XReal head = exp(-(one_plus_alpha * depth) * log(XReal(2L, bits))) / one_plus_alpha * 2L;
    if (head <= ldexp(target, -3)) break;
  }

  PanelIntegrator integrator(alpha, beta, bits);
  const XReal panel_tol = target / (2L * (depth + 1));
  XReal total(bits);
  // Innermost first so small contributions are accumulated before large ones.
  {
    const XReal lo(bits);
    const XReal hi = XReal::pow2(-depth, bits);
    total += integrator.adaptive(lo, hi, integrator.rule(lo, hi), panel_tol, 0);
  }
  for (long j = depth - 1; j >= 0; --j) {
    const XReal lo = XReal::pow2(-(j + 1), bits);
    const XReal hi = XReal::pow2(-j, bits);
    total += integrator.adaptive(lo, hi, integrator.rule(lo, hi), panel_tol, 0);
  }
  return XReal(total / diff, ctx.bits());
}

}  // namespace ecrep
