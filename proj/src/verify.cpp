#include "ecrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "ecrep/counting.hpp"
#include "ecrep/fracpart.hpp"
#include "ecrep/identity.hpp"
#include "ecrep/repr.hpp"
#include "ecrep/special.hpp"

namespace ecrep {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const PrecisionContext& ctx) : suite_(std::move(suite)), worst_(ctx.zero()) {}

  void exact(std::string label, bool ok, std::string detail = {}) {
    rows_.push_back({suite_, std::move(label), ok, {}, std::move(detail)});
  }

  // Passes when deviation <= tol.
  void within(std::string label, const XReal& deviation, const XReal& tol) {
    const bool ok = deviation.is_finite() && deviation <= tol;
    if (worst_ < deviation) worst_ = deviation;
    rows_.push_back({suite_, std::move(label), ok, deviation.to_string(4), ok ? "" : "tol " + tol.to_string(3)});
  }

  void failed(std::string label, const std::exception& e) {
    rows_.push_back({suite_, std::move(label), false, {}, e.what()});
  }

  // Runs `body`, turning library errors into a failed row.
  void guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      failed(label, e);
    }
  }

  SuiteReport finish() {
    SuiteReport out;
    out.name = suite_;
    out.cases = rows_.size();
    out.failures = static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](auto& r) { return !r.pass; }));
    out.worst_deviation = worst_.to_string(4);
    out.rows = std::move(rows_);
    return out;
  }

 private:
  std::string suite_;
  XReal worst_;
  std::vector<CaseRow> rows_;
};

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::string curve_label(std::int64_t a, std::int64_t b, std::int64_t p) {
  return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " p=" + std::to_string(p);
}

struct Curve3 {
  std::int64_t a, b, p;
};

// Full [0, ab_max]^2 grid over the primes, plus seeded random extras.
std::vector<Curve3> curve_grid(const std::vector<std::int64_t>& primes, std::int64_t ab_max,
                               const SuiteOptions& options) {
  std::vector<Curve3> grid;
  for (std::int64_t p : primes)
    for (std::int64_t a = 0; a <= ab_max; ++a)
      for (std::int64_t b = 0; b <= ab_max; ++b) grid.push_back({a, b, p});
  if (options.seed && !primes.empty()) {
    std::mt19937_64 rng(*options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    for (int i = 0; i < 8; ++i) {
      const std::int64_t p = primes[pick(rng)];
      std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
      const std::int64_t a = coeff(rng);
      grid.push_back({a, coeff(rng), p});
    }
  }
  return grid;
}

// Scales a nominal decimal tolerance so low-precision runs stay meaningful.
XReal loose_tol(double nominal, const PrecisionContext& ctx) {
  const XReal floor_tol = ctx.epsilon() * 10000L;
  const XReal t(nominal, ctx.bits());
  return t < floor_tol ? floor_tol : t;
}

XReal cdist(const XComplex& a, const XComplex& b) { return (a - b).abs(); }

SuiteReport suite_gauss(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("gauss", ctx);
  for (std::int64_t p : primes_between(3, o.max_p)) {
    const XReal tol = ctx.epsilon() * (8 * p);
    const XReal root = sqrt(ctx.real(static_cast<long>(p)));
    for (std::int64_t m = 1; m < p; ++m) {
      const std::string label = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      const auto direct = gauss_sum_direct(m, p, ctx);
      const auto closed = gauss_sum_closed(m, p, ctx);
      rec.within(label + " direct-closed", cdist(direct.value, closed.value), tol);
      rec.within(label + " |direct|-sqrt(p)", abs(direct.value.abs() - root), tol);
    }
  }
  return rec.finish();
}

SuiteReport suite_legendre(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("legendre", ctx);
  for (const auto& c : curve_grid(primes_between(3, std::min<std::int64_t>(o.max_p, 97)), 5, o)) {
    const CurveParams curve{c.a, c.b, c.p};
    if (discriminant_class(curve) == DiscriminantClass::singular) continue;
    const auto label = curve_label(c.a, c.b, c.p);
    rec.guard(label, [&] {
      const auto naive = count_naive(curve).n_p;
      const auto leg = count_legendre(curve).n_p;
      rec.exact(label, naive == leg && hasse_check(leg, c.p),
                "naive " + std::to_string(naive) + " legendre " + std::to_string(leg));
    });
  }
  return rec.finish();
}

// Shared body of the analytic counting suites.
void compare_analytic(Recorder& rec, const CurveParams& curve, const std::function<CountResult()>& method,
                      const XReal& residual_tol, bool include_singular) {
  const auto label = curve_label(curve.a.get_si(), curve.b.get_si(), curve.p);
  rec.guard(label, [&] {
    const bool singular = discriminant_class(curve) == DiscriminantClass::singular;
    const auto expected = count_naive(curve, include_singular).n_p;
    const CountResult got = method();
    const bool ok = got.n_p == expected && (singular || hasse_check(got.n_p, curve.p));
    if (!ok) {
      rec.exact(label, false, "expected " + std::to_string(expected) + " got " + std::to_string(got.n_p));
      return;
    }
    rec.within(label, got.residual, residual_tol);
  });
}

SuiteReport suite_expsum(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("expsum", ctx);
  const XReal tol(1e-9, ctx.bits());
  for (const auto& c : curve_grid(primes_between(5, std::min<std::int64_t>(o.max_p, 31)), 3, o)) {
    const CurveParams curve{c.a, c.b, c.p};
    if (discriminant_class(curve) == DiscriminantClass::singular) continue;
    compare_analytic(rec, curve, [&] { return count_expsum(curve, ctx, o.workers); }, tol, false);
  }
  return rec.finish();
}

SuiteReport suite_thm2(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("thm2", ctx);
  const XReal tol(1e-6, ctx.bits());
  for (std::int64_t p : {5, 7, 11, 13}) {
    if (p > o.max_p) continue;
    for (std::int64_t a = 0; a <= 2; ++a) {
      for (std::int64_t b = 0; b <= 2; ++b) {
        const CurveParams curve{a, b, p};
        if (discriminant_class(curve) == DiscriminantClass::singular) continue;
        compare_analytic(rec, curve, [&] { return count_thm2(curve, ctx, o.workers); }, tol, false);
      }
    }
  }
  return rec.finish();
}

SuiteReport suite_thm3(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("thm3", ctx);
  const XReal tol(1e-6, ctx.bits());
  for (const auto& c : curve_grid(primes_between(5, std::min<std::int64_t>(o.max_p, 31)), 3, o)) {
    const CurveParams curve{c.a, c.b, c.p};
    compare_analytic(rec, curve, [&] { return count_thm3(curve, ctx, o.workers); }, tol, true);
  }
  const CurveParams example{5, 37, 1087};
  rec.guard("L a=5 b=37 p=1087", [&] {
    const auto split = find_L(example);
    rec.exact("L a=5 b=37 p=1087", split == 9, "L = " + std::to_string(split));
  });
  compare_analytic(rec, example, [&] { return count_thm3(example, ctx, o.workers); }, tol, false);
  return rec.finish();
}

SuiteReport suite_repr(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("repr", ctx);
  const XReal tol = loose_tol(1e-25, ctx);
  for (std::int64_t p = 3; p <= 13; ++p) {
    for (std::int64_t f = 0; f < p; ++f) {
      const auto label = "S f=" + std::to_string(f) + " p=" + std::to_string(p);
      rec.guard(label, [&] {
        const XReal closed = S_closed(f, p, ctx);
        rec.within(label, abs(S_series(f, p, ctx).value - closed), tol);
        if (f > 0) {
          // Only the upper half of S_bounds holds; see S_bounds_sharp.
          rec.exact(label + " upper bound", closed < S_bounds(f, p, ctx).second);
          const auto [lo, hi] = S_bounds_sharp(f, p, ctx);
          rec.exact(label + " sharp sandwich", lo < closed && closed < hi);
        }
      });
    }
  }
  for (long j = 0; j < 64; ++j) {
    const auto label = "W r=" + std::to_string(j) + "/64";
    rec.guard(label, [&] {
      const XReal r = ctx.real(j) / 64L;
      rec.within(label, abs(W_series(r, ctx).value - W_closed(r, ctx)), tol);
    });
  }
  const XReal unit_tol = ctx.epsilon() * 16L;
  for (std::int64_t p = 2; p <= o.max_p; ++p) {
    for (std::int64_t x = 0; x < p; ++x) {
      const auto label = "QR x=" + std::to_string(x) + " p=" + std::to_string(p);
      rec.guard(label, [&] {
        const UnitPoint pt = QR(x, p, ctx);
        const XReal norm_dev = abs(pt.to_complex().norm() - 1L);
        const XComplex ref = unit_exp_ratio(BigInt(static_cast<long>(-x)), p, ctx);
        rec.within(label, max(norm_dev, cdist(pt.to_complex(), ref)), unit_tol);
        const XReal r = ctx.real(static_cast<long>(x)) / static_cast<long>(p);
        const UnitPoint pt1 = Q1R1(r, ctx);
        const XComplex ref1 = unit_exp(-r, ctx);
        rec.within(label + " Q1R1", max(abs(pt1.to_complex().norm() - 1L), cdist(pt1.to_complex(), ref1)),
                   unit_tol);
      });
    }
  }
  return rec.finish();
}

SuiteReport suite_special(const PrecisionContext& ctx, const SuiteOptions&) {
  Recorder rec("special", ctx);
  const XReal& eps = ctx.epsilon();
  for (long n = 1; n <= 19; ++n) {
    const auto label = "zeta(-" + std::to_string(n) + ")";
    const XReal exact = ctx.real(zeta_neg(n));
    rec.within(label, abs(exact - zeta_neg_via_functional(n, ctx)), eps);
    if (n % 2 == 0) rec.exact(label + " = 0", zeta_neg(n) == 0);
  }
  const XReal pi = ctx.pi();
  rec.within("zeta(2)", abs(zeta_pos(2, ctx) - pi * pi / 6L), eps);
  rec.within("zeta(4)", abs(zeta_pos(4, ctx) - pow(pi, 4) / 90L), eps);

  const XReal quad_tol(1e-12, ctx.bits());
  const std::pair<double, double> pairs[] = {{1, 2}, {1, 3}, {0.5, 1.5}, {0.3, 1.7}};
  for (const auto& [a, b] : pairs) {
    const auto label = "pair integral (" + std::to_string(a) + "," + std::to_string(b) + ")";
    rec.guard(label, [&] {
      const XReal alpha(a, ctx.bits()), beta(b, ctx.bits());
      const XReal tol = default_series_tol(ctx);
      const XReal quad = lemma1_integral(alpha, beta, ctx, tol);
      const XReal series = shifted_pair_series(alpha, beta, ctx, tol).value;
      rec.within(label, abs(quad - series), quad_tol);
    });
  }
  const XReal tol = default_series_tol(ctx);
  rec.within("telescoping 1/2",
             abs(shifted_pair_series(ctx.real(1L), ctx.real(2L), ctx, tol).value - XReal(0.5, ctx.bits())), quad_tol);
  rec.within("telescoping 5/12",
             abs(shifted_pair_series(ctx.real(1L), ctx.real(3L), ctx, tol).value - ctx.real(Rational(5, 12))),
             quad_tol);
  return rec.finish();
}

SuiteReport suite_identity(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("identity", ctx);
  for (std::int64_t p = 2; p <= o.max_p; ++p) {
    const auto label = "p=" + std::to_string(p);
    rec.guard(label, [&] {
      const IdentityReport r = identity_check(p, ctx, o.workers);
      const XReal tol = XReal(1e-20, ctx.bits()) * static_cast<long>(p);
      rec.within(label + " sum", r.abs_error, tol);
      rec.within(label + " Q", abs(r.q_sum), tol);
      rec.within(label + " R", abs(r.r_sum), tol);
    });
  }
  return rec.finish();
}

SuiteReport suite_fracpart(const PrecisionContext& ctx, const SuiteOptions& o) {
  Recorder rec("fracpart", ctx);
  const XReal tol = loose_tol(1e-20, ctx);
  const std::int64_t ns[] = {1, 2, 6, 7, 10, 14, 100, 499, 1000, 4096};
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 31, 64, 101}) {
    if (p > o.max_p) continue;
    for (std::int64_t n : ns) {
      const auto label = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      rec.guard(label, [&] {
        const FloorSumReport r = floor_via_expsum(n, p, ctx);
        if (r.floor_value != n / p) {
          rec.exact(label, false, "floor " + std::to_string(r.floor_value));
          return;
        }
        rec.within(label, r.deviation, tol);
        const XReal frac = frac_via_expsum(n, p, ctx);
        rec.within(label + " frac", abs(frac - ctx.real(exact_frac(n, p))), tol);
      });
    }
  }
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    bool all = true;
    for (std::int64_t f = 2; f <= 500; ++f) all = all && prop4_verify(f, p);
    rec.exact("recursion p=" + std::to_string(p), all);
  }
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    bool all = true;
    for (std::int64_t f = 1; f <= 200; ++f) all = all && prop5_lower_bound_exact(f, p) <= exact_frac(f, p);
    rec.exact("lower bound p=" + std::to_string(p), all);
  }
  for (std::int64_t p : primes_between(2, std::min<std::int64_t>(o.max_p, 31))) {
    for (std::int64_t a = -3; a <= 3; ++a) {
      for (std::int64_t b = -3; b <= 3; ++b) {
        const auto label = "roots " + curve_label(a, b, p);
        rec.guard(label, [&] { rec.exact(label, lagrange_root_count({a, b, p}) <= 3); });
      }
    }
  }
  return rec.finish();
}

using SuiteFn = SuiteReport (*)(const PrecisionContext&, const SuiteOptions&);

SuiteFn lookup(const std::string& name) {
  if (name == "gauss") return suite_gauss;
  if (name == "legendre") return suite_legendre;
  if (name == "expsum") return suite_expsum;
  if (name == "thm2") return suite_thm2;
  if (name == "thm3") return suite_thm3;
  if (name == "repr") return suite_repr;
  if (name == "special") return suite_special;
  if (name == "identity") return suite_identity;
  if (name == "fracpart") return suite_fracpart;
  throw Error(ErrorKind::DomainError, "unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gauss", "legendre", "expsum", "thm2", "thm3",
                                              "repr",  "special",  "identity", "fracpart"};
  return names;
}

SuiteReport run_suite(const std::string& name, const PrecisionContext& ctx, const SuiteOptions& options) {
  const SuiteFn fn = lookup(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = fn(ctx, options);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ecrep
