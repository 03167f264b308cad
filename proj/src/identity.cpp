#include "ecrep/identity.hpp"

#include "ecrep/parallel.hpp"
#include "ecrep/repr.hpp"

namespace ecrep {

namespace {

struct Sums {
  XReal q, r, identity;
};

}  // namespace

IdentityReport identity_check(std::int64_t p, const PrecisionContext& ctx, unsigned workers) {
  if (p < 2) throw Error(ErrorKind::DomainError, "identity needs p >= 2");
  const PrecisionContext wide = make_context(ctx.bits() + 16);
  const XReal pi = wide.pi();
  const XReal modulus = wide.real(static_cast<long>(p));

  Sums init{wide.zero(), wide.zero(), wide.zero()};
  Sums total = ordered_reduce(
      static_cast<std::size_t>(p), 8, workers, std::move(init),
      [&](std::size_t begin, std::size_t end) {
        Sums part{wide.zero(), wide.zero(), wide.zero()};
        for (std::size_t i = begin; i < end; ++i) {
          const auto x = static_cast<std::int64_t>(i);
          const UnitPoint point = QR(x, p, wide);
          part.q += point.q;
          part.r += point.r_im;
          if (x == 0) continue;
          const XReal gap = modulus - ldexp(S_closed(x, p, wide), 1);
          const XReal px = pi * static_cast<long>(x);
          part.identity += ldexp(px * px, 1) / (gap * gap + px * px);
        }
        return part;
      },
      [](Sums& acc, Sums&& part) {
        acc.q += part.q;
        acc.r += part.r;
        acc.identity += part.identity;
      });

  IdentityReport out;
  out.p = p;
  out.q_sum = XReal(total.q, ctx.bits());
  out.r_sum = XReal(total.r, ctx.bits());
  out.identity_sum = XReal(total.identity, ctx.bits());
  out.abs_error = XReal(abs(total.identity - modulus), ctx.bits());
  return out;
}

}  // namespace ecrep
