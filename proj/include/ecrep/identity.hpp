#pragma once

// For f(x) = x the points Q(x) + iR(x) are the p-th roots of unity, so
//   sum_x Q(x) = sum_x R(x) = 0  and  p = sum_x 2 pi^2 x^2 / ((p - 2S(x))^2 + (pi x)^2).
// Holds for composite p as well.

#include <cstdint>

#include "ecrep/numerics.hpp"

namespace ecrep {

struct IdentityReport {
  std::int64_t p = 0;
  XReal q_sum;
  XReal r_sum;
  XReal identity_sum;
  XReal abs_error;  // |identity_sum - p|
};

/// p < 2 throws DomainError.
IdentityReport identity_check(std::int64_t p, const PrecisionContext& ctx, unsigned workers = 1);

}  // namespace ecrep
