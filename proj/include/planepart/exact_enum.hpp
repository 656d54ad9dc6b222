#pragma once

#include <optional>

#include "planepart/big_count.hpp"
#include "planepart/plane_generator.hpp"

namespace planepart {

// A number n together with an optional cap on the count of nonzero parts.
struct RestrictionSpec {
  int n = 0;
  std::optional<int> max_parts;  // nullopt = unbounded

  // Throws DomainError unless n >= 0 and a bounded cap is >= 1.
  void check() const;
  bool saturates() const { return !max_parts || *max_parts >= n; }
};

/// Number of linear partitions of n, p1d(0) = 1. Euler's pentagonal recurrence.
BigCount p1d(int n);

/// Linear partitions of n into at most N parts. Coin-change DP over largest
/// part <= N (conjugation), independent of the pentagonal route in p1d.
BigCount p1d_atmost(const RestrictionSpec& spec);

/// Sum of d^2 over the divisors d of k.
BigCount sigma2(int k);

/// Number of plane partitions of n via n p(n) = sum_j sigma2(j) p(n-j).
/// Values are memoized process-wide; safe to call from several threads.
BigCount p2d(int n);

/// Plane partitions of n with at most N parts. Saturated caps (N >= n) come
/// straight from p2d; otherwise the generator's counting pass is used and
/// limits.max_n applies.
BigCount p2d_atmost(const RestrictionSpec& spec, const GeneratorLimits& limits = {});

}  // namespace planepart
