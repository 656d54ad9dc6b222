#include <gtest/gtest.h>

#include <cstdint>
#include <thread>
#include <vector>

#include "planepart/errors.hpp"
#include "planepart/exact_enum.hpp"

namespace {

using namespace planepart;

// Brute-force oracle: walk every nonincreasing sequence summing to n and
// tally it if it has at most `cap` parts.
std::uint64_t brute_linear(int n, int cap, int largest, int used) {
  if (n == 0) return 1;
  if (used == cap) return 0;
  std::uint64_t total = 0;
  for (int v = std::min(n, largest); v >= 1; --v) total += brute_linear(n - v, cap, v, used + 1);
  return total;
}

std::uint64_t brute_linear(int n, int cap) { return brute_linear(n, cap, n, 0); }

TEST(P1d, SmallValues) {
  EXPECT_EQ(p1d(0), BigCount(1));
  EXPECT_EQ(p1d(4), BigCount(5));
  EXPECT_EQ(p1d(10), BigCount(42));
}

TEST(P1d, MatchesBruteForce) {
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(p1d(n), BigCount(brute_linear(n, n))) << "n = " << n;
}

TEST(P1d, LargeValueIsExact) {
  EXPECT_EQ(p1d(100), BigCount(190569292));
  EXPECT_EQ(p1d(500).to_string(), "2300165032574323995027");
}

TEST(P1dAtMost, Examples) {
  EXPECT_EQ(p1d_atmost({4, 2}), BigCount(3));
  EXPECT_EQ(p1d_atmost({7, 1}), BigCount(1));
  EXPECT_EQ(p1d_atmost({10, 10}), BigCount(42));
  EXPECT_EQ(p1d_atmost({10, std::nullopt}), BigCount(42));
}

TEST(P1dAtMost, MatchesBruteForce) {
  for (int n = 0; n <= 20; ++n) {
    for (int cap = 1; cap <= n + 1; ++cap) {
      EXPECT_EQ(p1d_atmost({n, cap}), BigCount(brute_linear(n, cap))) << n << "," << cap;
    }
  }
}

TEST(P1dAtMost, ExactPartClassesTelescope) {
  for (int n : {1, 7, 25, 60}) {
    BigCount sum;
    BigCount previous;
    for (int cap = 1; cap <= n; ++cap) {
      const BigCount cur = p1d_atmost({n, cap});
      ASSERT_GE(cur, previous);
      sum += cur - previous;
      previous = cur;
    }
    EXPECT_EQ(sum, p1d(n));
  }
}

TEST(RestrictionSpec, RejectsBadInput) {
  EXPECT_THROW(p1d_atmost({-1, 3}), DomainError);
  EXPECT_THROW(p1d_atmost({5, 0}), DomainError);
  EXPECT_THROW(p2d_atmost({5, 0}), DomainError);
  EXPECT_THROW(p1d(-2), DomainError);
  EXPECT_THROW(p2d(-2), DomainError);
}

TEST(Sigma2, Examples) {
  EXPECT_EQ(sigma2(1), BigCount(1));
  EXPECT_EQ(sigma2(4), BigCount(21));
  EXPECT_EQ(sigma2(6), BigCount(50));
  EXPECT_THROW(sigma2(0), DomainError);
}

TEST(Sigma2, MatchesTrialDivision) {
  for (int k = 1; k <= 500; ++k) {
    std::uint64_t s = 0;
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) s += static_cast<std::uint64_t>(d) * d;
    }
    EXPECT_EQ(sigma2(k), BigCount(s)) << k;
  }
}

TEST(P2d, ReferenceValues) {
  EXPECT_EQ(p2d(0), BigCount(1));
  EXPECT_EQ(p2d(4), BigCount(13));
  EXPECT_EQ(p2d(10), BigCount(500));
  EXPECT_EQ(p2d(15), BigCount(6879));
  EXPECT_EQ(p2d(20), BigCount(75278));
}

TEST(P2d, BeyondFixedWidth) {
  // 200 -> 28 digits; computed with the divisor recurrence in exact integers.
  EXPECT_EQ(p2d(200).to_string(), "4066263490068623016919082185");
}

TEST(P2d, MemoIsSafeUnderConcurrentFirstUse) {
  std::vector<std::thread> workers;
  std::vector<BigCount> results(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &results] { results[static_cast<std::size_t>(t)] = p2d(300 + (t % 2)); });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(results[static_cast<std::size_t>(t)], p2d(300 + (t % 2)));
}

TEST(P2dAtMost, ReferenceValues) {
  EXPECT_EQ(p2d_atmost({10, 9}), BigCount(458));
  EXPECT_EQ(p2d_atmost({15, 14}), BigCount(6703));
  EXPECT_EQ(p2d_atmost({20, 18}), BigCount(74161));
}

TEST(P2dAtMost, SaturatedCapSkipsGenerator) {
  EXPECT_EQ(p2d_atmost({60, 60}, GeneratorLimits{30, 1}), p2d(60));
  EXPECT_EQ(p2d_atmost({60, std::nullopt}, GeneratorLimits{30, 1}), p2d(60));
  EXPECT_THROW(p2d_atmost({31, 5}, GeneratorLimits{30, 1}), ResourceLimitError);
}

TEST(P2dAtMost, PartsIdentity) {
  for (int n = 2; n <= 15; ++n) EXPECT_EQ(p2d(n) - p2d_atmost({n, n - 1}), p1d(n)) << n;
}

TEST(P2dAtMost, MonotoneInCapAndSaturates) {
  for (int n = 1; n <= 14; ++n) {
    BigCount prev;
    for (int cap = 1; cap <= n + 2; ++cap) {
      const BigCount cur = p2d_atmost({n, cap});
      EXPECT_GE(cur, prev);
      if (cap >= n) EXPECT_EQ(cur, p2d(n));
      prev = cur;
    }
  }
}

}  // namespace
