#include "planepart/exact_enum.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "planepart/errors.hpp"

namespace planepart {

namespace {

void check_n(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative, got " + std::to_string(n));
}

// Grow-only memo for p2d. Values are appended under the lock and never
// modified afterwards.
class PlaneCountTable {
 public:
  BigCount get(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) extend();
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void extend() {
    const int m = static_cast<int>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    sigma_.push_back(sigma2(m));
    BigCount acc;
    for (int j = 1; j <= m; ++j) acc += sigma_[static_cast<std::size_t>(j - 1)] * values_[static_cast<std::size_t>(m - j)];
    values_.push_back(exact_div(acc, static_cast<std::uint64_t>(m)));
  }

  std::mutex mutex_;
  std::vector<BigCount> values_;
  std::vector<BigCount> sigma_;  // sigma_[j-1] = sigma2(j)
};

PlaneCountTable& plane_table() {
  static PlaneCountTable table;
  return table;
}

}  // namespace

void RestrictionSpec::check() const {
  check_n(n, "RestrictionSpec");
  if (max_parts && *max_parts < 1) {
    throw DomainError("RestrictionSpec: max_parts must be >= 1, got " + std::to_string(*max_parts));
  }
}

BigCount p1d(int n) {
  check_n(n, "p1d");
  // p(m) = sum_{k>=1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      mpz_class term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2) acc += term; else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return BigCount(p[static_cast<std::size_t>(n)]);
}

BigCount p1d_atmost(const RestrictionSpec& spec) {
  spec.check();
  const int n = spec.n;
  const int largest = spec.saturates() ? n : *spec.max_parts;
  std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= largest; ++part) {
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  }
  return BigCount(ways[static_cast<std::size_t>(n)]);
}

BigCount sigma2(int k) {
  if (k < 1) throw DomainError("sigma2: k must be >= 1, got " + std::to_string(k));
  mpz_class total = 0;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    const long e = k / d;
    total += mpz_class(d) * d;
    if (e != d) total += mpz_class(e) * e;
  }
  return BigCount(total);
}

BigCount p2d(int n) {
  check_n(n, "p2d");
  return plane_table().get(n);
}

BigCount p2d_atmost(const RestrictionSpec& spec, const GeneratorLimits& limits) {
  spec.check();
  if (spec.saturates()) return p2d(spec.n);
  BigCount total;
  for (const auto& [parts, count] : count_by_parts(spec.n, limits)) {
    if (parts <= *spec.max_parts) total += count;
  }
  return total;
}

}  // namespace planepart
