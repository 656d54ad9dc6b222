#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace planepart {

/// Exact nonnegative integer used for every partition count.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by design of counts
  explicit BigCount(mpz_class v);

  /// Parses a decimal string of digits; throws DomainError on anything else.
  static BigCount parse(std::string_view decimal);

  std::string to_string() const { return value_.get_str(10); }
  double to_double() const { return value_.get_d(); }
  const mpz_class& raw() const { return value_; }

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  // Subtraction requires a >= b; counts never go negative.
  friend BigCount operator-(const BigCount& a, const BigCount& b);
  // Exact division; the divisor must divide the dividend.
  friend BigCount exact_div(const BigCount& a, std::uint64_t d);

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& out, const BigCount& c) { return out << c.to_string(); }

 private:
  mpz_class value_{0};
};

}  // namespace planepart
