#include "planepart/big_count.hpp"

#include <algorithm>
#include <cctype>

#include "planepart/errors.hpp"

namespace planepart {

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("BigCount: negative value");
}

BigCount BigCount::parse(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("BigCount: not a decimal integer: '" + std::string(decimal) + "'");
  }
  return BigCount(mpz_class(std::string(decimal), 10));
}

BigCount operator-(const BigCount& a, const BigCount& b) {
  if (a < b) throw DomainError("BigCount: subtraction would go negative");
  return BigCount(mpz_class(a.value_ - b.value_));
}

BigCount exact_div(const BigCount& a, std::uint64_t d) {
  if (d == 0) throw DomainError("BigCount: division by zero");
  mpz_class q;
  mpz_class r;
  const mpz_class divisor(static_cast<unsigned long>(d));
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value_.get_mpz_t(), divisor.get_mpz_t());
  if (r != 0) throw DomainError("BigCount: inexact division");
  return BigCount(std::move(q));
}

}  // namespace planepart
