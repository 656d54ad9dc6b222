#include "planepart/bose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <quadmath.h>

#include "planepart/errors.hpp"

namespace planepart {

namespace {

// 1 - x^k without cancellation for x near 1.
double one_minus_pow(double log_x, int k) { return -std::expm1(k * log_x); }

void check_count(int n, int min, const char* what) {
  if (n < min) throw DomainError(std::string(what) + ": N must be >= " + std::to_string(min) + ", got " + std::to_string(n));
}

using Quad = __float128;

template <class Real>
struct Ops;

template <>
struct Ops<double> {
  static double exp(double v) { return std::exp(v); }
  static double log(double v) { return std::log(v); }
  static double log1p(double v) { return std::log1p(v); }
  static double expm1(double v) { return std::expm1(v); }
};

template <>
struct Ops<Quad> {
  static Quad exp(Quad v) { return expq(v); }
  static Quad log(Quad v) { return logq(v); }
  static Quad log1p(Quad v) { return log1pq(v); }
  static Quad expm1(Quad v) { return expm1q(v); }
};

// Neumaier summation in the working precision.
template <class Real>
class Accumulator {
 public:
  void add(Real v) {
    const Real t = sum_ + v;
    if ((sum_ < 0 ? -sum_ : sum_) >= (v < 0 ? -v : v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_ = 0;
  Real carry_ = 0;
};

// ln Z_N for N = 0..n_max by log-sum-exp over the recurrence terms.
template <class Real>
std::vector<Real> log_recurrence(const OscillatorPoint& point, int n_max) {
  using M = Ops<Real>;
  const auto size = static_cast<std::size_t>(n_max) + 1;
  const Real log_x = M::log(Real(point.x()));
  std::vector<Real> log_b(size, 0);
  for (int k = 1; k <= n_max; ++k) log_b[static_cast<std::size_t>(k)] = -point.dim() * M::log(-M::expm1(k * log_x));

  std::vector<Real> log_z(size);
  std::vector<Real> terms(size);
  log_z[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    Real shift = log_b[1] + log_z[static_cast<std::size_t>(n - 1)];
    for (int k = 1; k <= n; ++k) {
      const Real t = log_b[static_cast<std::size_t>(k)] + log_z[static_cast<std::size_t>(n - k)];
      terms[static_cast<std::size_t>(k)] = t;
      if (t > shift) shift = t;
    }
    Accumulator<Real> acc;
    for (int k = 1; k <= n; ++k) acc.add(M::exp(terms[static_cast<std::size_t>(k)] - shift));
    log_z[static_cast<std::size_t>(n)] = shift + M::log(acc.value()) - M::log(Real(n));
  }
  return log_z;
}

template <class Real>
Real log_z_inf_impl(const OscillatorPoint& point, double tol, long term_limit) {
  using M = Ops<Real>;
  const Real log_x = M::log(Real(point.x()));
  Accumulator<Real> acc;
  Real prev = 0;
  for (long k = 1; k <= term_limit; ++k) {
    const Real weight = point.dim() == 2 ? Real(k) : Real(1);
    const Real term = -weight * M::log1p(-M::exp(Real(k) * log_x));
    acc.add(term);
    if (term == 0) return acc.value();
    if (k > 1) {
      const Real ratio = term / prev;
      if (ratio < 1) {
        const Real tail = term * ratio / (1 - ratio);
        if (tail < Real(tol) * acc.value()) return acc.value();
      }
    }
    prev = term;
  }
  throw ConvergenceError("log_z_inf: tail above tolerance after " + std::to_string(term_limit) +
                         " terms (x = " + std::to_string(point.x()) + ")");
}

}  // namespace

OscillatorPoint::OscillatorPoint(double x, int dim) : x_(x), dim_(dim) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("OscillatorPoint: x must satisfy 0 < x < 1, got " + std::to_string(x));
  if (dim != 1 && dim != 2) throw DomainError("OscillatorPoint: dimension must be 1 or 2, got " + std::to_string(dim));
}

double OscillatorPoint::beta() const { return -std::log(x_); }

double b_k(const OscillatorPoint& point, int k) {
  if (k < 0) throw DomainError("b_k: k must be nonnegative");
  if (k == 0) return 0.0;
  return std::pow(one_minus_pow(std::log(point.x()), k), -point.dim());
}

ZSequence zn_recurrence(const OscillatorPoint& point, int n_max) {
  check_count(n_max, 1, "zn_recurrence");
  std::vector<double> b(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) b[static_cast<std::size_t>(k)] = b_k(point, k);

  ZSequence seq{point, std::vector<double>(static_cast<std::size_t>(n_max) + 1)};
  auto& z = seq.values;
  z[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    Accumulator<double> acc;
    for (int k = 1; k <= n; ++k) acc.add(b[static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(n - k)]);
    const double v = acc.value() / n;
    if (!std::isfinite(v)) {
      throw OverflowError("zn_recurrence: Z_N left the double range at N = " + std::to_string(n), n);
    }
    // Z_N >= Z_{N-1} holds exactly; drop sub-ulp wobble once Z_N saturates.
    z[static_cast<std::size_t>(n)] = std::max(v, z[static_cast<std::size_t>(n - 1)]);
  }
  return seq;
}

std::vector<double> zn_log_recurrence(const OscillatorPoint& point, int n_max) {
  check_count(n_max, 1, "zn_log_recurrence");
  return log_recurrence<double>(point, n_max);
}

double zn_1d_closed(const OscillatorPoint& point, int n) {
  if (point.dim() != 1) throw DomainError("zn_1d_closed: closed form exists only for D = 1");
  check_count(n, 0, "zn_1d_closed");
  const double log_x = std::log(point.x());
  double z = 1.0;
  for (int k = 1; k <= n; ++k) z /= one_minus_pow(log_x, k);
  return z;
}

double log_z_inf(const OscillatorPoint& point, double tol, long term_limit) {
  if (!(tol > 0.0)) throw DomainError("log_z_inf: tol must be positive");
  return log_z_inf_impl<double>(point, tol, term_limit);
}

std::vector<double> log_y_sequence(const OscillatorPoint& point, int n_max, double tol) {
  check_count(n_max, 1, "y_n_numeric");
  if (!(tol > 0.0)) throw DomainError("y_n_numeric: tol must be positive");
  // ln y_N is a small difference of two O(1) logs; quad precision keeps it
  // accurate well below the double rounding of either operand.
  const std::vector<Quad> log_zn = log_recurrence<Quad>(point, n_max);
  const Quad log_zinf = log_z_inf_impl<Quad>(point, tol, kZInfTermLimit);
  std::vector<double> out(log_zn.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(std::min(log_zn[i] - log_zinf, Quad(0)));
  return out;
}

double log_y_n_numeric(const OscillatorPoint& point, int n, double tol) { return log_y_sequence(point, n, tol).back(); }

double y_n_numeric(const OscillatorPoint& point, int n, double tol) {
  return std::exp(log_y_n_numeric(point, n, tol));
}

double y1d_closed(double x, int n, Y1dFlavor flavor) {
  switch (flavor) {
    case Y1dFlavor::kLeading:
      return 1.0 - std::pow(x, n + 1);
    case Y1dFlavor::kExponentialSmallX:
      return std::exp(-std::pow(x, n + 1));
    case Y1dFlavor::kExponentialNear1:
      return std::exp(-std::pow(x, n) / (1.0 - x));
  }
  return 0.0;
}

double y2d_closed(double x, int n, Y2dFlavor flavor) {
  switch (flavor) {
    case Y2dFlavor::kFull:
      return (n + 1) * std::pow(x, n + 2) - (n + 2) * std::pow(x, n + 1) + 1.0;
    case Y2dFlavor::kLeading:
      return 1.0 - n * std::pow(x, n);
  }
  return 0.0;
}

}  // namespace planepart
