#include "planepart/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "planepart/errors.hpp"
#include "planepart/exact_enum.hpp"

namespace planepart {

namespace {

constexpr double kPi = std::numbers::pi;

double two_zeta3() { return 2.0 * Constants::zeta3; }

void check_positive(int v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

double c_value(CVariant variant) {
  return variant == CVariant::kWright ? Constants::zeta_prime_minus1 : Constants::c_pr;
}

double relative_error_percent(double estimate, const BigCount& exact) {
  const double e = exact.to_double();
  return 100.0 * std::abs(estimate - e) / e;
}

}  // namespace

double beta0_1d(double n) { return kPi / std::sqrt(6.0 * n); }

double beta0_2d(double n) { return std::cbrt(two_zeta3() / n); }

SaddleResult saddle_count(const std::function<double(double)>& log_z, double energy, Bracket bracket) {
  auto entropy = [&](double beta) { return beta * energy + log_z(beta); };
  auto slope = [&](double beta) {
    const double h = beta * 1e-5;
    return (entropy(beta + h) - entropy(beta - h)) / (2.0 * h);
  };

  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo > 0.0 && hi > lo)) throw DomainError("saddle_count: bracket must satisfy 0 < lo < hi");
  double f_lo = slope(lo);
  double f_hi = slope(hi);
  if (f_lo == 0.0) hi = lo;
  if (f_hi == 0.0) lo = hi;
  if (lo != hi && std::signbit(f_lo) == std::signbit(f_hi)) {
    throw ConvergenceError("saddle_count: S'(beta) does not change sign on [" + std::to_string(bracket.lo) + ", " +
                           std::to_string(bracket.hi) + "]");
  }

  // Secant steps guarded by the bracket; fall back to bisection when the
  // secant point leaves the inner part of the interval.
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
    double mid = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    const double width = hi - lo;
    if (!(mid > lo + 0.01 * width && mid < hi - 0.01 * width) || iter % 4 == 3) mid = 0.5 * (lo + hi);
    const double f_mid = slope(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  SaddleResult r{};
  r.beta0 = 0.5 * (lo + hi);
  r.entropy = entropy(r.beta0);
  const double h = r.beta0 * 1e-4;
  r.curvature = (entropy(r.beta0 + h) - 2.0 * r.entropy + entropy(r.beta0 - h)) / (h * h);
  if (!(r.curvature > 0.0)) {
    throw ConvergenceError("saddle_count: non-convex entropy at beta0 = " + std::to_string(r.beta0));
  }
  r.gamma = std::exp(r.entropy) / std::sqrt(2.0 * kPi * r.curvature);
  return r;
}

double erdos_lehner_factor(int n, int max_parts) {
  check_positive(n, "n");
  check_positive(max_parts, "max_parts");
  const double scale = std::sqrt(6.0 * n) / kPi;
  return std::exp(-scale * std::exp(-max_parts / scale));
}

double p1d_restricted_estimate(int n, int max_parts) {
  return p1d(n).to_double() * erdos_lehner_factor(n, max_parts);
}

double p2d_unrestricted_estimate(int n, CVariant variant) {
  check_positive(n, "n");
  const double a = two_zeta3();
  const double nn = n;
  return std::pow(a, 7.0 / 36.0) / std::sqrt(6.0 * kPi) * std::pow(nn, -25.0 / 36.0) *
         std::exp(1.5 * std::cbrt(a) * std::pow(nn, 2.0 / 3.0) + c_value(variant));
}

double plane_restriction_factor(int n, int max_parts) {
  check_positive(n, "n");
  check_positive(max_parts, "max_parts");
  const double a = two_zeta3();
  const double big_n = max_parts;
  return std::exp(-(big_n * std::cbrt(static_cast<double>(n)) / std::cbrt(a)) * std::exp(-big_n * beta0_2d(n)));
}

bool in_validity_window(int n, int max_parts) {
  const double lower = std::cbrt(static_cast<double>(n) / two_zeta3());
  return max_parts >= lower && max_parts < n;
}

double p2d_restricted_estimate(int n, int max_parts, EstimateBase base) {
  check_positive(n, "n");
  double unrestricted = 0.0;
  switch (base) {
    case EstimateBase::kExact:
      unrestricted = p2d(n).to_double();
      break;
    case EstimateBase::kWright:
      unrestricted = p2d_unrestricted_estimate(n, CVariant::kWright);
      break;
    case EstimateBase::kPr:
      unrestricted = p2d_unrestricted_estimate(n, CVariant::kPr);
      break;
  }
  return unrestricted * plane_restriction_factor(n, max_parts);
}

EstimateReport estimate_report(int n, int max_parts, const GeneratorLimits& limits) {
  EstimateReport row{};
  row.n = n;
  row.max_parts = max_parts;
  row.p2d_exact = p2d(n);
  row.calc1 = p2d_restricted_estimate(n, max_parts, EstimateBase::kExact);
  row.calc2 = p2d_restricted_estimate(n, max_parts, EstimateBase::kWright);
  row.calc3 = p2d_restricted_estimate(n, max_parts, EstimateBase::kPr);
  row.in_window = in_validity_window(n, max_parts);

  const RestrictionSpec spec{n, max_parts};
  if (spec.saturates() || n <= limits.max_n) {
    row.exact_restricted = p2d_atmost(spec, limits);
    row.rel_err1 = relative_error_percent(row.calc1, *row.exact_restricted);
    row.rel_err2 = relative_error_percent(row.calc2, *row.exact_restricted);
    row.rel_err3 = relative_error_percent(row.calc3, *row.exact_restricted);
  }
  return row;
}

std::vector<EstimateReport> table1_report(const GeneratorLimits& limits) {
  std::vector<EstimateReport> rows;
  for (const auto& [n, big_n] : {std::pair{10, 9}, {15, 14}, {20, 19}, {20, 18}}) {
    rows.push_back(estimate_report(n, big_n, limits));
  }
  return rows;
}

long long round_count(double value) { return std::llround(value); }

double round_percent(double value) { return std::round(value * 10.0) / 10.0; }

}  // namespace planepart
