#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "planepart/big_count.hpp"
#include "planepart/plane_generator.hpp"

namespace planepart {

struct Constants {
  static constexpr double zeta3 = 1.2020569031595942854;
  static constexpr double zeta_prime_minus1 = -0.16542114370045092921;
  static constexpr double c_pr = -1.0 / 6.0;
};

/// Stationary point of S(beta) = beta E + ln Z(beta) and the steepest-descent
/// count Gamma = exp(S) / sqrt(2 pi S'').
struct SaddleResult {
  double beta0;
  double entropy;
  double curvature;
  double gamma;
};

struct Bracket {
  double lo;
  double hi;
};

// pi / sqrt(6 n)
double beta0_1d(double n);
// (2 zeta(3) / n)^(1/3)
double beta0_2d(double n);

/// Locates S'(beta) = 0 inside `bracket` with bisection/secant steps on a
/// central-difference S' (step beta * 1e-5), then takes S'' by a central second
/// difference. Throws ConvergenceError if S' has no sign change on the bracket
/// or S'' <= 0 at the root.
SaddleResult saddle_count(const std::function<double(double)>& log_z, double energy, Bracket bracket);

/// exp{-(sqrt(6n)/pi) exp(-pi N / sqrt(6n))}
double erdos_lehner_factor(int n, int max_parts);

/// Linear partitions of n into at most N parts: exact p(n) times the
/// Erdős–Lehner factor.
double p1d_restricted_estimate(int n, int max_parts);

enum class CVariant {
  kWright,  // c = zeta'(-1)
  kPr,      // c = -1/6
};

/// Asymptotic number of plane partitions of n:
/// [2 zeta(3)]^(7/36) / sqrt(6 pi) n^(-25/36) exp{(3/2) [2 zeta(3)]^(1/3) n^(2/3) + c}.
double p2d_unrestricted_estimate(int n, CVariant variant);

/// exp{-(N n^(1/3) / [2 zeta(3)]^(1/3)) exp(-N [2 zeta(3) / n]^(1/3))}
double plane_restriction_factor(int n, int max_parts);

/// The estimate is intended for [2 zeta(3)]^(-1/3) n^(1/3) <= N < n.
bool in_validity_window(int n, int max_parts);

enum class EstimateBase {
  kExact,   // exact p2d(n)
  kWright,  // p2d_unrestricted_estimate(n, kWright)
  kPr,      // p2d_unrestricted_estimate(n, kPr)
};

/// Plane partitions of n into at most N parts: base count times
/// plane_restriction_factor. Evaluated outside the validity window too; callers
/// check in_validity_window() for the warning.
double p2d_restricted_estimate(int n, int max_parts, EstimateBase base);

/// One comparison row: exact counts against the three estimates.
///
/// calc1 uses the exact p2d(n) as base, calc2 Wright's constant c = zeta'(-1)
/// and calc3 c = -1/6. This is the column order of the reference values the
/// table is checked against. Relative errors are in percent and are present
/// only when the exact restricted count is.
struct EstimateReport {
  int n;
  int max_parts;
  std::optional<BigCount> exact_restricted;
  std::optional<BigCount> p2d_exact;
  double calc1;
  double calc2;
  double calc3;
  std::optional<double> rel_err1;
  std::optional<double> rel_err2;
  std::optional<double> rel_err3;
  bool in_window;
};

/// Builds a report row. The exact restricted count is filled in when n is
/// within the generator ceiling (or N >= n); otherwise it is left empty.
EstimateReport estimate_report(int n, int max_parts, const GeneratorLimits& limits = {});

/// Rows (10,9), (15,14), (20,19), (20,18).
std::vector<EstimateReport> table1_report(const GeneratorLimits& limits = {});

// Half-away-from-zero rounding used for every printed count.
long long round_count(double value);
// Percent value rounded to one decimal.
double round_percent(double value);

}  // namespace planepart
