#pragma once

#include <vector>

namespace planepart {

/// Boltzmann factor x = exp(-beta) (hbar omega = 1) of a D-dimensional
/// isotropic oscillator, D in {1, 2}.
class OscillatorPoint {
 public:
  // Throws DomainError unless 0 < x < 1 and dim is 1 or 2.
  OscillatorPoint(double x, int dim);

  double x() const { return x_; }
  int dim() const { return dim_; }
  double beta() const;

 private:
  double x_;
  int dim_;
};

/// Z_N(x) for N = 0..n_max.
struct ZSequence {
  OscillatorPoint point;
  std::vector<double> values;  // values[0] == 1
};

/// One-particle sum B_k = (1 - x^k)^(-D), with B_0 = 0.
double b_k(const OscillatorPoint& point, int k);

/// Z_N = (1/N) sum_{k=1..N} B_k Z_{N-k}, Z_0 = 1, in double precision with
/// compensated sums. Throws OverflowError naming the first N that leaves the
/// double range.
ZSequence zn_recurrence(const OscillatorPoint& point, int n_max);

/// The same recurrence carried in log space; entry N is ln Z_N. Never
/// overflows for the sizes this library is used at.
std::vector<double> zn_log_recurrence(const OscillatorPoint& point, int n_max);

/// prod_{k=1..n} 1/(1 - x^k). Throws DomainError when point.dim() != 1.
double zn_1d_closed(const OscillatorPoint& point, int n);

inline constexpr long kZInfTermLimit = 1'000'000;

/// ln Z_inf = -sum_{k>=1} w_k ln(1 - x^k) with w_k = 1 (D = 1) or k (D = 2).
/// Terms are added until the geometric tail estimate drops below
/// tol * partial sum; ConvergenceError if that needs more than term_limit terms.
double log_z_inf(const OscillatorPoint& point, double tol, long term_limit = kZInfTermLimit);

/// ln y_N = ln Z_N - ln Z_inf, both sides evaluated in quad precision so the
/// difference stays accurate when y_N is within 1e-11 of 1.
double log_y_n_numeric(const OscillatorPoint& point, int n, double tol);

/// ln y_N for N = 1..n_max (entry 0 is ln y_0 = -ln Z_inf), one recurrence pass.
std::vector<double> log_y_sequence(const OscillatorPoint& point, int n_max, double tol);

/// y_N = Z_N / Z_inf in (0, 1]; tends to 1 as N grows.
double y_n_numeric(const OscillatorPoint& point, int n, double tol);

enum class Y1dFlavor {
  kLeading,           // 1 - x^(N+1)
  kExponentialSmallX, // exp(-x^(N+1))
  kExponentialNear1,  // exp(-x^N / (1 - x))
};

enum class Y2dFlavor {
  kFull,     // (N+1) x^(N+2) - (N+2) x^(N+1) + 1
  kLeading,  // 1 - N x^N
};

// Closed-form approximations of y_N; x may be anywhere in [0, 1].
double y1d_closed(double x, int n, Y1dFlavor flavor);
double y2d_closed(double x, int n, Y2dFlavor flavor);

}  // namespace planepart
