#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "unitfrac/analytic.hpp"

namespace unitfrac {

/// A sign change of Z(t) = exp(i theta(t)) G_k(1/2 + i t), refined by bisection.
struct ZeroBracket {
  std::int64_t k = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double refined_t = 0.0;
  double min_abs = 0.0;  // |G_k(1/2 + i refined_t)|

  friend bool operator==(const ZeroBracket&, const ZeroBracket&) = default;
};

struct ScanOptions {
  double bisection_width = 1e-9;
  unsigned threads = 1;
};

struct ScanResult {
  std::vector<ZeroBracket> zeros;
  /// Set when the step is at least half the mean zero spacing near t_max, or
  /// when a sample interval shows a dip in |Z| without a sign change.
  bool step_too_coarse = false;
  /// Left ends of sample intervals with a sign-free dip in |Z|.
  std::vector<double> suspect_intervals;
};

/// Brackets and refines the critical-line zeros of G_k in [t_min, t_max].
/// Requires 0 < t_min < t_max and step > 0.
ScanResult scan_critical_line(std::int64_t k, double t_min, double t_max,
                              double step, const PrecisionConfig& cfg = {},
                              const ScanOptions& options = {});

/// Values of s with F(n^s) = 0 for fixed (k, x, t, n). With u = n^s they solve
///   t u^2 - 2x(tk + 1) u + t k^2 x^2 = 0,
/// and each root u gives the lattice s = log(u)/log(n) + i j 2 pi / log(n).
struct FZeroFamily {
  std::int64_t k = 0;
  double x = 0.0;
  double t = 0.0;
  std::int64_t n = 0;
  std::array<Complex, 2> u_roots;
  std::array<Complex, 2> principal_s;
  double branch_period = 0.0;  // 2 pi / log(n)

  /// principal_s[root] + i j branch_period.
  Complex branch(std::size_t root, std::int64_t j) const;
};

/// Requires x, t > 0 and n >= 2; t == 0 throws DegenerateQuadratic.
FZeroFamily f_zero_locus(std::int64_t k, double x, double t, std::int64_t n);

/// Max over both roots and branches j = 0, 1, -1, 2, ... (samples of them) of
/// |t^2 (kx - n^s)^2 - 2 n^s x t| / (t^2 |kx - n^s|^2 + 2 |n^s| x t).
double verify_f_zero(const FZeroFamily& family, int samples);

/// Branch offsets used by verify_f_zero: 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> branch_offsets(int samples);

}  // namespace unitfrac
