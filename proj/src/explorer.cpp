#include "unitfrac/explorer.hpp"

#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "unitfrac/errors.hpp"
#include "unitfrac/parametrization.hpp"

namespace unitfrac {

namespace {

// Average gap between consecutive zeros near height t.
double mean_zero_gap(double t) {
  const double density = std::log(t / (2 * std::numbers::pi)) / (2 * std::numbers::pi);
  return density > 0 ? 1.0 / density : INFINITY;
}

ZeroBracket refine(std::int64_t k, double lo, double hi, double z_lo,
                   const PrecisionConfig& cfg, double width) {
  while (hi - lo >= width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double z_mid = rotated_gk(k, mid, cfg);
    if ((z_mid < 0) == (z_lo < 0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  ZeroBracket out;
  out.k = k;
  out.t_lo = lo;
  out.t_hi = hi;
  out.refined_t = 0.5 * (lo + hi);
  out.min_abs = std::abs(gk_continued(k, Complex{0.5, out.refined_t}, cfg));
  return out;
}

}  // namespace

ScanResult scan_critical_line(std::int64_t k, double t_min, double t_max,
                              double step, const PrecisionConfig& cfg,
                              const ScanOptions& options) {
  if (!(t_min > 0.0 && t_min < t_max))
    throw DomainError(ErrorKind::InvalidArgument, "need 0 < t_min < t_max");
  if (!(step > 0.0)) throw DomainError(ErrorKind::InvalidArgument, "step must be > 0");
  if (k < 1) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 1");

  // Grid points are t_min + i * step, closed by t_max itself.
  const auto intervals = static_cast<std::int64_t>(std::ceil((t_max - t_min) / step));
  auto grid_point = [&](std::int64_t i) {
    return i >= intervals ? t_max : t_min + static_cast<double>(i) * step;
  };
  const auto samples = detail::parallel_map<double>(
      intervals + 1, options.threads,
      [&](std::int64_t i) { return rotated_gk(k, grid_point(i), cfg); });

  ScanResult result;
  result.step_too_coarse = step >= 0.5 * mean_zero_gap(t_max);

  struct Pending {
    double lo, hi, z_lo;
  };
  std::vector<Pending> pending;
  for (std::int64_t i = 0; i < intervals; ++i) {
    const double a = samples[static_cast<std::size_t>(i)];
    const double b = samples[static_cast<std::size_t>(i + 1)];
    if ((a < 0) != (b < 0)) pending.push_back({grid_point(i), grid_point(i + 1), a});
    if (i + 2 <= intervals) {
      const double c = samples[static_cast<std::size_t>(i + 2)];
      // A dip without a sign change can hide two zeros inside one step.
      if ((a < 0) == (b < 0) && (b < 0) == (c < 0) &&
          std::abs(b) < 0.1 * std::min(std::abs(a), std::abs(c))) {
        result.step_too_coarse = true;
        result.suspect_intervals.push_back(grid_point(i));
      }
    }
  }

  result.zeros = detail::parallel_map<ZeroBracket>(
      static_cast<std::int64_t>(pending.size()), options.threads,
      [&](std::int64_t i) {
        const Pending& p = pending[static_cast<std::size_t>(i)];
        return refine(k, p.lo, p.hi, p.z_lo, cfg, options.bisection_width);
      });
  return result;
}

Complex FZeroFamily::branch(std::size_t root, std::int64_t j) const {
  return principal_s.at(root) + Complex{0.0, static_cast<double>(j) * branch_period};
}

FZeroFamily f_zero_locus(std::int64_t k, double x, double t, std::int64_t n) {
  if (t == 0.0)
    throw DomainError(ErrorKind::DegenerateQuadratic, "t = 0 leaves no quadratic in u");
  if (!(x > 0.0 && t > 0.0))
    throw DomainError(ErrorKind::InvalidArgument, "need x > 0 and t > 0");
  if (n < 2) throw DomainError(ErrorKind::InvalidArgument, "n must be >= 2");
  if (k < 1) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 1");

  FZeroFamily out;
  out.k = k;
  out.x = x;
  out.t = t;
  out.n = n;
  // Roots x((tk + 1) +/- sqrt(2tk + 1)) / t; the smaller one through Viete.
  const double tk = t * static_cast<double>(k);
  const double big = x * ((tk + 1.0) + std::sqrt(2.0 * tk + 1.0)) / t;
  const double kx = static_cast<double>(k) * x;
  const double small = kx * kx / big;
  out.u_roots = {Complex{small}, Complex{big}};
  // log2 keeps exact powers of two exact.
  const double log2_n = std::log2(static_cast<double>(n));
  for (std::size_t i = 0; i < 2; ++i)
    out.principal_s[i] = std::log2(out.u_roots[i].real()) / log2_n;
  out.branch_period = 2 * std::numbers::pi / std::log(static_cast<double>(n));
  return out;
}

std::vector<std::int64_t> branch_offsets(int samples) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < samples; ++i)
    out.push_back(i % 2 == 1 ? (i + 1) / 2 : -(i / 2));
  return out;
}

double verify_f_zero(const FZeroFamily& family, int samples) {
  if (samples < 1) throw DomainError(ErrorKind::InvalidArgument, "samples must be >= 1");
  const double kx = static_cast<double>(family.k) * family.x;
  double worst = 0.0;
  for (std::size_t root = 0; root < 2; ++root) {
    for (const std::int64_t j : branch_offsets(samples)) {
      const Complex u = power_of(family.n, family.branch(root, j));
      const Complex square = family.t * family.t * (kx - u) * (kx - u);
      const Complex cross = 2.0 * u * family.x * family.t;
      const double scale = std::abs(square) + std::abs(cross);
      worst = std::max(worst, std::abs(square - cross) / scale);
    }
  }
  return worst;
}

}  // namespace unitfrac
