#pragma once

// Real and complex extension of the parametrization: n is replaced by n^s and
// (x, t, m) become real or complex, giving
//
//   k / n^s = 1/x_s + 1/y_s + 1/z_s,   y_s, z_s = t_s (k x_s - n^s) -/+ m_s,
//
// with m_s^2 = t_s^2 (k x_s - n^s)^2 - 2 n^s x_s t_s.

#include <cstdint>
#include <utility>
#include <variant>

#include "unitfrac/analytic.hpp"

namespace unitfrac {

/// x_s = alpha n^s with the double-root t_s; requires k alpha > 1.
struct ProportionalDoubleRoot {
  double alpha = 0.5;
  friend bool operator==(const ProportionalDoubleRoot&, const ProportionalDoubleRoot&) = default;
};

/// x_s = x0 with the double-root t_s. For real s it needs n^s < k x0.
struct FixedXDoubleRoot {
  double x0 = 1.0;
  friend bool operator==(const FixedXDoubleRoot&, const FixedXDoubleRoot&) = default;
};

/// Fixed x, t > 0; m_s is the principal square root of F(n^s).
struct GeneralXT {
  double x = 1.0;
  double t = 1.0;
  friend bool operator==(const GeneralXT&, const GeneralXT&) = default;
};

using Scheme = std::variant<ProportionalDoubleRoot, FixedXDoubleRoot, GeneralXT>;

/// ProportionalDoubleRoot with alpha = 2/k: x_s = 2n^s/k, t_s = 4/k,
/// y_s = z_s = 4n^s/k. Valid for every n and s at once.
Scheme default_scheme(std::int64_t k);

struct ParamTriple {
  Complex x_s;
  Complex t_s;
  Complex m_s;
  Complex y_s;
  Complex z_s;
  Complex u;  // n^s
};

struct SumReport {
  std::int64_t k = 0;
  Complex s;
  std::int64_t N = 0;
  Complex partial;
  Complex tail_estimate;
  Complex reference;  // k zeta(s)
  double abs_error = 0.0;
};

/// n^s = exp(s log n) for n >= 1.
Complex power_of(std::int64_t n, Complex s);

/// Triple for explicit x, t and u = n^s. m_s is the principal root of F; a
/// value of F below its own rounding floor is taken as an exact double root.
/// `phase` is |Im(s) log n|, used to size that floor.
ParamTriple general_triple(std::int64_t k, Complex u, Complex x, Complex t,
                           double phase = 0.0);

/// Throws DomainError(SchemeDomainViolation) when the scheme is invalid at (n, s).
ParamTriple params_for(const Scheme& scheme, std::int64_t k, std::int64_t n,
                       Complex s);

/// |1/x_s + (1/y_s + 1/z_s) - k/u| for a triple; symmetric in y_s and z_s.
/// Throws DegenerateRoot when |y_s| or |z_s| underflows.
double triple_residual(std::int64_t k, const ParamTriple& p);

/// triple_residual of params_for(scheme, k, n, s).
double termwise_residual(const Scheme& scheme, std::int64_t k, std::int64_t n,
                         Complex s);

/// Partial sum over n <= N with the Euler-Maclaurin tail
/// k (N^{1-s}/(s-1) - N^{-s}/2), compared against k zeta(s).
/// Throws PoleAtOne at s = 1 and DivergentRegion for Re(s) <= 1.
SumReport gk_partial_sum(const Scheme& scheme, std::int64_t k, Complex s,
                         std::int64_t N, const PrecisionConfig& cfg = {});

/// Roots of V^2 - b V + c = 0 without cancellation in the smaller root.
std::pair<Complex, Complex> stable_quadratic_roots(Complex b, Complex c);

/// Largest componentwise gap between the roots of
/// V^2 - 2t(kx - n^s)V + 2n^s x t = 0 and {y_s, z_s} from GeneralXT(x, t).
double quadratic_roots_check(std::int64_t k, std::int64_t n, Complex s,
                             Complex x, Complex t);

}  // namespace unitfrac
