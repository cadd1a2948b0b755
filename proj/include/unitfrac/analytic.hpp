#pragma once

// Complex special functions in binary64: the Riemann zeta function with its
// analytic continuation, the Gamma function, the completed form of G_k and
// the functional-equation checks built on them.

#include <complex>
#include <cstdint>

namespace unitfrac {

using Complex = std::complex<double>;

/// Points closer than this to a pole are treated as the pole.
inline constexpr double kPoleRadius = 1e-12;

struct PrecisionConfig {
  int em_terms = 64;      // direct-sum cutoff N of the Euler-Maclaurin formula
  int em_bernoulli = 14;  // Bernoulli corrections B_2 .. B_{2 em_bernoulli}
  double tol = 1e-12;

  bool valid() const noexcept {
    return em_terms >= 10 && em_bernoulli >= 2 && em_bernoulli <= 30 && tol > 0;
  }
  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;
};

/// B_{2j} for j = 1..30 as a double rounded from the exact rational.
double bernoulli_even(int j);

/// Riemann zeta. Euler-Maclaurin summation for Re(s) >= 0, the reflection
/// formula below that. Throws DomainError(PoleAtOne) near s = 1.
Complex zeta(Complex s, const PrecisionConfig& cfg = {});

/// Gamma via the g = 607/128 Lanczos approximation, reflected for Re(s) < 1/2.
/// Throws DomainError(PoleAtNonPositiveInteger).
Complex gamma(Complex s);

/// log Gamma, continuous in s on Re(s) > 0 (the imaginary part is not reduced
/// to the principal branch).
Complex log_gamma(Complex s);

/// Riemann-Siegel theta: Im log Gamma(1/4 + i t/2) - (t/2) log(pi).
double riemann_siegel_theta(double t);

/// Z(t) = exp(i theta(t)) G_k(1/2 + i t), real up to rounding.
double rotated_gk(std::int64_t k, double t, const PrecisionConfig& cfg = {});

/// G_k(s) = k zeta(s). At s = 1 throws PoleAtOne carrying residue k.
Complex gk_continued(std::int64_t k, Complex s, const PrecisionConfig& cfg = {});

/// |pi^{-s/2} Gamma(s/2) G_k(s) - k pi^{-(1-s)/2} Gamma((1-s)/2) zeta(1-s)|,
/// both sides evaluated independently. A side whose Gamma pole is cancelled
/// by a trivial zero (s = -2, -4, ... on the left, s = 3, 5, ... on the
/// right) is evaluated as its limit. Throws PoleEncountered at s = 0 and
/// s = 1, naming the offending factor.
double functional_eq_residual(std::int64_t k, Complex s,
                              const PrecisionConfig& cfg = {});

/// |G_k(s) - k 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)|. Secondary
/// check; rejects s where Gamma(1-s) or zeta(1-s) has a pole.
double functional_eq_residual_asymmetric(std::int64_t k, Complex s,
                                         const PrecisionConfig& cfg = {});

/// eps * G_k(1 + eps), which tends to the residue k. Requires 0 < eps <= 1e-2.
double residue_probe(std::int64_t k, double eps, const PrecisionConfig& cfg = {});

}  // namespace unitfrac
