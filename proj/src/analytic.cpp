#include "unitfrac/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "kahan.hpp"
#include "unitfrac/errors.hpp"

namespace unitfrac {

namespace {

using std::numbers::pi;

// B_2 .. B_60 as numerator / denominator.
constexpr std::array<std::array<double, 2>, 30> kBernoulli{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
    {-7709321041217.0, 510.0},
    {2577687858367.0, 6.0},
    {-26315271553053477373.0, 1919190.0},
    {2929993913841559.0, 6.0},
    {-261082718496449122051.0, 13530.0},
    {1520097643918070802691.0, 1806.0},
    {-27833269579301024235023.0, 690.0},
    {596451111593912163277961.0, 282.0},
    {-5609403368997817686249127547.0, 46410.0},
    {495057205241079648212477525.0, 66.0},
    {-801165718135489957347924991853.0, 1590.0},
    {29149963634884862421418123812691.0, 798.0},
    {-2479392929313226753685415739663229.0, 870.0},
    {84483613348880041862046775994036021.0, 354.0},
    {-1215233140483755572040304994079820246041491.0, 56786730.0},
}};

// B_{2j} / (2j)!, converted once.
const std::array<double, 30>& euler_maclaurin_coefficients() {
  static const std::array<double, 30> coeffs = [] {
    std::array<double, 30> out{};
    long double factorial = 1;
    for (int j = 1; j <= 30; ++j) {
      factorial *= static_cast<long double>(2 * j - 1) * (2 * j);
      out[j - 1] = static_cast<double>(
          static_cast<long double>(kBernoulli[j - 1][0]) / kBernoulli[j - 1][1] /
          factorial);
    }
    return out;
  }();
  return coeffs;
}

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos{
    0.99999999999999709182,      57.156235665862923517,
    -59.597960355475491248,      14.136097974741747174,
    -0.49191381609762019978,     .33994649984811888699e-4,
    .46523628927048575665e-4,    -.98374475304879564677e-4,
    .15808870322491248884e-3,    -.21026444172410488319e-3,
    .21743961811521264320e-3,    -.16431810653676389022e-3,
    .84418223983852743293e-4,    -.26190838401581408670e-4,
    .36899182659531622704e-5,
};

const double kLogSqrtTwoPi = 0.5 * std::log(2 * pi);

// log Gamma(z) for Re(z) >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    series += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

bool near_non_positive_integer(Complex s) {
  if (s.real() > 0.5) return false;
  const double nearest = std::round(s.real());
  return std::abs(s - Complex{nearest, 0.0}) < kPoleRadius;
}

void require_config(const PrecisionConfig& cfg) {
  if (!cfg.valid())
    throw DomainError(ErrorKind::InvalidArgument,
                      "PrecisionConfig needs em_terms >= 10, em_bernoulli in "
                      "[2, 30] and tol > 0");
}

Complex sin_pi(Complex s) { return std::sin(pi * s); }

// n^{-s}; the real-axis branch keeps integer powers exact.
Complex inverse_power(double n, Complex s) {
  if (s.imag() == 0.0) return std::pow(n, -s.real());
  return std::polar(std::pow(n, -s.real()), -s.imag() * std::log(n));
}

// Below this real part the direct sum cancels catastrophically in binary64
// (terms grow like N^{-Re s}), so zeta is reflected instead.
constexpr double kReflectBelow = 0.0;

Complex zeta_euler_maclaurin(Complex s, const PrecisionConfig& cfg) {
  const int N = cfg.em_terms;
  detail::ComplexKahan sum;
  for (int n = 1; n < N; ++n) sum.add(inverse_power(n, s));

  const Complex n_pow = inverse_power(N, s);
  sum.add(n_pow * static_cast<double>(N) / (s - 1.0));
  sum.add(0.5 * n_pow);

  // sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  const auto& coeffs = euler_maclaurin_coefficients();
  const double inv_n2 = 1.0 / (static_cast<double>(N) * N);
  Complex rising = s;
  Complex power = n_pow / static_cast<double>(N);
  for (int j = 1; j <= cfg.em_bernoulli; ++j) {
    sum.add(coeffs[j - 1] * rising * power);
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power *= inv_n2;
  }
  return sum.value();
}

}  // namespace

double bernoulli_even(int j) {
  if (j < 1 || j > 30)
    throw DomainError(ErrorKind::InvalidArgument, "Bernoulli index must be in [1, 30]");
  return kBernoulli[j - 1][0] / kBernoulli[j - 1][1];
}

Complex zeta(Complex s, const PrecisionConfig& cfg) {
  require_config(cfg);
  if (std::abs(s - 1.0) < kPoleRadius)
    throw DomainError(ErrorKind::PoleAtOne, "zeta(s) has a simple pole at s = 1", 1.0);
  if (s.real() >= kReflectBelow)
    return zeta_euler_maclaurin(s, cfg);
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  const Complex r = 1.0 - s;
  return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(0.5 * pi * s) *
         std::exp(lanczos_log_gamma(r)) * zeta_euler_maclaurin(r, cfg);
}

Complex log_gamma(Complex s) {
  if (near_non_positive_integer(s))
    throw DomainError(ErrorKind::PoleAtNonPositiveInteger,
                      "Gamma has a pole at s = " + std::to_string(std::round(s.real())));
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  if (s.real() > 0.0) return lanczos_log_gamma(s + 1.0) - std::log(s);
  // Reflection; the branch is principal here.
  return std::log(pi / sin_pi(s)) - lanczos_log_gamma(1.0 - s);
}

Complex gamma(Complex s) {
  if (near_non_positive_integer(s))
    throw DomainError(ErrorKind::PoleAtNonPositiveInteger,
                      "Gamma has a pole at s = " + std::to_string(std::round(s.real())));
  if (s.real() >= 0.5) return std::exp(lanczos_log_gamma(s));
  return pi / (sin_pi(s) * std::exp(lanczos_log_gamma(1.0 - s)));
}

double riemann_siegel_theta(double t) {
  return log_gamma(Complex{0.25, 0.5 * t}).imag() - 0.5 * t * std::log(pi);
}

double rotated_gk(std::int64_t k, double t, const PrecisionConfig& cfg) {
  const Complex rotation = std::polar(1.0, riemann_siegel_theta(t));
  return (rotation * gk_continued(k, Complex{0.5, t}, cfg)).real();
}

Complex gk_continued(std::int64_t k, Complex s, const PrecisionConfig& cfg) {
  if (std::abs(s - 1.0) < kPoleRadius)
    throw DomainError(ErrorKind::PoleAtOne,
                      "G_k(s) has a simple pole at s = 1 with residue " +
                          std::to_string(k),
                      static_cast<double>(k));
  return static_cast<double>(k) * zeta(s, cfg);
}

namespace {

// Mean of f over a circle of radius 1/4 about s. Exact for analytic f up to
// (r / R)^32, where R is the distance to the nearest true pole (>= 2 here).
template <class Fn>
Complex circle_mean(Complex s, Fn&& f) {
  constexpr int kPoints = 32;
  detail::ComplexKahan acc;
  for (int j = 0; j < kPoints; ++j)
    acc.add(f(s + std::polar(0.25, 2.0 * pi * (j + 0.5) / kPoints)));
  return acc.value() / static_cast<double>(kPoints);
}

}  // namespace

double functional_eq_residual(std::int64_t k, Complex s, const PrecisionConfig& cfg) {
  if (std::abs(s) < kPoleRadius)
    throw DomainError(ErrorKind::PoleEncountered, "Gamma(s/2) at s = 0");
  if (std::abs(s - 1.0) < kPoleRadius)
    throw DomainError(ErrorKind::PoleEncountered,
                      "G_k(s) and Gamma((1-s)/2) at s = 1", static_cast<double>(k));
  auto lhs_at = [&](Complex v) {
    return std::pow(pi, -0.5 * v) * gamma(0.5 * v) * gk_continued(k, v, cfg);
  };
  auto rhs_at = [&](Complex v) {
    return static_cast<double>(k) * std::pow(pi, -0.5 * (1.0 - v)) *
           gamma(0.5 * (1.0 - v)) * zeta(1.0 - v, cfg);
  };
  // At s = -2, -4, ... the Gamma pole on the left meets a trivial zero of
  // zeta; at s = 3, 5, ... the same happens on the right. Those points are
  // removable and the side is evaluated as its limit.
  const Complex lhs = near_non_positive_integer(0.5 * s) ? circle_mean(s, lhs_at) : lhs_at(s);
  const Complex rhs =
      near_non_positive_integer(0.5 * (1.0 - s)) ? circle_mean(s, rhs_at) : rhs_at(s);
  return std::abs(lhs - rhs);
}

double functional_eq_residual_asymmetric(std::int64_t k, Complex s,
                                         const PrecisionConfig& cfg) {
  if (near_non_positive_integer(1.0 - s))
    throw DomainError(ErrorKind::PoleEncountered, "Gamma(1-s) at s = " +
                                                      std::to_string(s.real()));
  if (std::abs(s) < kPoleRadius)
    throw DomainError(ErrorKind::PoleEncountered, "zeta(1-s) at s = 0");
  const Complex lhs = gk_continued(k, s, cfg);
  const Complex rhs = static_cast<double>(k) * std::pow(2.0, s) * std::pow(pi, s - 1.0) *
                      std::sin(0.5 * pi * s) * gamma(1.0 - s) * zeta(1.0 - s, cfg);
  return std::abs(lhs - rhs);
}

double residue_probe(std::int64_t k, double eps, const PrecisionConfig& cfg) {
  if (!(eps > 0.0 && eps <= 1e-2))
    throw DomainError(ErrorKind::InvalidArgument, "eps must lie in (0, 1e-2]");
  return (eps * gk_continued(k, Complex{1.0 + eps, 0.0}, cfg)).real();
}

}  // namespace unitfrac
