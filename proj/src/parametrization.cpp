#include "unitfrac/parametrization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kahan.hpp"
#include "unitfrac/errors.hpp"

namespace unitfrac {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kDegenerate = 1e-300;

[[noreturn]] void violation(const std::string& what) {
  throw DomainError(ErrorKind::SchemeDomainViolation, what);
}

double gap(Complex a, Complex b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

struct SchemeEvaluator {
  std::int64_t k;
  std::int64_t n;
  Complex s;
  Complex u;

  ParamTriple operator()(const ProportionalDoubleRoot& p) const {
    const double lead = static_cast<double>(k) * p.alpha - 1.0;
    if (!(lead > 0.0)) violation("ProportionalDoubleRoot needs k * alpha > 1");
    const Complex y = 2.0 * p.alpha * u / lead;
    return {p.alpha * u, 2.0 * p.alpha / (lead * lead), Complex{}, y, y, u};
  }

  ParamTriple operator()(const FixedXDoubleRoot& p) const {
    if (!(p.x0 > 0.0)) violation("FixedXDoubleRoot needs x0 > 0");
    const Complex centre = static_cast<double>(k) * p.x0 - u;
    if (std::abs(centre) < kDegenerate * std::max(1.0, std::abs(u)))
      violation("FixedXDoubleRoot needs n^s != k * x0");
    if (s.imag() == 0.0 && !(u.real() < static_cast<double>(k) * p.x0))
      violation("FixedXDoubleRoot needs n^s < k * x0 for real s (n = " +
                std::to_string(n) + ")");
    const Complex y = 2.0 * u * p.x0 / centre;
    return {p.x0, y / centre, Complex{}, y, y, u};
  }

  ParamTriple operator()(const GeneralXT& p) const {
    if (!(p.x > 0.0 && p.t > 0.0)) violation("GeneralXT needs x > 0 and t > 0");
    return general_triple(k, u, p.x, p.t,
                          std::abs(s.imag() * std::log(static_cast<double>(n))));
  }
};

}  // namespace

Scheme default_scheme(std::int64_t k) {
  return ProportionalDoubleRoot{2.0 / static_cast<double>(k)};
}

Complex power_of(std::int64_t n, Complex s) {
  const auto base = static_cast<double>(n);
  // Real exponents go through pow so integer powers stay exact.
  if (s.imag() == 0.0) return std::pow(base, s.real());
  return std::polar(std::pow(base, s.real()), s.imag() * std::log(base));
}

ParamTriple general_triple(std::int64_t k, Complex u, Complex x, Complex t,
                           double phase) {
  const Complex centre = t * (static_cast<double>(k) * x - u);
  const Complex square = centre * centre;
  const Complex cross = 2.0 * u * x * t;
  const Complex f = square - cross;
  // Rounding floor of f: the two products plus the error carried in by u.
  const Complex slope = -2.0 * t * centre - 2.0 * x * t;
  const double floor = 8.0 * kEps *
                       (std::abs(square) + std::abs(cross) +
                        std::abs(slope) * std::abs(u) * (1.0 + phase));
  const Complex m = std::abs(f) <= floor ? Complex{} : std::sqrt(f);
  // The root that cancels is recovered from y z = 2 n^s x t instead.
  Complex y = centre - m;
  Complex z = centre + m;
  if (m == Complex{})
    ;  // double root: y = z = centre
  else if (std::abs(y) < std::abs(z))
    y = cross / z;
  else if (y != Complex{})
    z = cross / y;
  return {x, t, m, y, z, u};
}

ParamTriple params_for(const Scheme& scheme, std::int64_t k, std::int64_t n,
                       Complex s) {
  if (k < 2) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 2");
  if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "n must be >= 1");
  return std::visit(SchemeEvaluator{k, n, s, power_of(n, s)}, scheme);
}

double triple_residual(std::int64_t k, const ParamTriple& p) {
  if (std::abs(p.y_s) < kDegenerate || std::abs(p.z_s) < kDegenerate)
    throw DomainError(ErrorKind::DegenerateRoot, "|y_s| or |z_s| below 1e-300");
  return std::abs(1.0 / p.x_s + (1.0 / p.y_s + 1.0 / p.z_s) -
                  static_cast<double>(k) / p.u);
}

double termwise_residual(const Scheme& scheme, std::int64_t k, std::int64_t n,
                         Complex s) {
  return triple_residual(k, params_for(scheme, k, n, s));
}

SumReport gk_partial_sum(const Scheme& scheme, std::int64_t k, Complex s,
                         std::int64_t N, const PrecisionConfig& cfg) {
  if (std::abs(s - 1.0) < kPoleRadius)
    throw DomainError(ErrorKind::PoleAtOne, "G_k(s) has a simple pole at s = 1",
                      static_cast<double>(k));
  if (!(s.real() > 1.0))
    throw DomainError(ErrorKind::DivergentRegion, "the series needs Re(s) > 1");
  if (N < 1) throw DomainError(ErrorKind::InvalidArgument, "N must be >= 1");

  detail::ComplexKahan sum;
  for (std::int64_t n = 1; n <= N; ++n) {
    const ParamTriple p = params_for(scheme, k, n, s);
    sum.add(1.0 / p.x_s);
    sum.add(1.0 / p.y_s);
    sum.add(1.0 / p.z_s);
  }

  SumReport report;
  report.k = k;
  report.s = s;
  report.N = N;
  report.partial = sum.value();
  const Complex n_pow = power_of(N, -s);
  report.tail_estimate = static_cast<double>(k) *
                         (n_pow * static_cast<double>(N) / (s - 1.0) - 0.5 * n_pow);
  report.reference = gk_continued(k, s, cfg);
  report.abs_error = std::abs(report.partial + report.tail_estimate - report.reference);
  return report;
}

std::pair<Complex, Complex> stable_quadratic_roots(Complex b, Complex c) {
  const Complex root = std::sqrt(b * b - 4.0 * c);
  // Pick the sign that adds |b| and |root| rather than cancelling them.
  const double align = (std::conj(b) * root).real();
  const Complex q = 0.5 * (align >= 0.0 ? b + root : b - root);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q, c / q};
}

double quadratic_roots_check(std::int64_t k, std::int64_t n, Complex s,
                             Complex x, Complex t) {
  if (t == Complex{}) throw DomainError(ErrorKind::InvalidArgument, "t must be non-zero");
  const Complex u = power_of(n, s);
  const ParamTriple p =
      general_triple(k, u, x, t, std::abs(s.imag() * std::log(static_cast<double>(n))));
  const auto [r1, r2] =
      stable_quadratic_roots(2.0 * t * (static_cast<double>(k) * x - u), 2.0 * u * x * t);
  const double direct = std::max(gap(r1, p.y_s), gap(r2, p.z_s));
  const double swapped = std::max(gap(r1, p.z_s), gap(r2, p.y_s));
  return std::min(direct, swapped);
}

}  // namespace unitfrac
