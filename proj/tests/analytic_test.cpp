#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "unitfrac/analytic.hpp"
#include "unitfrac/errors.hpp"

using namespace unitfrac;
using std::numbers::pi;

namespace {

// Reference values computed with 50-digit arithmetic (mpmath) and frozen.
struct Frozen {
  Complex s;
  Complex value;
};

const Frozen kZetaTable[] = {
    {{0.5, 3.0}, {0.53273667097423288, -0.078896513425833383}},
    {{-2.5, 17.0}, {10.675249255167669, 19.019523700106521}},
    {{3.7, -19.0}, {1.0589385587106627, 0.063107964944264349}},
    {{0.5, 60.0}, {0.54120083514634811, 0.22718392236826873}},
    {{-13.5, 2.0}, {-0.8386199390893836, 0.90957783319952385}},
    {{-20.5, 3.0}, {2011.7042743440201, -6579.7565382521518}},
    {{1.001, 0.0}, {1000.5772884760116, 0.0}},
};

const Frozen kGammaTable[] = {
    {{0.7, 45.0}, {6.244470306341471e-31, 8.7459527129000336e-31}},
    {{-2.3, 4.0}, {-6.4688659420970751e-5, 4.5885062205316398e-5}},
    {{9.5, -50.0}, {-1.1149283531640202e-19, -3.8337397730723567e-19}},
};

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Sum n^-s for n = 1..terms in reverse order, long double throughout.
Complex direct_sum(Complex s, long terms) {
  std::complex<long double> acc = 0;
  const std::complex<long double> sl(s.real(), s.imag());
  for (long n = terms; n >= 1; --n)
    acc += std::exp(-sl * std::log(static_cast<long double>(n)));
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("no DomainError thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("zeta classical values") {
  CHECK(std::abs(zeta(2.0) - pi * pi / 6) < 1e-12);
  CHECK(std::abs(zeta(0.0) + 0.5) < 1e-12);
  CHECK(std::abs(zeta(-1.0) + 1.0 / 12) < 1e-12);
  CHECK(std::abs(zeta(4.0) - std::pow(pi, 4) / 90) < 1e-12);
  CHECK(std::abs(zeta(3.0) - 1.2020569031595942) < 1e-12);
  CHECK(std::abs(zeta(-3.0) - 1.0 / 120) < 1e-12);
  // Trivial zeros.
  for (int m = 1; m <= 10; ++m) CHECK(std::abs(zeta(-2.0 * m)) < 1e-9);
}

TEST_CASE("zeta pole") {
  CHECK(kind_of([] { zeta(1.0); }) == ErrorKind::PoleAtOne);
  CHECK(kind_of([] { zeta(Complex(1.0, 1e-13)); }) == ErrorKind::PoleAtOne);
  try {
    zeta(1.0);
  } catch (const DomainError& e) {
    REQUIRE(e.residue().has_value());
    CHECK(*e.residue() == 1.0);
  }
}

TEST_CASE("zeta against frozen high-precision values") {
  for (const auto& f : kZetaTable) {
    INFO("s = " << f.s.real() << " + " << f.s.imag() << "i");
    CHECK(rel_err(zeta(f.s), f.value) < 1e-11);
  }
}

TEST_CASE("zeta agrees with the direct Dirichlet sum where it converges fast") {
  for (Complex s : {Complex(4.0, 0.0), Complex(5.0, 17.0), Complex(6.5, -40.0),
                    Complex(4.0, 3.0)}) {
    // Truncation error of the plain sum is below 1e5^-3 / 3.
    CHECK(std::abs(zeta(s) - direct_sum(s, 100'000)) < 1e-13);
  }
  // Large cutoff configuration against plain summation at Re(s) >= 2.
  PrecisionConfig cfg;
  cfg.em_terms = 10'000;
  for (Complex s : {Complex(2.0, 0.0), Complex(2.5, 10.0), Complex(3.0, -25.0)}) {
    const long terms = 2'000'000;
    // Add the leading integral tail so the plain sum is good to ~1e-13.
    const double N = static_cast<double>(terms);
    const Complex tail = std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s);
    CHECK(std::abs(zeta(s, cfg) - (direct_sum(s, terms) + tail)) < cfg.tol);
  }
}

TEST_CASE("zeta is stable under precision changes") {
  PrecisionConfig fine;
  fine.em_terms = 200;
  fine.em_bernoulli = 20;
  for (Complex s : {Complex(0.5, 14.134725), Complex(0.3, 40.0), Complex(2.0, 55.0),
                    Complex(-1.5, 8.0)})
    CHECK(std::abs(zeta(s) - zeta(s, fine)) < 1e-11 * std::max(1.0, std::abs(zeta(s))));
}

TEST_CASE("gamma values") {
  CHECK(std::abs(unitfrac::gamma(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(unitfrac::gamma(0.5) - std::sqrt(pi)) < 1e-12);
  CHECK(std::abs(unitfrac::gamma(5.0) - 24.0) < 1e-10);
  for (int n = 1; n <= 20; ++n)
    CHECK(rel_err(unitfrac::gamma(static_cast<double>(n)),
                  std::tgamma(static_cast<double>(n))) < 1e-13);
  CHECK(std::abs(unitfrac::gamma(-0.5) + 2 * std::sqrt(pi)) < 1e-12);
  for (const auto& f : kGammaTable) CHECK(rel_err(unitfrac::gamma(f.s), f.value) < 1e-12);
}

TEST_CASE("gamma poles") {
  for (double s : {0.0, -1.0, -2.0, -7.0})
    CHECK(kind_of([s] { unitfrac::gamma(s); }) == ErrorKind::PoleAtNonPositiveInteger);
}

TEST_CASE("gamma recurrence and log_gamma consistency") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-6.0, 8.0), im(-30.0, 30.0);
  for (int i = 0; i < 300; ++i) {
    const Complex s(re(rng), im(rng));
    if (std::abs(s - std::round(s.real())) < 1e-3) continue;
    CHECK(rel_err(unitfrac::gamma(s + 1.0), s * unitfrac::gamma(s)) < 1e-12);
    if (s.real() > 0.1) CHECK(rel_err(std::exp(log_gamma(s)), unitfrac::gamma(s)) < 1e-11);
  }
}

TEST_CASE("conjugate symmetry") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const Complex s(re(rng), im(rng));
    if (std::abs(s - 1.0) < 1e-3) continue;
    const Complex z = zeta(s), zc = zeta(std::conj(s));
    CHECK(std::abs(zc.real() - z.real()) <= 1e-12 * std::max(1.0, std::abs(z)));
    CHECK(std::abs(zc.imag() + z.imag()) <= 1e-12 * std::max(1.0, std::abs(z)));
    const Complex g = unitfrac::gamma(s), gc = unitfrac::gamma(std::conj(s));
    CHECK(std::abs(gc - std::conj(g)) <= 1e-12 * std::max(1e-300, std::abs(g)));
    const Complex k4 = gk_continued(4, s), k4c = gk_continued(4, std::conj(s));
    CHECK(std::abs(k4c - std::conj(k4)) <= 4e-12 * std::max(1.0, std::abs(k4)));
  }
}

TEST_CASE("gk_continued scales zeta bit-exactly") {
  CHECK(std::abs(gk_continued(4, 2.0) - 6.5797362674) < 1e-10);
  CHECK(std::abs(gk_continued(4, 2.0) - 4 * pi * pi / 6) < 4e-12);
  CHECK(std::abs(gk_continued(5, 2.0) - 8.2246703342) < 1e-10);
  for (Complex s : {Complex(0.5, 21.0), Complex(-3.0, 1.0), Complex(7.0, 0.0)})
    for (std::int64_t k : {1, 2, 4, 5, 17})
      CHECK(gk_continued(k, s) == static_cast<double>(k) * zeta(s));
}

TEST_CASE("gk_continued reports the pole with residue k") {
  try {
    gk_continued(4, 1.0);
    FAIL("expected a pole");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOne);
    REQUIRE(e.residue().has_value());
    CHECK(*e.residue() == 4.0);
  }
}

TEST_CASE("functional equation examples") {
  CHECK(functional_eq_residual(4, 2.0) < 1e-10);
  CHECK(functional_eq_residual(4, Complex(0.5, 3.0)) < 1e-9);
  CHECK(functional_eq_residual(4, 3.0) < 1e-10);
  // Both sides at s = 2 equal 4 * pi^-1 * Gamma(1) * zeta(2) = 2 pi / 3.
  const Complex lhs = std::pow(pi, -1.0) * unitfrac::gamma(1.0) * gk_continued(4, 2.0);
  CHECK(std::abs(lhs - 2 * pi / 3) < 1e-12);
  CHECK(functional_eq_residual_asymmetric(4, Complex(0.5, 3.0)) < 1e-9);
  CHECK(functional_eq_residual_asymmetric(4, Complex(-1.5, 7.0)) < 1e-9);
}

TEST_CASE("functional equation residual on a 100-point grid") {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const Complex s(-3.0 + 7.0 * (i + 0.5) / 10.0, -20.0 + 40.0 * (j + 0.5) / 10.0);
      worst = std::max(worst, functional_eq_residual(4, s));
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("functional equation at removable Gamma poles") {
  // Gamma poles met by trivial zeros: both sides stay finite.
  for (double s : {-2.0, -4.0, 3.0, 5.0, 7.0}) CHECK(functional_eq_residual(4, s) < 1e-10);
  // At s = 3 both sides equal 4 pi^{-3/2} Gamma(3/2) zeta(3) = 2 zeta(3) / pi.
  const Complex lhs = std::pow(pi, -1.5) * unitfrac::gamma(1.5) * gk_continued(4, 3.0);
  CHECK(std::abs(lhs - 2 * 1.2020569031595942 / pi) < 1e-13);
}

TEST_CASE("functional equation poles are named") {
  CHECK(kind_of([] { functional_eq_residual(4, 0.0); }) == ErrorKind::PoleEncountered);
  CHECK(kind_of([] { functional_eq_residual(4, 1.0); }) == ErrorKind::PoleEncountered);
  CHECK(kind_of([] { functional_eq_residual_asymmetric(4, 2.0); }) ==
        ErrorKind::PoleEncountered);
}

TEST_CASE("residue_probe examples") {
  CHECK(std::abs(residue_probe(4, 1e-3) - 4.0) < 3e-3);
  CHECK(std::abs(residue_probe(5, 1e-4) - 5.0) < 3e-4);
  CHECK(std::abs(residue_probe(4, 1e-2) - 4.0) < 6e-2);
  // Euler-Mascheroni: eps zeta(1 + eps) = 1 + gamma eps + O(eps^2).
  const double euler_gamma = 0.57721566490153286;
  CHECK(std::abs((residue_probe(1, 1e-4) - 1.0) / 1e-4 - euler_gamma) < 1e-3);
  CHECK(kind_of([] { residue_probe(4, 0.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { residue_probe(4, 0.1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("riemann_siegel_theta against frozen values") {
  CHECK(std::abs(riemann_siegel_theta(10.0) + 3.0670743962898953) < 1e-12);
  CHECK(std::abs(riemann_siegel_theta(14.0) + 1.7829487004161499) < 1e-12);
  CHECK(std::abs(riemann_siegel_theta(30.0) - 8.0578001365639902) < 1e-12);
  CHECK(std::abs(riemann_siegel_theta(60.0) - 37.301673020532935) < 1e-11);
}

TEST_CASE("rotated G_k is real and vanishes at known zeros") {
  for (double t : {5.0, 14.0, 22.5, 40.0}) {
    const Complex z = std::exp(Complex(0.0, riemann_siegel_theta(t))) *
                      gk_continued(4, Complex(0.5, t));
    CHECK(std::abs(z.imag()) < 1e-10);
    CHECK(std::abs(z.real() - rotated_gk(4, t)) < 1e-10);
  }
  for (double t : {14.134725141734693, 21.022039638771555, 25.010857580145688})
    CHECK(std::abs(rotated_gk(4, t)) < 1e-9);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_even(1) == 1.0 / 6);
  CHECK(bernoulli_even(2) == -1.0 / 30);
  CHECK(bernoulli_even(6) == doctest::Approx(-691.0 / 2730));
  // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
  for (int j = 1; j <= 30; ++j) {
    const double two_j = 2.0 * j;
    const double expect = (j % 2 ? 2.0 : -2.0) * std::tgamma(two_j + 1) *
                          std::real(zeta(two_j)) / std::pow(2 * pi, two_j);
    CHECK(std::abs(bernoulli_even(j) - expect) <= 1e-12 * std::abs(expect));
  }
}

TEST_CASE("precision config validation") {
  PrecisionConfig bad;
  bad.em_terms = 3;
  CHECK_FALSE(bad.valid());
  CHECK(kind_of([&] { zeta(2.0, bad); }) == ErrorKind::InvalidArgument);
}
