#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "unitfrac/exact.hpp"
#include "wide_int.hpp"

using namespace unitfrac;

namespace {

ProblemParams P(std::int64_t k, std::int64_t n, std::int64_t x, std::int64_t t) {
  return ProblemParams{k, n, x, t};
}

// Direct search for y <= z with y + z = 2t(kx - n) and y z = 2nxt.
bool brute_force_pair(const ProblemParams& p, std::int64_t& y_out, std::int64_t& z_out) {
  const std::int64_t sum = 2 * p.t * (p.k * p.x - p.n);
  const std::int64_t prod = 2 * p.n * p.x * p.t;
  for (std::int64_t y = 1; 2 * y <= sum; ++y) {
    const std::int64_t z = sum - y;
    if (y * z == prod) {
      y_out = y;
      z_out = z;
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("eval_F on hand-evaluated points") {
  CHECK(eval_F(P(4, 5, 2, 4)) == 64);
  CHECK(eval_F(P(4, 2, 1, 1)) == 0);
  CHECK(eval_F(P(4, 5, 2, 1)) == -11);
}

TEST_CASE("eval_F does not overflow 64 bits") {
  const auto p = P(4, 3, 1'000'000'000'000, 1'000'000'000'000);
  const BigInt d = BigInt(4) * p.x - p.n;
  const BigInt expect = BigInt(p.t) * p.t * d * d - BigInt(2) * p.n * p.x * p.t;
  CHECK(eval_F(p) == expect);
  CHECK(eval_F(p) > BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("is_admissible") {
  CHECK(is_admissible(P(4, 5, 2, 4), DomainSpec{2}));
  CHECK_FALSE(is_admissible(P(4, 5, 2, 2), DomainSpec{2}));
  CHECK_FALSE(is_admissible(P(4, 4, 1, 100), DomainSpec{2}));
  CHECK_FALSE(is_admissible(P(4, 5, 2, 4), DomainSpec{6}));
  CHECK(is_admissible(P(4, 2, 1, 1)));
}

TEST_CASE("perfect_square_witness examples") {
  CHECK(perfect_square_witness(64) == BigInt(8));
  CHECK_FALSE(perfect_square_witness(21).has_value());
  CHECK(perfect_square_witness(0) == BigInt(0));
  CHECK_FALSE(perfect_square_witness(-4).has_value());
}

TEST_CASE("perfect_square_witness(m^2) = m for every m <= 10^6") {
  for (std::int64_t m = 0; m <= 1'000'000; ++m) {
    const auto w = perfect_square_witness(BigInt(m) * m);
    REQUIRE(w.has_value());
    REQUIRE(*w == m);
    if (m > 0) REQUIRE_FALSE(perfect_square_witness(BigInt(m) * m + 1).has_value());
    if (m > 1) REQUIRE_FALSE(perfect_square_witness(BigInt(m) * m - 1).has_value());
  }
}

TEST_CASE("perfect_square_witness near the 128-bit boundary and beyond") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    BigInt m = BigInt(rng()) << (i % 70);
    m += rng();
    const BigInt sq = m * m;
    REQUIRE(perfect_square_witness(sq) == m);
    REQUIRE_FALSE(perfect_square_witness(sq + 1).has_value());
    if (m > 1) REQUIRE_FALSE(perfect_square_witness(sq - 1).has_value());
  }
  const BigInt big = (BigInt(1) << 200) + 12345;
  CHECK(perfect_square_witness(big * big) == big);
  CHECK_FALSE(perfect_square_witness(big * big + 2 * big).has_value());
}

TEST_CASE("fast 128-bit square root agrees with the big-integer path") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t m = rng() >> (rng() % 60);
    const detail::i128 sq = static_cast<detail::i128>(m) * m;
    const auto r = detail::square_root_exact(sq);
    REQUIRE(r.has_value());
    REQUIRE(*r == m);
    const detail::i128 near = sq + 1 + static_cast<detail::i128>(rng() % 3);
    const auto off = detail::square_root_exact(near);
    if (off) REQUIRE(static_cast<detail::i128>(*off) * *off == near);
  }
}

TEST_CASE("decompose examples") {
  const auto a = decompose(P(4, 5, 2, 4));
  REQUIRE(a.has_value());
  CHECK(a->params.x == 2);
  CHECK(a->y == 4);
  CHECK(a->z == 20);
  CHECK(a->m == 8);

  const auto b = decompose(P(4, 2, 1, 1));
  REQUIRE(b.has_value());
  CHECK(b->y == 2);
  CHECK(b->z == 2);
  CHECK(b->m == 0);

  CHECK_FALSE(decompose(P(4, 5, 2, 3)).has_value());
  CHECK_FALSE(decompose(P(4, 5, 2, 2)).has_value());  // not admissible
}

TEST_CASE("verify_decomposition examples") {
  CHECK(verify_decomposition(4, 5, 2, 4, 20));
  CHECK_FALSE(verify_decomposition(4, 5, 2, 4, 19));
  CHECK(verify_decomposition(4, 2, 1, 2, 2));
  CHECK_FALSE(verify_decomposition(4, 2, 0, 2, 2));
}

TEST_CASE("decompose agrees with brute force over the k = 4 box") {
  int solved = 0;
  for (std::int64_t n = 2; n <= 30; ++n)
    for (std::int64_t x = 1; x <= 40; ++x)
      for (std::int64_t t = 1; t <= 40; ++t) {
        const auto p = P(4, n, x, t);
        if (!is_admissible(p)) continue;
        std::int64_t y = 0, z = 0;
        const bool brute = brute_force_pair(p, y, z);
        const auto d = decompose(p);
        REQUIRE(brute == d.has_value());
        if (!d) continue;
        ++solved;
        REQUIRE(d->y == y);
        REQUIRE(d->z == z);
        REQUIRE(verify_decomposition(4, n, x, d->y, d->z));
        // Viete in V.
        const BigInt d_gap = BigInt(4) * x - n;
        REQUIRE(d->y + d->z == 2 * t * d_gap);
        REQUIRE(d->y * d->z == BigInt(2) * n * x * t);
      }
  CHECK(solved > 100);
}

TEST_CASE("F is non-negative and strictly decreasing on admissible n") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 9);
    const std::int64_t x = 1 + static_cast<std::int64_t>(rng() % 200);
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 500);
    BigInt prev;
    bool have_prev = false;
    for (std::int64_t n = 2; n < k * x; ++n) {
      const auto p = P(k, n, x, t);
      if (!is_admissible(p)) continue;
      const BigInt f = eval_F(p);
      REQUIRE(f >= 0);
      if (have_prev) REQUIRE(f < prev);
      prev = f;
      have_prev = true;
    }
  }
}
