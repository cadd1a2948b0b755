#pragma once

// Exact integer side of the quadratic parametrization
//
//   F(n) = t^2 (k x - n)^2 - 2 n x t
//
// k/n = 1/x + 1/y + 1/z holds with y = t(kx-n) - m, z = t(kx-n) + m whenever
// F(n) = m^2 is a perfect square. All arithmetic here is arbitrary precision.

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace unitfrac {

using BigInt = boost::multiprecision::cpp_int;

/// (k, n, x, t) with k >= 2 and n, x, t >= 1.
struct ProblemParams {
  std::int64_t k = 4;
  std::int64_t n = 2;
  std::int64_t x = 1;
  std::int64_t t = 1;

  bool valid() const noexcept { return k >= 2 && n >= 1 && x >= 1 && t >= 1; }
  friend bool operator==(const ProblemParams&, const ProblemParams&) = default;
};

/// Lower cutoff N1 of the admissible domain.
struct DomainSpec {
  std::int64_t n1 = 2;

  bool valid() const noexcept { return n1 >= 2; }
  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// A verified witness of k/n = 1/x + 1/y + 1/z, with y <= z.
struct Decomposition {
  ProblemParams params;
  BigInt m;
  BigInt y;
  BigInt z;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// t^2 (kx - n)^2 - 2nxt, exactly. Negative outside the admissible domain.
BigInt eval_F(const ProblemParams& p);

/// n >= N1, n < kx and t (kx - n)^2 >= 2nx (cross-multiplied, no division).
bool is_admissible(const ProblemParams& p, const DomainSpec& d = {});

/// m with m*m == v, or empty when v is negative or not a perfect square.
std::optional<BigInt> perfect_square_witness(const BigInt& v);

/// k x y z == n (y z + x z + x y).
bool verify_decomposition(const BigInt& k, const BigInt& n, const BigInt& x,
                          const BigInt& y, const BigInt& z);

/// Builds the witness for admissible p when F(n) is a perfect square and
/// y >= 1. The rational identity is re-checked before returning.
std::optional<Decomposition> decompose(const ProblemParams& p,
                                       const DomainSpec& d = {});

}  // namespace unitfrac
