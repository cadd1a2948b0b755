#include "unitfrac/exact.hpp"

#include "wide_int.hpp"

namespace unitfrac {

BigInt eval_F(const ProblemParams& p) {
  const BigInt k = p.k, n = p.n, x = p.x, t = p.t;
  const BigInt d = k * x - n;
  return t * t * d * d - 2 * n * x * t;
}

bool is_admissible(const ProblemParams& p, const DomainSpec& d) {
  if (p.n < d.n1) return false;
  const BigInt k = p.k, n = p.n, x = p.x, t = p.t;
  const BigInt gap = k * x - n;
  if (gap <= 0) return false;
  return t * gap * gap >= 2 * n * x;
}

std::optional<BigInt> perfect_square_witness(const BigInt& v) {
  if (v < 0) return std::nullopt;
  // Values below 2^126 take the 128-bit route.
  if (boost::multiprecision::msb(v + 1) < 126) {
    const auto lo = static_cast<std::uint64_t>(v & BigInt{~std::uint64_t{0}});
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const detail::u128 wide = (static_cast<detail::u128>(hi) << 64) | lo;
    const auto root = detail::square_root_exact(static_cast<detail::i128>(wide));
    if (!root) return std::nullopt;
    return BigInt{*root};
  }
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

bool verify_decomposition(const BigInt& k, const BigInt& n, const BigInt& x,
                          const BigInt& y, const BigInt& z) {
  if (k < 1 || n < 1 || x < 1 || y < 1 || z < 1) return false;
  return k * x * y * z == n * (y * z + x * z + x * y);
}

std::optional<Decomposition> decompose(const ProblemParams& p,
                                       const DomainSpec& d) {
  if (!p.valid() || !is_admissible(p, d)) return std::nullopt;
  auto m = perfect_square_witness(eval_F(p));
  if (!m) return std::nullopt;
  const BigInt centre = BigInt{p.t} * (BigInt{p.k} * p.x - p.n);
  if (*m >= centre) return std::nullopt;
  Decomposition out{p, *m, centre - *m, centre + *m};
  if (!verify_decomposition(p.k, p.n, p.x, out.y, out.z)) return std::nullopt;
  return out;
}

}  // namespace unitfrac
