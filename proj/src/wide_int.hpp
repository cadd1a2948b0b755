#pragma once

// 128-bit fast path for the exact kernel. Every operation reports overflow
// instead of wrapping; callers fall back to BigInt when a value does not fit.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>

namespace unitfrac::detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::optional<i128> mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<i128> sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

/// t^2 (kx - n)^2 - 2nxt, or empty on overflow.
inline std::optional<i128> eval_f_wide(std::int64_t k, std::int64_t n,
                                       std::int64_t x, std::int64_t t) {
  const auto kx = mul(k, x);
  if (!kx) return std::nullopt;
  const auto d = sub(*kx, n);
  if (!d) return std::nullopt;
  const auto td = mul(t, *d);
  if (!td) return std::nullopt;
  const auto sq = mul(*td, *td);
  if (!sq) return std::nullopt;
  auto nxt = mul(i128{2} * n, x);
  if (!nxt) return std::nullopt;
  nxt = mul(*nxt, t);
  if (!nxt) return std::nullopt;
  return sub(*sq, *nxt);
}

namespace residues {

template <unsigned Mod>
constexpr std::array<bool, Mod> square_table() {
  std::array<bool, Mod> table{};
  for (unsigned r = 0; r < Mod; ++r) table[(r * r) % Mod] = true;
  return table;
}

inline constexpr auto mod64 = square_table<64>();
inline constexpr auto mod63 = square_table<63>();
inline constexpr auto mod65 = square_table<65>();
inline constexpr auto mod11 = square_table<11>();

}  // namespace residues

/// Cheap quadratic-residue filter; false means v is certainly not a square.
inline bool maybe_square(u128 v) {
  if (!residues::mod64[static_cast<unsigned>(v & 63u)]) return false;
  const auto r = static_cast<std::uint64_t>(v % (63u * 65u * 11u));
  return residues::mod63[r % 63] && residues::mod65[r % 65] &&
         residues::mod11[r % 11];
}

/// floor(sqrt(v)). The long double estimate is corrected with exact products.
inline std::uint64_t isqrt_floor(u128 v) {
  if (v == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
  constexpr u128 kMaxRoot = ~std::uint64_t{0};
  if (r > kMaxRoot) r = kMaxRoot;
  while (r * r > v) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::uint64_t>(r);
}

inline std::optional<std::uint64_t> square_root_exact(i128 v) {
  if (v < 0) return std::nullopt;
  const auto u = static_cast<u128>(v);
  if (!maybe_square(u)) return std::nullopt;
  const std::uint64_t r = isqrt_floor(u);
  if (static_cast<u128>(r) * r != u) return std::nullopt;
  return r;
}

}  // namespace unitfrac::detail
