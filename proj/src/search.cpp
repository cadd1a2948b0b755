#include "unitfrac/search.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <functional>
#include <string>

#include "parallel.hpp"
#include "unitfrac/errors.hpp"
#include "wide_int.hpp"

namespace unitfrac {

namespace {

using detail::i128;
using detail::u128;

void require_kn(std::int64_t k, std::int64_t n) {
  if (k < 2) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 2");
  if (n < 2) throw DomainError(ErrorKind::InvalidArgument, "n must be >= 2");
}

i128 ceil_div(i128 a, i128 b) { return (a + b - 1) / b; }

// Linear walk over the t window. Used when the divisor walk cannot run in
// 128 bits; candidates that overflow are settled by the BigInt kernel.
std::optional<std::int64_t> first_t_linear(std::int64_t k, std::int64_t n,
                                           std::int64_t x, std::int64_t t_span) {
  const i128 d = i128{k} * x - n;
  const i128 d2 = d * d;
  const i128 two_nx = i128{2} * n * x;
  const i128 t0 = ceil_div(two_nx, d2);
  // g = t d^2 - 2nx, so F = t * g and g grows by d^2 per step.
  i128 g = t0 * d2 - two_nx;
  for (std::int64_t step = 0; step < t_span; ++step, g += d2) {
    const i128 t = t0 + step;
    if (t > INT64_MAX) return std::nullopt;
    i128 f;
    if (__builtin_mul_overflow(t, g, &f)) {
      const ProblemParams p{k, n, x, static_cast<std::int64_t>(t)};
      if (decompose(p)) return p.t;
      continue;
    }
    if (detail::square_root_exact(f)) return static_cast<std::int64_t>(t);
  }
  return std::nullopt;
}

using Factors = std::vector<std::pair<std::uint64_t, unsigned>>;

// Smallest-prime-factor table up to a limit; trial division above it.
class Factorizer {
 public:
  explicit Factorizer(std::int64_t limit) {
    limit = std::clamp<std::int64_t>(limit, 2, kMaxSieve);
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      for (std::uint64_t j = i; j <= static_cast<std::uint64_t>(limit); j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }

  void factor_into(std::uint64_t v, Factors& out) const {
    auto add = [&](std::uint64_t p, unsigned e) {
      for (auto& [q, f] : out)
        if (q == p) { f += e; return; }
      out.emplace_back(p, e);
    };
    if (v < spf_.size()) {
      while (v > 1) {
        const std::uint64_t p = spf_[v];
        unsigned e = 0;
        while (v % p == 0) { v /= p; ++e; }
        add(p, e);
      }
      return;
    }
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (v % p == 0) { v /= p; ++e; }
      if (e) add(p, e);
    }
    if (v > 1) add(v, 1);
  }

 private:
  static constexpr std::int64_t kMaxSieve = 1 << 26;
  std::vector<std::uint32_t> spf_;
};

// Divisor walk over the same window. With N = nx and d = kx - n, witnesses
// (y, z) correspond to divisors a <= N of N^2 through
//   (d y - N)(d z - N) = N^2,   t = (2N + a + N^2/a) / (2 d^2),
// and t strictly decreases as a grows towards N. The largest admissible a
// therefore gives the smallest t, which is exactly what the linear walk finds.
std::optional<std::optional<std::int64_t>> first_t_divisors(
    const Factorizer& factorizer, const Factors& n_factors, std::int64_t k,
    std::int64_t n, std::int64_t x, std::int64_t t_span) {
  const u128 d = static_cast<u128>(i128{k} * x - n);
  const u128 N = static_cast<u128>(n) * static_cast<u128>(x);
  constexpr u128 kLimit = u128{1} << 62;
  if (N >= kLimit || d >= kLimit) return std::nullopt;
  const u128 NN = N * N;
  const u128 two_d2 = 2 * d * d;
  const u128 t0 = (2 * N + d * d - 1) / (d * d);
  const u128 t_end = t0 + static_cast<u128>(t_span) - 1;
  if (t_end > static_cast<u128>(INT64_MAX)) return std::nullopt;
  u128 budget;
  if (__builtin_mul_overflow(two_d2, t_end, &budget)) return std::nullopt;

  Factors factors = n_factors;
  factorizer.factor_into(static_cast<std::uint64_t>(x), factors);

  // All divisors of N^2 that do not exceed N.
  thread_local std::vector<std::uint64_t> divisors;
  divisors.assign(1, 1);
  const auto cap = static_cast<std::uint64_t>(N);
  for (const auto& [p, e] : factors) {
    const std::size_t base = divisors.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < 2 * e; ++i) {
      if (power > cap / p) break;
      power *= p;
      for (std::size_t j = 0; j < base; ++j)
        if (divisors[j] <= cap / power) divisors.push_back(divisors[j] * power);
    }
  }

  // Smallest a whose t can still fall inside the window, rounded down.
  const long double room = static_cast<long double>(budget - 2 * N);
  const long double nn = static_cast<long double>(NN);
  const long double disc = room * room - 4 * nn;
  if (disc < 0 && room < 2 * static_cast<long double>(N) * (1 - 1e-12L))
    return std::optional<std::int64_t>{};
  const long double a_lo_f =
      disc > 0 ? 2 * nn / (room + std::sqrt(disc)) * (1 - 1e-9L) : 0;
  const auto a_lo = static_cast<std::uint64_t>(a_lo_f);

  const auto d64 = static_cast<std::uint64_t>(d);
  const std::uint64_t n_mod = cap % d64;
  std::uint64_t best = 0;
  u128 best_sum = 0;
  for (const std::uint64_t a : divisors) {
    if (a <= best || a < a_lo) continue;
    if ((n_mod + a % d64) % d64 != 0) continue;
    const u128 b = NN / a;
    const u128 sum = 2 * N + a + b;
    if (sum > budget || (N + b) % d != 0 || sum % two_d2 != 0) continue;
    best = a;
    best_sum = sum;
  }
  if (best == 0) return std::optional<std::int64_t>{};
  return static_cast<std::int64_t>(best_sum / two_d2);
}

std::optional<Decomposition> solve_first_with(const Factorizer& factorizer,
                                              std::int64_t k, std::int64_t n,
                                              const SearchBounds& bounds) {
  require_kn(k, n);
  if (!bounds.valid())
    throw DomainError(ErrorKind::InvalidArgument, "x_max and t_span must be >= 1");
  Factors n_factors;
  factorizer.factor_into(static_cast<std::uint64_t>(n), n_factors);
  for (std::int64_t x = n / k + 1; x <= bounds.x_max; ++x) {
    auto fast = first_t_divisors(factorizer, n_factors, k, n, x, bounds.t_span);
    const auto t = fast ? *fast : first_t_linear(k, n, x, bounds.t_span);
    if (!t) continue;
    // The exact kernel re-derives and re-verifies the witness.
    if (auto dec = decompose(ProblemParams{k, n, x, *t})) return dec;
  }
  return std::nullopt;
}

}  // namespace

SearchBounds default_bounds(std::int64_t n) {
  return SearchBounds{std::max<std::int64_t>(1, 4 * n), 1'000'000'000};
}

bool RangeReport::same_result(const RangeReport& other) const {
  return k == other.k && n_start == other.n_start && n_end == other.n_end &&
         solved_count == other.solved_count && unsolved == other.unsolved &&
         witnesses == other.witnesses && escalations == other.escalations;
}

std::optional<Decomposition> solve_first(std::int64_t k, std::int64_t n,
                                         const SearchBounds& bounds) {
  const Factorizer factorizer(std::max(n, bounds.x_max));
  return solve_first_with(factorizer, k, n, bounds);
}

std::optional<ZeroPair> find_zero_pair(std::int64_t k, std::int64_t n,
                                       std::int64_t x_max) {
  require_kn(k, n);
  const i128 two_n = i128{2} * n;
  for (std::int64_t x = n / k + 1; x <= x_max; ++x) {
    const i128 d = i128{k} * x - n;
    const i128 d2 = d * d;
    const i128 two_nx = two_n * x;
    if (two_nx % d2 == 0) return ZeroPair{x, static_cast<std::int64_t>(two_nx / d2)};
    // Past d >= n/k the gap d^2 - 2nx only grows, so no later x can divide.
    if (d * k >= n && d2 > two_nx) break;
  }
  return std::nullopt;
}

RangeReport verify_range(std::int64_t k, std::int64_t n_start,
                         std::int64_t n_end, std::optional<SearchBounds> bounds,
                         const ParallelOptions& options) {
  if (k < 2) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 2");
  if (n_start < 2) throw DomainError(ErrorKind::InvalidArgument, "n_start must be >= 2");
  if (n_end < n_start)
    throw DomainError(ErrorKind::InvalidArgument, "n_end must be >= n_start");
  if (bounds && !bounds->valid())
    throw DomainError(ErrorKind::InvalidArgument, "x_max and t_span must be >= 1");

  const auto started = std::chrono::steady_clock::now();
  const std::int64_t count = n_end - n_start + 1;
  const Factorizer factorizer(
      std::max(n_end, bounds ? bounds->x_max : default_bounds(n_end).x_max));
  auto results = detail::parallel_map<std::optional<Decomposition>>(
      count, options.threads,
      [&](std::int64_t i) {
        const std::int64_t n = n_start + i;
        return solve_first_with(factorizer, k, n, bounds.value_or(default_bounds(n)));
      },
      options.progress);

  RangeReport report;
  report.k = k;
  report.n_start = n_start;
  report.n_end = n_end;
  for (std::int64_t i = 0; i < count; ++i) {
    auto& r = results[static_cast<std::size_t>(i)];
    if (r) {
      report.witnesses.push_back(std::move(*r));
      ++report.solved_count;
    } else {
      report.unsolved.push_back(n_start + i);
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

void escalate_unsolved(RangeReport& report, std::optional<SearchBounds> bounds,
                       int rounds, std::int64_t t_factor, std::int64_t x_factor) {
  if (t_factor < 1 || x_factor < 1)
    throw DomainError(ErrorKind::InvalidArgument, "escalation factors must be >= 1");
  constexpr std::int64_t kCap = std::int64_t{1} << 60;
  auto grow = [&](std::int64_t v, std::int64_t f) { return v > kCap / f ? kCap : v * f; };

  std::vector<std::int64_t> still;
  for (const std::int64_t n : report.unsolved) {
    SearchBounds b = bounds.value_or(default_bounds(n));
    std::optional<Decomposition> found;
    for (int r = 0; r < rounds && !found; ++r) {
      b = SearchBounds{grow(b.x_max, x_factor), grow(b.t_span, t_factor)};
      found = solve_first(report.k, n, b);
    }
    if (!found) {
      still.push_back(n);
      continue;
    }
    report.escalations.push_back({n, b});
    const auto pos = std::lower_bound(
        report.witnesses.begin(), report.witnesses.end(), n,
        [](const Decomposition& d, std::int64_t v) { return d.params.n < v; });
    report.witnesses.insert(pos, std::move(*found));
    ++report.solved_count;
  }
  report.unsolved = std::move(still);
}

DensityReport zero_density(std::int64_t k, std::int64_t N, std::int64_t x_max,
                           const ParallelOptions& options) {
  if (k < 2) throw DomainError(ErrorKind::InvalidArgument, "k must be >= 2");
  if (N < 2) throw DomainError(ErrorKind::InvalidArgument, "N must be >= 2");
  const auto hits = detail::parallel_map<char>(
      N - 1, options.threads,
      [&](std::int64_t i) -> char {
        const std::int64_t n = 2 + i;
        const auto pair = find_zero_pair(k, n, x_max);
        if (!pair) return 0;
        const auto dec = decompose(ProblemParams{k, n, pair->x, pair->t});
        return dec && dec->m == 0 && dec->y == dec->z ? 1 : 0;
      },
      options.progress);

  DensityReport report;
  report.k = k;
  report.N = N;
  report.x_max = x_max;
  for (char h : hits) report.zero_count += h;
  report.fraction = static_cast<double>(report.zero_count) / static_cast<double>(N - 1);
  return report;
}

}  // namespace unitfrac
