#pragma once

// Bounded enumeration of (x, t) witnesses.
//
// Order is fixed: x ascends from floor(n/k) + 1 to x_max, and for each x, t
// ascends from the domain lower bound ceil(2nx / (kx - n)^2) for t_span
// values. An empty result means the bounded search ran out, nothing more.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "unitfrac/exact.hpp"

namespace unitfrac {

struct SearchBounds {
  std::int64_t x_max = 1;
  std::int64_t t_span = 10'000;

  bool valid() const noexcept { return x_max >= 1 && t_span >= 1; }
  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Desk-scale default: x_max = 4n, t_span = 10^9. The window size is free for
/// the divisor walk, and 10^4 already misses n = 1201 at k = 4.
SearchBounds default_bounds(std::int64_t n);

/// Bounds an unsolved n was retried with before a witness turned up.
struct Escalation {
  std::int64_t n = 0;
  SearchBounds bounds;
  friend bool operator==(const Escalation&, const Escalation&) = default;
};

struct RangeReport {
  std::int64_t k = 0;
  std::int64_t n_start = 0;
  std::int64_t n_end = 0;
  std::int64_t solved_count = 0;
  std::vector<std::int64_t> unsolved;
  std::vector<Decomposition> witnesses;  // one per solved n, ascending n
  std::vector<Escalation> escalations;   // filled by escalate_unsolved
  double elapsed_ms = 0.0;

  /// Field equality ignoring elapsed time.
  bool same_result(const RangeReport& other) const;
};

struct DensityReport {
  std::int64_t k = 0;
  std::int64_t N = 0;
  std::int64_t x_max = 0;
  std::int64_t zero_count = 0;
  double fraction = 0.0;  // zero_count / (N - 1)

  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

struct ZeroPair {
  std::int64_t x = 0;
  std::int64_t t = 0;
  friend bool operator==(const ZeroPair&, const ZeroPair&) = default;
};

/// Options for the map-reduce operations. The result never depends on them.
struct ParallelOptions {
  unsigned threads = 1;
  /// Called from worker threads with the number of finished n.
  std::function<void(std::int64_t done, std::int64_t total)> progress;
};

/// First witness in enumeration order, for k >= 2 and n >= 2.
std::optional<Decomposition> solve_first(std::int64_t k, std::int64_t n,
                                         const SearchBounds& bounds);

/// Smallest x > n/k, x <= x_max, with (kx - n)^2 | 2nx; t = 2nx / (kx - n)^2.
std::optional<ZeroPair> find_zero_pair(std::int64_t k, std::int64_t n,
                                       std::int64_t x_max);

/// solve_first for every n in [n_start, n_end]. With no bounds given, each n
/// uses default_bounds(n). Throws DomainError for n_start < 2 or an empty
/// range.
RangeReport verify_range(std::int64_t k, std::int64_t n_start,
                         std::int64_t n_end,
                         std::optional<SearchBounds> bounds = std::nullopt,
                         const ParallelOptions& options = {});

/// Retries every unsolved n with t_span multiplied by t_factor and x_max by
/// x_factor per round, up to `rounds` rounds. Solved n move into the witness
/// list (kept in ascending n) and are logged in `escalations`.
void escalate_unsolved(RangeReport& report, std::optional<SearchBounds> bounds,
                       int rounds, std::int64_t t_factor = 1000,
                       std::int64_t x_factor = 2);

/// Counts n in [2, N] with an F = 0 pair. Each counted n is backed by an
/// exact y = z witness.
DensityReport zero_density(std::int64_t k, std::int64_t N, std::int64_t x_max,
                           const ParallelOptions& options = {});

}  // namespace unitfrac
