#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace unitfrac::detail {

/// Evaluates fn(i) for i in [0, count) and returns the results in index order.
/// Work is handed out in chunks from a shared counter; the output layout is
/// independent of which thread ran which chunk.
template <class T, class Fn>
std::vector<T> parallel_map(std::int64_t count, unsigned threads, Fn&& fn,
                            const std::function<void(std::int64_t, std::int64_t)>&
                                progress = {}) {
  std::vector<T> out(static_cast<std::size_t>(count));
  constexpr std::int64_t kChunk = 64;
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> done{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::int64_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::int64_t end = std::min(count, begin + kChunk);
        for (std::int64_t i = begin; i < end; ++i)
          out[static_cast<std::size_t>(i)] = fn(i);
        const std::int64_t finished = done.fetch_add(end - begin) + (end - begin);
        if (progress) progress(finished, count);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace unitfrac::detail
