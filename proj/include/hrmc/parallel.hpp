#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hrmc {

/// Splits [0, count) into `workers` contiguous chunks and runs
/// f(chunk, begin, end) on each, one thread per chunk. The split depends only
/// on (count, workers), so callers merging per-chunk results in chunk order
/// get the same answer for any scheduling. The first exception is rethrown.
template <class F>
void parallel_chunks(std::uint64_t count, unsigned workers, F&& f) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    f(0U, std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t n = std::min<std::uint64_t>(workers, count);
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> threads;
    threads.reserve(n);
    for (std::uint64_t w = 0; w < n; ++w) {
      const std::uint64_t begin = count * w / n;
      const std::uint64_t end = count * (w + 1) / n;
      threads.emplace_back([&, w, begin, end] {
        try {
          f(static_cast<unsigned>(w), begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks will use.
inline unsigned chunk_count(std::uint64_t count, unsigned workers) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) return 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
}

}  // namespace hrmc
