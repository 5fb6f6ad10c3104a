#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace burst::detail {

inline std::size_t worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Number of chunks parallel_chunks uses for `total` items.
inline std::size_t chunk_count(std::uint64_t total) { return total < (1U << 14) ? 1 : worker_count(); }

/// Splits [0, total) into contiguous chunks and runs fn(begin, end, chunk) on each,
/// one thread per chunk. Chunk boundaries depend only on `total` and the worker count,
/// so callers that merge by chunk index get worker-independent results.
template <class F>
void parallel_chunks(std::uint64_t total, F&& fn) {
  const std::size_t workers = chunk_count(total);
  if (workers == 1) {
    fn(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, w * step);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + step);
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace burst::detail
