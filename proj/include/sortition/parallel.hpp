#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sortition {

// Worker count: SORTITION_THREADS env var, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("SORTITION_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(chunk_index) for chunk_index in [0, chunks). Work is pulled from an
// atomic queue, so results must be written into per-chunk slots; callers then
// reduce slots in chunk order, which keeps outputs identical for any worker
// count.
template <typename Fn>
void parallel_for_chunks(std::uint64_t chunks, Fn&& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto pump = [&]() {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        fn(c);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);  // drain remaining work
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, chunks));
  pool.reserve(spawn - 1);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(pump);
  pump();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sortition
