#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace arcpart {

/// Worker count from ARCPART_WORKERS, else the hardware concurrency (at least 1).
inline unsigned default_workers() {
  if (const char* env = std::getenv("ARCPART_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1)
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates task(0..count-1) on up to `workers` threads and returns the
/// results in index order. The first exception thrown by a task is rethrown
/// after all threads have joined.
template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Task task) {
  std::vector<Result> results(count);
  if (count == 0)
    return results;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k)
      results[k] = task(k);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        results[k] = task(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(run);
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

}  // namespace arcpart
