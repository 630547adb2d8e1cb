#pragma once

// Minimal parallel-for over an index range. Work items must write to
// disjoint locations; scheduling order is unspecified but the result is
// then deterministic. The first exception thrown by any worker is
// rethrown on the calling thread.

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace monoidrep {

inline void parallel_for(long n, int jobs,
                         const std::function<void(long)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<long>(jobs, n));
  std::atomic<long> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      try {
        for (long i = next++; i < n && !stop; i = next++) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    });
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace monoidrep
