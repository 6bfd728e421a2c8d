#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace popstack::detail {

// Runs fn(0..count-1) on up to `workers` threads. The first exception thrown
// by any task is rethrown on the calling thread after all workers finish.
template <typename F>
void parallel_for(size_t count, int workers, F&& fn) {
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = hw > 0 ? static_cast<int>(hw) : 1;
  }
  if (count < 2 || workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = static_cast<int>(std::min<size_t>(workers, count));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) threads.emplace_back(run);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace popstack::detail
