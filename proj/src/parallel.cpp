#include "schubert/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schubert {

int configured_threads() {
  static const int count = [] {
    const char* env = std::getenv("SCHUBERT_THREADS");
    long v = 0;
    if (env && *env) {
      char* end = nullptr;
      v = std::strtol(env, &end, 10);
      if (end == env || v < 0) v = 0;
    }
    if (v == 0) v = static_cast<long>(std::thread::hardware_concurrency());
    if (v < 1) v = 1;
    if (v > 64) v = 64;
    return static_cast<int>(v);
  }();
  return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(configured_threads()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace schubert
