#include "steiner/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace steiner {

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("STEINER_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value >= 1) workers = static_cast<unsigned>(std::min(value, 256L));
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return workers;
}

unsigned planned_workers(std::size_t count) {
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), count)));
}

void parallel_for(std::size_t count, const std::function<void(unsigned, std::size_t)>& body,
                  unsigned* used_workers) {
  const unsigned workers = planned_workers(count);
  if (used_workers != nullptr) *used_workers = workers;
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned worker) {
    try {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(worker, i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace steiner
