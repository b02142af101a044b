#include "griddom/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace griddom {

namespace {
std::atomic<int> g_threads{0};
}

void setDefaultThreadCount(int n) { g_threads.store(n < 0 ? 0 : n); }

int defaultThreadCount() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallelFor(std::int64_t begin, std::int64_t end,
                 const std::function<void(std::int64_t)>& fn, int threads) {
  if (begin >= end) return;
  int workers = threads > 0 ? threads : defaultThreadCount();
  std::int64_t span = end - begin;
  workers = static_cast<int>(std::min<std::int64_t>(workers, span));
  if (workers <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{begin};
  auto worker = [&]() {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= end) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace griddom
