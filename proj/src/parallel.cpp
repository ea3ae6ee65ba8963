#include "dsdkit/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dsdkit::par {

namespace {

std::atomic<int> g_max_threads{0};

int resolve_auto() {
  if (const char* env = std::getenv("DSDKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

int max_threads() {
  const int v = g_max_threads.load(std::memory_order_relaxed);
  return v > 0 ? v : resolve_auto();
}

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& f) {
  if (begin >= end) return;
  const std::size_t count = end - begin;
  std::size_t workers = static_cast<std::size_t>(max_threads());
  if (workers > count) workers = count;
  if (workers <= 1) {
    f(begin, end);
    return;
  }

  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    if (lo >= end) break;
    const std::size_t hi = std::min(end, lo + chunk);
    threads.emplace_back([&f, lo, hi] { f(lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace dsdkit::par
