#include "rbcat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace rbcat {

namespace {
std::atomic<int> g_jobs{1};
}  // namespace

void set_jobs(int j) { g_jobs.store(j < 1 ? 1 : j); }
int jobs() { return g_jobs.load(); }

std::optional<std::size_t> find_first(std::size_t n,
                                      const std::function<bool(std::size_t)>& pred) {
  const int j = jobs();
  if (j <= 1 || n < 1024) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  // Chunked ascending scan; workers skip chunks past the best hit so far.
  const std::size_t chunk = std::max<std::size_t>(256, n / (8 * (std::size_t)j));
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::vector<std::thread> pool;
  for (int w = 0; w < j; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= nchunks) return;
        const std::size_t lo = c * chunk;
        if (lo >= best.load()) return;  // everything later is worse
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi && i < best.load(); ++i) {
          if (pred(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::size_t b = best.load();
  if (b == n) return std::nullopt;
  return b;
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int j = jobs();
  if (j <= 1 || n < 1024) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(64, n / (8 * (std::size_t)j));
  std::vector<std::thread> pool;
  for (int w = 0; w < j; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t lo = next.fetch_add(chunk);
        if (lo >= n) return;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rbcat
