#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace shtab {

/// Worker count: SHTAB_JOBS if set to a positive integer, else the
/// hardware concurrency (at least 1).
inline unsigned default_jobs() {
  if (const char* env = std::getenv("SHTAB_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls f(k) for k in [0, count) on up to `jobs` threads. Each k is handled
/// exactly once; f must only write state owned by k. If calls throw, the
/// exception from the smallest k is rethrown after all workers stop.
template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::size_t> error_at(jobs, count);
  auto work = [&](unsigned w) {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      try {
        f(k);
      } catch (...) {
        errors[w] = std::current_exception();
        error_at[w] = k;
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  auto first = std::min_element(error_at.begin(), error_at.end());
  if (*first < count) std::rethrow_exception(errors[static_cast<std::size_t>(first - error_at.begin())]);
}

}  // namespace shtab
