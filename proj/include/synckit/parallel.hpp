#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace synckit {

// Deterministic split-merge: `count` independent subproblems are solved with
// no shared state except monotone counters, and collected by index. The
// merged outcome is therefore identical for any worker count. Exceptions are
// re-thrown for the lowest failing index.
//
// `solve(i)` may consult `first_success` to abandon work that can no longer
// affect the merged result (indices above the lowest success so far).
struct TaskControl {
  std::atomic<std::size_t> first_success{SIZE_MAX};

  bool obsolete(std::size_t idx) const {
    return first_success.load(std::memory_order_relaxed) < idx;
  }
  void record_success(std::size_t idx) {
    std::size_t cur = first_success.load(std::memory_order_relaxed);
    while (idx < cur &&
           !first_success.compare_exchange_weak(cur, idx,
                                                std::memory_order_relaxed)) {
    }
  }
};

// When `control` is given, errors from tasks above the final first_success
// index are discarded: those tasks cannot affect the merged answer.
template <class Result, class Solve>
std::vector<Result> run_indexed(std::size_t count, unsigned workers,
                                Solve&& solve,
                                TaskControl* control = nullptr) {
  std::vector<Result> results(count);
  if (count == 0) return results;
  workers = std::max(1u, std::min<unsigned>(workers, unsigned(count)));
  std::vector<std::exception_ptr> errors(count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        results[i] = solve(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          results[i] = solve(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::size_t relevant = count;
  if (control) {
    std::size_t s = control->first_success.load();
    if (s < count) relevant = s + 1;
  }
  for (std::size_t i = 0; i < relevant; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return results;
}

}  // namespace synckit
