#pragma once

// A process-wide worker count and a static-partition parallel loop. Callers
// write results into per-index slots so output never depends on scheduling.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace geolang {

  void set_thread_count(unsigned n);
  unsigned thread_count();

  // Calls f(i) for every i in [0, n). The first exception (lowest chunk)
  // is rethrown after all workers finish.
  template <class F>
  void parallel_for(std::size_t n, F&& f) {
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(thread_count(), n / 64 + 1));
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        f(i);
      }
      return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          std::size_t hi = std::min(n, (w + 1) * chunk);
          for (std::size_t i = w * chunk; i < hi; ++i) {
            f(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  // Like parallel_for but for coarse tasks (one index per task).
  template <class F>
  void parallel_tasks(std::size_t n, F&& f) {
    unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        f(i);
      }
      return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            f(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace geolang
