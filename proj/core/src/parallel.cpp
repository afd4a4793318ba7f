#include "geolang/parallel.hpp"

#include <atomic>

namespace geolang {

  namespace {
    std::atomic<unsigned> workers{1};
  }

  void set_thread_count(unsigned n) {
    workers = n == 0 ? 1 : n;
  }

  unsigned thread_count() {
    return workers;
  }

}  // namespace geolang
