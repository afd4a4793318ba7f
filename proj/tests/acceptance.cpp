// Runs every acceptance criterion and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <map>

#include "geolang/parallel.hpp"
#include "geolang/report.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  // Wall-clock budgets in seconds; criteria without one are unbounded.
  std::map<int, double> budget{{1, 1}, {3, 30}, {4, 5}, {5, 60}, {6, 30}};
  bool all = true;
  for (auto const& c : geolang::acceptance_criteria()) {
    auto start = clock::now();
    geolang::Report r;
    std::string error;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool in_time = !budget.count(c.id) || secs < budget[c.id];
    bool pass = error.empty() && r.ok() && in_time;
    all = all && pass;
    std::printf("criterion %d %s %s (%s, %.2fs%s)\n", c.id,
                pass ? "PASS" : "FAIL", c.title.c_str(),
                error.empty() ? r.summary().c_str() : error.c_str(), secs,
                in_time ? "" : ", over budget");
    if (!pass && error.empty()) {
      std::fputs(r.body().c_str(), stdout);
    }
  }
  return all ? 0 : 1;
}
