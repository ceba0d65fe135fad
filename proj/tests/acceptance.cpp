// Runs every acceptance criterion and prints one line each.

#include <cstdio>

#include "stanley/selftest.hpp"

int main() {
  int failed = 0;
  stanley::run_selftest([&](const stanley::CriterionReport& r) {
    std::printf("[%s] criterion %d: %s: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    failed += !r.passed;
  });
  return failed == 0 ? 0 : 1;
}
