// Acceptance runner: every reproduction check, exact comparison only.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>

#include "permuton/checks.hpp"

int main() {
  using namespace permuton;
  std::size_t index = 0, failed = 0;
  for (const auto& def : check_definitions()) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = run_check(def);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    ++index;
    if (!r.passed) ++failed;
    std::printf("%-4s %2zu %-26s %s (%lld ms)\n", r.passed ? "PASS" : "FAIL", index, r.key.c_str(),
                r.detail.c_str(), static_cast<long long>(ms));
  }
  std::printf("%zu/%zu acceptance criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
