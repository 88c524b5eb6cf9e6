// One PASS/FAIL line per acceptance criterion; exit status 1 on any failure.

#include <cstdio>

#include "sheafradon/reference_suite.hpp"

int main() {
  using namespace sheafradon;
  const SuiteReport rep = run_reference_suite();
  for (const auto& c : rep.checks) {
    std::printf("%s %d %s (%.2fs)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.seconds);
    if (!c.pass) {
      std::printf("  expected: %s\n  computed: %s\n", c.expected.c_str(), c.computed.c_str());
      for (const auto& f : c.failures) std::printf("  %s\n", f.c_str());
      if (c.failure_count > c.failures.size()) std::printf("  ... %zu failures in all\n", c.failure_count);
    }
  }
  return rep.all_pass() && rep.checks.size() == 8 ? 0 : 1;
}
