// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>

#include "detlab/presets.hpp"

int main() {
  int failed = 0;
  for (const auto& r : detlab::acceptance_suite()) {
    std::printf("%s %2d %s [%.2fs] %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed ? 1 : 0;
}
