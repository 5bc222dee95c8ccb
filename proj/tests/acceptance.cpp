// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Three criteria report measured divergences from their pinned targets; the
// details give the numbers. See README.md for the discussion.
#include <cstdio>

#include "ofc/verify.hpp"

int main() {
  const auto results = ofc::run_acceptance(3);
  int failed = 0;
  for (const auto& c : results) {
    std::printf("criterion %2d [%s] %s — %s\n", c.criterion, c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.detail.c_str());
    if (!c.pass) ++failed;
  }
  if (failed)
    std::printf("%d of %zu criteria failing\n", failed, results.size());
  else
    std::printf("all %zu criteria passing\n", results.size());
  return failed ? 1 : 0;
}
