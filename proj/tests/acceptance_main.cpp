// Acceptance suite: runs every verification check, aggregates them into the
// ten acceptance criteria, and prints one pass/fail line per criterion.
// Exits nonzero if any criterion fails.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "kbar/verify.hpp"

namespace {

const char* kCriterionNames[] = {
    "",
    "chamber counts equal (m-1)!",
    "divisor censuses match closed forms",
    "minimal building-set sizes",
    "f-vector and Euler characteristic of Kbar(1,3)",
    "f-vector of Kbar(2,1)",
    "chamber adjacency splits into two equal components",
    "chamber-closure posets tile by associahedra/cyclohedra",
    "Catalan vertex counts and cyclohedron W4 face counts",
    "codim-1 strata refine the divisor census",
    "structural property suites",
};

}  // namespace

int main() {
  std::vector<kbar::Check> checks = kbar::run_verification();

  std::map<int, std::vector<const kbar::Check*>> by_criterion;
  for (const auto& c : checks) by_criterion[c.criterion].push_back(&c);

  bool all_pass = true;
  for (int k = 1; k <= 10; ++k) {
    const auto& group = by_criterion[k];
    bool pass = !group.empty();
    for (const kbar::Check* c : group) pass = pass && c->pass;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %2d: %s (%zu checks)\n", pass ? "PASS" : "FAIL",
                k, kCriterionNames[k], group.size());
    if (!pass)
      for (const kbar::Check* c : group)
        if (!c->pass)
          std::printf("       %s: expected %s, got %s\n", c->name.c_str(),
                      c->expected.c_str(), c->actual.c_str());
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES");
  return all_pass ? 0 : 1;
}
