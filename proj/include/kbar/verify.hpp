#pragma once

#include <string>
#include <vector>

namespace kbar {

struct Check {
  int criterion = 0;  // 1..10, which acceptance criterion this check backs
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// End-to-end verification suite: chamber counts, divisor censuses with
// closed forms, building sets, f-vectors, Euler characteristics, adjacency
// components, polytope isomorphisms, Catalan counts, the strata/divisor
// refinement identity, and the structural property suites.
std::vector<Check> run_verification();

}  // namespace kbar
