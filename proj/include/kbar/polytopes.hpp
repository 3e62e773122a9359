#pragma once

#include <utility>
#include <vector>

#include "kbar/enumerate.hpp"
#include "kbar/poset.hpp"

namespace kbar {

// Bracketing of n letters on a line: intervals [i,j] (1-based, inclusive)
// of length 2..n-1, pairwise nested or disjoint. Full interval and
// singletons are excluded; they would not change the face lattice.
struct Bracketing {
  int n = 0;
  std::vector<std::pair<int, int>> brackets;
  std::string str() const;
};

// Face poset of the associahedron K_n: bracketings ordered by reverse
// inclusion, rank = (n-2) - #brackets. Throws Error(TooSmall) for n < 2.
FacePoset associahedron_poset(int n);

long long catalan(int k);  // C(2k,k)/(k+1)

// Cyclohedron face poset, derived from the moduli model as the closure
// poset of a chamber of Kbar(1,n).
ClosurePoset cyclohedron_poset(int n, const EnumOptions& opts = {});

}  // namespace kbar
