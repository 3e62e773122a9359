#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kbar {

// Finite graded poset given by elements with rank labels and cover pairs
// (lower, upper). Used for strata posets, chamber closures, and the
// bracketing polytopes.
struct FacePoset {
  struct Element {
    int rank = 0;
    std::string label;
  };
  std::vector<Element> elements;
  std::vector<std::pair<int, int>> covers;  // (lower index, upper index)
};

// True iff every cover raises rank by exactly 1, every minimal element sits
// at the bottom rank, and every maximal element at the top rank.
bool is_graded(const FacePoset& p);

// Counts per rank, bottom rank first. Throws Error(NotGraded).
std::vector<long long> poset_f_vector(const FacePoset& p);

// Rank-preserving order isomorphism via backtracking with
// (rank, up-degree, down-degree) pruning. Throws Error(CapExceeded) above
// the size cap.
bool poset_isomorphic(const FacePoset& p, const FacePoset& q,
                      std::size_t cap = 20000);

// Hasse diagram exports; byte-stable for fixed input.
std::string to_dot(const FacePoset& p);
std::string to_text(const FacePoset& p);

}  // namespace kbar
