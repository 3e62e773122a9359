#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kbar/poset.hpp"
#include "kbar/tree.hpp"

namespace kbar {

struct EnumOptions {
  long long cap = 1'000'000;  // raw rooted trees before dedup
};

// Exhaustively visits rooted bubble trees for Kbar(n,m) with at most
// max_codim bubbles. Over-generates flip/rotation/re-rooting duplicates;
// callers canonicalize. Throws Error(CapExceeded) past opts.cap raw trees.
void for_each_raw_tree(int n, int m, int max_codim, const EnumOptions& opts,
                       const std::function<void(const BubbleTree&)>& fn);

// All distinct canonical strata of codimension exactly k, sorted by key.
std::vector<Stratum> enumerate_strata(int n, int m, int k,
                                      const EnumOptions& opts = {});

// counts[k] = number of strata of codimension k, k = 0 .. 2n+m-3.
std::vector<long long> f_vector(int n, int m, const EnumOptions& opts = {});

// Codim-0 count; asserts equality with (m-1)!. Requires m >= 1.
long long chambers(int n, int m, const EnumOptions& opts = {});

struct DivisorClass {
  enum class Kind { Interior, Boundary, Mixed };
  Kind kind = Kind::Interior;
  std::vector<int> interior_labels;
  std::vector<int> boundary_labels;
  ModuliFactor outer;  // the factor retaining the root
  ModuliFactor inner;  // the bubble's factor
  long long stratum_count = 0;  // codim-1 strata with this content
  std::string str() const;
};

struct DivisorCensus {
  std::vector<DivisorClass> classes;
  long long interior_total = 0;
  long long boundary_total = 0;
  long long mixed_total = 0;
  // Closed forms of the divisor count theorem; compared only when n,m >= 1.
  bool closed_form_checked = false;
  long long cf_interior = 0;  // 2^n - n - 1
  long long cf_boundary = 0;  // 2^m - m - 1
  long long cf_mixed = 0;     // 2^m (2^(n-1) - 1)
};

DivisorCensus divisor_census(int n, int m, const EnumOptions& opts = {});

struct BuildingSetElement {
  DivisorClass::Kind kind = DivisorClass::Kind::Interior;
  std::vector<int> interior_labels;
  std::vector<int> boundary_labels;
  int grading = 0;  // 2i + b
  std::string str() const;
};

// Single-collision content classes of naive codimension >= 2, sorted by
// grading 2i+b (ties broken deterministically).
std::vector<BuildingSetElement> building_set(int n, int m);

// Graded poset of all strata, ranked by dimension; covers from single-arc
// contractions (merge_bubble).
FacePoset face_poset(int n, int m, const EnumOptions& opts = {});

// Face poset of one chamber as a cell of the tiling. Elements are chamber
// faces: trees canonicalized under rotation and (n=0) re-rooting but not
// flips, so a stratum glued to the chamber along two sides appears twice.
struct ClosurePoset {
  FacePoset poset;
  std::vector<std::string> stratum_keys;  // per element: stratum projection
  bool self_glued = false;  // two distinct faces share a stratum
  std::string chamber_key;
};

ClosurePoset chamber_closure_poset(int n, int m, const Stratum& chamber,
                                   const EnumOptions& opts = {});
// Default chamber: first in the sorted chamber list.
ClosurePoset chamber_closure_poset(int n, int m, const EnumOptions& opts = {});

struct AdjacencyResult {
  std::vector<Stratum> chambers;
  std::vector<std::pair<int, int>> edges;  // i < j, shared codim-1 stratum
  std::vector<std::vector<int>> components;
};

AdjacencyResult chamber_adjacency(int n, int m, const EnumOptions& opts = {});

// Alternating sum over strata of (-1)^dim; only meaningful for n <= 1,
// where every stratum is an open cell. Throws Error(UnsupportedN).
long long euler_characteristic(int n, int m, const EnumOptions& opts = {});

}  // namespace kbar
