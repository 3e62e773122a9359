#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kbar/enumerate.hpp"

using namespace kbar;

TEST_CASE("stratum counts of the small spaces") {
  CHECK(enumerate_strata(1, 1, 0).size() == 1);
  CHECK(enumerate_strata(1, 3, 0).size() == 2);
  CHECK(enumerate_strata(1, 3, 1).size() == 6);
  CHECK(enumerate_strata(1, 3, 2).size() == 3);
  CHECK(enumerate_strata(2, 1, 2).size() == 1);
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(1, 3) == std::vector<long long>{2, 6, 3});
  CHECK(f_vector(2, 1) == std::vector<long long>{1, 3, 1});
  CHECK(f_vector(1, 2) == std::vector<long long>{1, 1});
  CHECK(f_vector(1, 1) == std::vector<long long>{1});
  CHECK(f_vector(0, 3) == std::vector<long long>{2});
}

TEST_CASE("chamber counts are (m-1)!") {
  CHECK(chambers(1, 1) == 1);
  CHECK(chambers(1, 4) == 6);
  CHECK(chambers(0, 5) == 24);
  CHECK(chambers(2, 3) == 2);
}

TEST_CASE("divisor censuses") {
  DivisorCensus c12 = divisor_census(1, 2);
  CHECK(c12.interior_total == 0);
  CHECK(c12.boundary_total == 1);
  CHECK(c12.mixed_total == 0);
  CHECK(c12.closed_form_checked);

  DivisorCensus c22 = divisor_census(2, 2);
  CHECK(c22.interior_total == 1);
  CHECK(c22.boundary_total == 1);
  CHECK(c22.mixed_total == 4);
  long long strata = 0;
  for (const auto& d : c22.classes) strata += d.stratum_count;
  CHECK(strata == static_cast<long long>(enumerate_strata(2, 2, 1).size()));

  DivisorCensus c31 = divisor_census(3, 1);
  CHECK(c31.interior_total == 4);
  CHECK(c31.boundary_total == 0);
  CHECK(c31.mixed_total == 6);
}

TEST_CASE("building sets") {
  CHECK(building_set(2, 2).size() == 4);
  CHECK(building_set(2, 1).size() == 2);
  CHECK(building_set(1, 2).empty());
  CHECK(building_set(1, 3).size() == 1);
  // Gradings come out sorted.
  auto bs = building_set(3, 3);
  for (std::size_t i = 1; i < bs.size(); ++i)
    CHECK(bs[i - 1].grading <= bs[i].grading);
}

TEST_CASE("face posets of the smallest spaces") {
  FacePoset p12 = face_poset(1, 2);
  CHECK(p12.elements.size() == 2);
  CHECK(p12.covers.size() == 1);
  CHECK(is_graded(p12));

  FacePoset p21 = face_poset(2, 1);
  CHECK(p21.elements.size() == 5);
  std::vector<int> per_rank(3, 0);
  for (const auto& e : p21.elements) ++per_rank[static_cast<std::size_t>(e.rank)];
  CHECK(per_rank == std::vector<int>{1, 3, 1});
  // The closed interior divisor (the pupil) has no lower cover, so this
  // poset is not graded even though every stratum is ranked by dimension.
  CHECK(!is_graded(p21));
}

TEST_CASE("chamber closure posets") {
  ClosurePoset w3 = chamber_closure_poset(1, 3);
  CHECK(poset_f_vector(w3.poset) == std::vector<long long>{6, 6, 1});
  CHECK(w3.self_glued);
  std::set<std::string> distinct(w3.stratum_keys.begin(),
                                 w3.stratum_keys.end());
  // 6 vertex faces project onto only 3 vertex strata.
  CHECK(distinct.size() == 1 + 6 + 3);

  ClosurePoset seg = chamber_closure_poset(1, 2);
  CHECK(poset_f_vector(seg.poset) == std::vector<long long>{2, 1});
  CHECK(seg.self_glued);

  ClosurePoset pent = chamber_closure_poset(0, 5);
  CHECK(poset_f_vector(pent.poset) == std::vector<long long>{5, 5, 1});
  CHECK(!pent.self_glued);
}

TEST_CASE("chamber adjacency") {
  AdjacencyResult a13 = chamber_adjacency(1, 3);
  CHECK(a13.chambers.size() == 2);
  CHECK(a13.components.size() == 1);

  AdjacencyResult a04 = chamber_adjacency(0, 4);
  CHECK(a04.chambers.size() == 6);
  REQUIRE(a04.components.size() == 2);
  CHECK(a04.components[0].size() == 3);
  CHECK(a04.components[1].size() == 3);
}

TEST_CASE("euler characteristics") {
  CHECK(euler_characteristic(1, 2) == 0);
  CHECK(euler_characteristic(0, 4) == 0);
  CHECK(euler_characteristic(1, 3) == -1);
  // Two disjoint copies of a non-orientable surface of genus 5.
  CHECK(euler_characteristic(0, 5) == -6);
}

TEST_CASE("error paths") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code;
    }
    return Errc::Usage;
  };
  CHECK(code_of([] { enumerate_strata(0, 2, 0); }) == Errc::DegenerateSpace);
  CHECK(code_of([] { enumerate_strata(1, 3, 3); }) == Errc::CodimOutOfRange);
  CHECK(code_of([] { enumerate_strata(1, 3, -1); }) == Errc::CodimOutOfRange);
  CHECK(code_of([] { chambers(1, 0); }) == Errc::UnsupportedM0);
  CHECK(code_of([] { euler_characteristic(2, 2); }) == Errc::UnsupportedN);
  EnumOptions tiny;
  tiny.cap = 3;
  CHECK(code_of([tiny] { enumerate_strata(1, 4, 1, tiny); }) ==
        Errc::CapExceeded);
}

TEST_CASE("raw enumeration over-generates but covers every stratum") {
  std::set<std::string> raw_keys;
  EnumOptions opts;
  long long raw = 0;
  for_each_raw_tree(0, 4, space_dim(0, 4), opts, [&](const BubbleTree& t) {
    ++raw;
    raw_keys.insert(canonical_key(t));
  });
  long long distinct = 0;
  for (int k = 0; k <= space_dim(0, 4); ++k)
    distinct += static_cast<long long>(enumerate_strata(0, 4, k).size());
  CHECK(raw >= static_cast<long long>(raw_keys.size()));
  CHECK(static_cast<long long>(raw_keys.size()) == distinct);
}
