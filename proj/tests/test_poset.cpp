#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbar/polytopes.hpp"
#include "kbar/poset.hpp"

using namespace kbar;

namespace {

// Hand-built pentagon face poset: 5 vertices, 5 edges, 1 face.
FacePoset pentagon() {
  FacePoset p;
  for (int v = 0; v < 5; ++v) p.elements.push_back({0, "v" + std::to_string(v)});
  for (int e = 0; e < 5; ++e) p.elements.push_back({1, "e" + std::to_string(e)});
  p.elements.push_back({2, "top"});
  for (int e = 0; e < 5; ++e) {
    p.covers.emplace_back(e, 5 + e);            // v_e < e_e
    p.covers.emplace_back((e + 1) % 5, 5 + e);  // v_{e+1} < e_e
    p.covers.emplace_back(5 + e, 10);
  }
  return p;
}

FacePoset square() {
  FacePoset p;
  for (int v = 0; v < 4; ++v) p.elements.push_back({0, "v" + std::to_string(v)});
  for (int e = 0; e < 4; ++e) p.elements.push_back({1, "e" + std::to_string(e)});
  p.elements.push_back({2, "top"});
  for (int e = 0; e < 4; ++e) {
    p.covers.emplace_back(e, 4 + e);
    p.covers.emplace_back((e + 1) % 4, 4 + e);
    p.covers.emplace_back(4 + e, 8);
  }
  return p;
}

}  // namespace

TEST_CASE("gradedness") {
  CHECK(is_graded(pentagon()));

  FacePoset skip;  // cover jumping two ranks
  skip.elements = {{0, "a"}, {2, "b"}};
  skip.covers = {{0, 1}};
  CHECK(!is_graded(skip));

  FacePoset stranded;  // maximal element below the top rank
  stranded.elements = {{0, "a"}, {1, "b"}, {0, "c"}};
  stranded.covers = {{0, 1}};
  CHECK(!is_graded(stranded));
}

TEST_CASE("f-vector") {
  CHECK(poset_f_vector(pentagon()) == std::vector<long long>{5, 5, 1});
  FacePoset skip;
  skip.elements = {{0, "a"}, {2, "b"}};
  skip.covers = {{0, 1}};
  try {
    poset_f_vector(skip);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NotGraded);
  }
}

TEST_CASE("isomorphism") {
  CHECK(poset_isomorphic(pentagon(), pentagon()));
  CHECK(poset_isomorphic(pentagon(), associahedron_poset(4)));
  CHECK(poset_isomorphic(associahedron_poset(4), pentagon()));
  CHECK(!poset_isomorphic(pentagon(), square()));
  CHECK(!poset_isomorphic(square(), pentagon()));
}

TEST_CASE("isomorphism ignores a uniform rank shift") {
  FacePoset shifted = pentagon();
  for (auto& e : shifted.elements) e.rank += 3;
  CHECK(poset_isomorphic(shifted, pentagon()));
}

TEST_CASE("isomorphism size cap") {
  try {
    poset_isomorphic(associahedron_poset(5), associahedron_poset(5), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::CapExceeded);
  }
}

TEST_CASE("exports are deterministic and well-formed") {
  FacePoset p = pentagon();
  std::string dot = to_dot(p);
  CHECK(dot == to_dot(p));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("top") != std::string::npos);

  std::string text = to_text(p);
  CHECK(text == to_text(p));
  CHECK(text.find("rank") != std::string::npos);
}
