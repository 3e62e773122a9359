#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "kbar/polytopes.hpp"

using namespace kbar;

namespace {

// Independent Catalan oracle: ballot-path counting.
long long ballot_catalan(int k) {
  std::vector<long long> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int step = 0; step < 2 * k; ++step) {
    std::vector<long long> next(row.size(), 0);
    for (std::size_t h = 0; h < row.size(); ++h) {
      if (!row[h]) continue;
      if (h + 1 < row.size()) next[h + 1] += row[h];
      if (h > 0) next[h - 1] += row[h];
    }
    row = std::move(next);
  }
  return row[0];
}

}  // namespace

TEST_CASE("catalan numbers") {
  for (int k = 0; k <= 10; ++k) CHECK(catalan(k) == ballot_catalan(k));
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(5) == 42);
}

TEST_CASE("associahedron K3 is a segment") {
  FacePoset p = associahedron_poset(3);
  CHECK(poset_f_vector(p) == std::vector<long long>{2, 1});
}

TEST_CASE("associahedron K4 is a pentagon") {
  FacePoset p = associahedron_poset(4);
  CHECK(poset_f_vector(p) == std::vector<long long>{5, 5, 1});
  CHECK(is_graded(p));
}

TEST_CASE("associahedron vertex counts are Catalan") {
  for (int n = 2; n <= 7; ++n) {
    FacePoset p = associahedron_poset(n);
    long long v = 0;
    for (const auto& e : p.elements)
      if (e.rank == 0) ++v;
    CHECK(v == ballot_catalan(n - 1));
  }
}

TEST_CASE("every face label is a nested-or-disjoint bracketing") {
  // Recovered structurally: in a graded poset coming from bracketings,
  // each cover removes exactly one bracket, so rank counts brackets.
  FacePoset p = associahedron_poset(5);
  CHECK(is_graded(p));
  std::vector<long long> f = poset_f_vector(p);
  REQUIRE(f.size() == 4);
  // Known f-vector of the 3-dimensional associahedron.
  CHECK(f == std::vector<long long>{14, 21, 9, 1});
}

TEST_CASE("associahedron errors") {
  CHECK_THROWS_AS(associahedron_poset(1), Error);
  CHECK_THROWS_AS(catalan(-1), Error);
}

TEST_CASE("cyclohedron W2 is a self-glued segment") {
  ClosurePoset cp = cyclohedron_poset(2);
  CHECK(poset_f_vector(cp.poset) == std::vector<long long>{2, 1});
  CHECK(cp.self_glued);
}

TEST_CASE("cyclohedron W3 is a hexagon") {
  ClosurePoset cp = cyclohedron_poset(3);
  CHECK(poset_f_vector(cp.poset) == std::vector<long long>{6, 6, 1});
  CHECK(is_graded(cp.poset));
}

TEST_CASE("cyclohedron W4 face counts") {
  ClosurePoset cp = cyclohedron_poset(4);
  // 3-dimensional cyclohedron: 20 vertices, 30 edges, 12 facets.
  CHECK(poset_f_vector(cp.poset) == std::vector<long long>{20, 30, 12, 1});
}

TEST_CASE("hexagon is not an associahedron face poset") {
  CHECK(!poset_isomorphic(cyclohedron_poset(3).poset, associahedron_poset(4)));
}
