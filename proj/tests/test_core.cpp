#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbar/render.hpp"
#include "kbar/serialize.hpp"
#include "kbar/tree.hpp"

using namespace kbar;

namespace {

BubbleTree chamber13() {
  BubbleTree t;
  t.n = 1;
  t.m = 3;
  t.interior = {InteriorItem::ip(1)};
  t.boundary = {BoundaryItem::bp(1), BoundaryItem::bp(2), BoundaryItem::bp(3)};
  return t;
}

// Codim-1 stratum of Kbar(1,3): boundary particles 1 and 2 collide into a
// flat bubble.
BubbleTree flat13() {
  BubbleTree t;
  t.n = 1;
  t.m = 3;
  t.interior = {InteriorItem::ip(1)};
  t.boundary = {BoundaryItem::disk({}, {BoundaryItem::bp(1),
                                        BoundaryItem::bp(2)}),
                BoundaryItem::bp(3)};
  return t;
}

// Codim-1 stratum of Kbar(2,1): both interior particles collide (sphere).
BubbleTree pupil21() {
  BubbleTree t;
  t.n = 2;
  t.m = 1;
  t.interior = {
      InteriorItem::sphere({InteriorItem::ip(1), InteriorItem::ip(2)})};
  t.boundary = {BoundaryItem::bp(1)};
  return t;
}

}  // namespace

TEST_CASE("dimension formula and codimension") {
  CHECK(space_dim(1, 3) == 2);
  CHECK(space_dim(2, 1) == 2);
  CHECK(space_dim(0, 5) == 2);
  CHECK(codim(chamber13()) == 0);
  CHECK(codim(flat13()) == 1);
  CHECK(codim(pupil21()) == 1);
}

TEST_CASE("validation accepts the example strata") {
  CHECK(validate_tree(chamber13()).ok());
  CHECK(validate_tree(flat13()).ok());
  CHECK(validate_tree(pupil21()).ok());
}

TEST_CASE("validation reports the specific violated invariant") {
  SUBCASE("degenerate space") {
    BubbleTree t;
    t.n = 0;
    t.m = 2;
    t.boundary = {BoundaryItem::bp(1), BoundaryItem::bp(2)};
    CHECK(validate_tree(t).verdict == Verdict::DegenerateSpace);
  }
  SUBCASE("label partition") {
    BubbleTree t;
    t.n = 0;
    t.m = 3;
    t.boundary = {BoundaryItem::bp(1), BoundaryItem::bp(1),
                  BoundaryItem::bp(2)};
    CHECK(validate_tree(t).verdict == Verdict::LabelPartition);
  }
  SUBCASE("bubble too small") {
    BubbleTree t;
    t.n = 0;
    t.m = 3;
    t.boundary = {BoundaryItem::disk({}, {BoundaryItem::bp(1)}),
                  BoundaryItem::bp(2), BoundaryItem::bp(3)};
    CHECK(validate_tree(t).verdict == Verdict::BubbleTooSmall);
  }
  SUBCASE("root unstable") {
    BubbleTree t;
    t.n = 0;
    t.m = 3;
    t.boundary = {BoundaryItem::disk(
        {}, {BoundaryItem::bp(1), BoundaryItem::bp(2), BoundaryItem::bp(3)})};
    CHECK(validate_tree(t).verdict == Verdict::RootUnstable);
  }
  SUBCASE("anchor violation: particle n inside a disk bubble") {
    BubbleTree t;
    t.n = 1;
    t.m = 3;
    t.boundary = {
        BoundaryItem::disk({InteriorItem::ip(1)}, {BoundaryItem::bp(1)}),
        BoundaryItem::bp(2), BoundaryItem::bp(3)};
    CHECK(validate_tree(t).verdict == Verdict::AnchorViolation);
  }
  SUBCASE("sphere with one child is too small") {
    BubbleTree t;
    t.n = 1;
    t.m = 2;
    t.interior = {InteriorItem::sphere({InteriorItem::ip(1)})};
    t.boundary = {BoundaryItem::bp(1), BoundaryItem::bp(2)};
    CHECK(validate_tree(t).verdict == Verdict::BubbleTooSmall);
  }
}

TEST_CASE("factors of the example strata") {
  CHECK(factors(chamber13()) == std::vector<ModuliFactor>{kbar_factor(1, 3)});
  // Flat bubble with 2 items -> Mreal(3), a point; root keeps Kbar(1,2).
  CHECK(factors(flat13()) ==
        std::vector<ModuliFactor>{kbar_factor(1, 2), mreal_factor(3)});
  // Sphere with 2 children -> Ncomplex(3); root keeps Kbar(1,1).
  CHECK(factors(pupil21()) ==
        std::vector<ModuliFactor>{kbar_factor(1, 1), ncomplex_factor(3)});
}

TEST_CASE("factor dimensions and chamber counts") {
  CHECK(kbar_factor(1, 3).dimension() == 2);
  CHECK(mreal_factor(3).dimension() == 0);
  CHECK(mreal_factor(5).dimension() == 2);
  CHECK(ncomplex_factor(3).dimension() == 1);
  CHECK(kbar_factor(1, 3).chamber_count() == 2);
  CHECK(mreal_factor(5).chamber_count() == 12);
  CHECK(ncomplex_factor(4).chamber_count() == 1);
}

TEST_CASE("flip is an involution on flat bubbles") {
  BubbleTree t = flat13();
  NodePath p = {{true, 0}};
  BubbleTree once = flip(t, p);
  CHECK(once.boundary[0].boundary[0].particle == 2);
  CHECK(once.boundary[0].boundary[1].particle == 1);
  CHECK(encode(flip(once, p)) == encode(t));
}

TEST_CASE("flip errors") {
  BubbleTree t = flat13();
  CHECK_THROWS_WITH_AS(flip(t, {{true, 5}}), doctest::Contains("BadPath"),
                       Error);
  CHECK_THROWS_AS(flip(t, {}), Error);  // root is not flippable
  // Punctured bubble of Kbar(2,2): interior particle 1 enters the bubble.
  BubbleTree u;
  u.n = 2;
  u.m = 2;
  u.interior = {InteriorItem::ip(2)};
  u.boundary = {
      BoundaryItem::disk({InteriorItem::ip(1)}, {BoundaryItem::bp(1)}),
      BoundaryItem::bp(2)};
  REQUIRE(validate_tree(u).ok());
  try {
    flip(u, {{true, 0}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NotFlat);
  }
}

TEST_CASE("canonical form is invariant under root rotation") {
  BubbleTree t = chamber13();
  BubbleTree r = t;
  std::rotate(r.boundary.begin(), r.boundary.begin() + 1, r.boundary.end());
  CHECK(canonical_key(t) == canonical_key(r));
  CHECK(canonical_key(t, CanonLevel::Diagram) ==
        canonical_key(r, CanonLevel::Diagram));
}

TEST_CASE("stratum level identifies flips; diagram level keeps them apart") {
  BubbleTree t = flat13();
  BubbleTree f = flip(t, {{true, 0}});
  CHECK(canonical_key(t) == canonical_key(f));
  CHECK(canonical_key(t, CanonLevel::Diagram) !=
        canonical_key(f, CanonLevel::Diagram));
}

TEST_CASE("canonicalization is idempotent") {
  for (const BubbleTree& t : {chamber13(), flat13(), pupil21()}) {
    BubbleTree c = canonicalize(t);
    CHECK(encode(canonicalize(c)) == encode(c));
    CHECK(canonical_key(c) == canonical_key(t));
  }
}

TEST_CASE("merging the flat bubble of Kbar(1,3) reaches both chambers") {
  auto merged = merge_bubble(flat13(), {{true, 0}});
  REQUIRE(merged.size() == 2);
  CHECK(codim(merged[0]) == 0);
  CHECK(codim(merged[1]) == 0);
  CHECK(canonical_key(merged[0]) != canonical_key(merged[1]));
}

TEST_CASE("merging a sphere returns the children to the parent") {
  auto merged = merge_bubble(pupil21(), {{false, 0}});
  REQUIRE(merged.size() == 1);
  CHECK(codim(merged[0]) == 0);
  CHECK(merged[0].interior.size() == 2);
}

TEST_CASE("drawn_merge keeps the drawn orientation") {
  BubbleTree t = flat13();
  BubbleTree up = drawn_merge(t, {{true, 0}});
  CHECK(codim(up) == 0);
  REQUIRE(up.boundary.size() == 3);
  CHECK(up.boundary[0].particle == 1);
  CHECK(up.boundary[1].particle == 2);
  CHECK(up.boundary[2].particle == 3);
}

TEST_CASE("bubble_paths lists every bubble exactly once") {
  CHECK(bubble_paths(chamber13()).empty());
  CHECK(bubble_paths(flat13()).size() == 1);
  CHECK(bubble_paths(pupil21()).size() == 1);
  // Nested: flat bubble inside a punctured bubble.
  BubbleTree t;
  t.n = 2;
  t.m = 2;
  t.interior = {InteriorItem::ip(2)};
  t.boundary = {
      BoundaryItem::disk({InteriorItem::ip(1)},
                         {BoundaryItem::disk({}, {BoundaryItem::bp(1),
                                                  BoundaryItem::bp(2)})}),
      };
  REQUIRE(validate_tree(t).ok());
  CHECK(bubble_paths(t).size() == 2);
}

TEST_CASE("make_stratum fills codim, dim, factors and key") {
  Stratum s = make_stratum(flat13());
  CHECK(s.codim == 1);
  CHECK(s.dim == 1);
  CHECK(s.factors.size() == 2);
  CHECK(s.key == canonical_key(flat13()));
}

TEST_CASE("dual tree round trip") {
  for (const BubbleTree& t : {chamber13(), flat13(), pupil21()}) {
    DualTree d = dual_tree(t);
    CHECK(d.n == t.n);
    CHECK(d.m == t.m);
    CHECK(encode(from_dual(d)) == encode(t));
  }
}

TEST_CASE("json round trip") {
  for (const BubbleTree& t : {chamber13(), flat13(), pupil21()}) {
    nlohmann::json j = tree_to_json(t);
    CHECK(encode(tree_from_json(j)) == encode(t));
    CHECK(encode(tree_from_string(j.dump())) == encode(t));
    nlohmann::json dj = dual_to_json(dual_tree(t));
    CHECK(encode(from_dual(dual_from_json(dj))) == encode(t));
  }
}

TEST_CASE("rendering is deterministic and well-formed") {
  for (const BubbleTree& t : {chamber13(), flat13(), pupil21()}) {
    std::string svg = render_disk_svg(t);
    CHECK(svg == render_disk_svg(t));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::string dot = render_dual_dot(t);
    CHECK(dot == render_dual_dot(t));
    CHECK(dot.find("graph") != std::string::npos);
  }
}

TEST_CASE("json parse errors") {
  auto code_of = [](const std::string& s) {
    try {
      tree_from_string(s);
    } catch (const Error& e) {
      return e.code;
    }
    return Errc::Usage;
  };
  CHECK(code_of("{") == Errc::ParseError);
  CHECK(code_of("[]") == Errc::ParseError);
  CHECK(code_of(R"({"n":1,"m":1})") == Errc::ParseError);
  CHECK(code_of(R"({"n":1,"m":1,"root":{"interior":[{"xp":1}],"boundary":[{"bp":1}]}})") ==
        Errc::ParseError);
}
