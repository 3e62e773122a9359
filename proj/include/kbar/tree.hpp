#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Combinatorial model of the stratification of the compactified moduli
// space Kbar(n,m) of n interior and m boundary particles on a disk.
// Cells are labeled by bubble trees: rooted trees whose nodes are bubbles
// (sphere / flat disk / punctured disk) and whose leaves are particles.
namespace kbar {

enum class Errc {
  BadPath,
  NotFlat,
  IsRoot,
  InvalidTree,
  DegenerateSpace,
  CodimOutOfRange,
  UnsupportedM0,
  UnsupportedN,
  TheoremHypothesis,
  CapExceeded,
  NotAChamber,
  TooSmall,
  NotGraded,
  ParseError,
  Usage,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// Interior item: an interior particle (particle > 0) or a sphere bubble
// (particle == 0, children). Sphere children are an unordered collection;
// canonical form keeps them sorted by encoding.
struct InteriorItem {
  int particle = 0;
  std::vector<InteriorItem> children;

  bool is_particle() const { return particle > 0; }

  static InteriorItem ip(int k) {
    InteriorItem it;
    it.particle = k;
    return it;
  }
  static InteriorItem sphere(std::vector<InteriorItem> ch) {
    InteriorItem it;
    it.children = std::move(ch);
    return it;
  }
};

// Boundary item: a boundary particle (particle > 0) or a disk bubble
// (particle == 0). A disk bubble is FLAT when it has no direct interior
// items, PUNCTURED otherwise; nested bubbles among its boundary items do
// not affect the typing.
struct BoundaryItem {
  int particle = 0;
  std::vector<InteriorItem> interior;
  std::vector<BoundaryItem> boundary;  // linear order (attachment fixes it)

  bool is_particle() const { return particle > 0; }
  bool is_bubble() const { return particle == 0; }
  bool is_flat() const { return is_bubble() && interior.empty(); }

  static BoundaryItem bp(int k) {
    BoundaryItem it;
    it.particle = k;
    return it;
  }
  static BoundaryItem disk(std::vector<InteriorItem> in,
                           std::vector<BoundaryItem> bn) {
    BoundaryItem it;
    it.interior = std::move(in);
    it.boundary = std::move(bn);
    return it;
  }
};

// Root of a bubble tree. rootBoundary is cyclically ordered; rootInterior
// is unordered. Interior particle n is the anchor mu (when n >= 1) and may
// never sit inside a disk bubble.
struct BubbleTree {
  int n = 0;
  int m = 0;
  std::vector<InteriorItem> interior;
  std::vector<BoundaryItem> boundary;
};

// Path step from a node to a child slot. boundary_side selects the boundary
// item vector (root or disk bubble); interior steps descend into the
// interior item vector (root, disk) or sphere children.
struct PathStep {
  bool boundary_side = false;
  int index = 0;
};
using NodePath = std::vector<PathStep>;

enum class Verdict {
  Ok,
  LabelPartition,
  BubbleTooSmall,
  RootUnstable,
  AnchorViolation,
  DegenerateSpace,
};

const char* verdict_name(Verdict v);

struct ValidationResult {
  Verdict verdict = Verdict::Ok;
  std::string detail;
  bool ok() const { return verdict == Verdict::Ok; }
};

// Total: never throws; reports the most specific violated invariant.
ValidationResult validate_tree(const BubbleTree& t);
void require_valid(const BubbleTree& t);  // throws Error(InvalidTree)

int space_dim(int n, int m);  // 2n + m - 3
int codim(const BubbleTree& t);  // number of bubble nodes

struct ModuliFactor {
  enum class Tag { Kbar, Mreal, Ncomplex };
  Tag tag = Tag::Kbar;
  int a = 0;  // Kbar(a,b), Mreal(a), Ncomplex(a)
  int b = 0;

  int dimension() const;
  // Number of top-dimensional tiles: (b-1)! for Kbar, (a-1)!/2 for Mreal,
  // 1 for Ncomplex. Used by the strata/divisor refinement identity.
  long long chamber_count() const;
  std::string str() const;

  friend bool operator==(const ModuliFactor& x, const ModuliFactor& y) {
    return x.tag == y.tag && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const ModuliFactor& x, const ModuliFactor& y) {
    if (x.tag != y.tag) return x.tag < y.tag;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

ModuliFactor kbar_factor(int n, int m);
ModuliFactor mreal_factor(int k);
ModuliFactor ncomplex_factor(int k);

// Sorted multiset: root contributes Kbar(i_r, b_r); sphere with c children
// Ncomplex(c+1); flat disk with b items Mreal(b+1); punctured disk with
// (i,b) direct items Kbar(i, b+1).
std::vector<ModuliFactor> factors(const BubbleTree& t);

// Canonicalization levels. Stratum quotients by flat-bubble flips, root
// rotation, and (n=0) top-level re-rooting; Diagram omits the flips, so it
// identifies exactly the trees that draw the same arc diagram.
//
// For n = 0 the Stratum quotient is additionally refined by the cyclic
// orientation of the labels 1,2,3 in the fully smoothed boundary word:
// Kbar(0,m) falls into two connected copies of the real moduli space,
// distinguished by that orientation, and flip/re-rooting classes that agree
// except for the orientation are distinct strata (one in each copy).
enum class CanonLevel { Stratum, Diagram };

BubbleTree canonicalize(const BubbleTree& t, CanonLevel level = CanonLevel::Stratum);
// Deterministic string encoding of the tree as-is (no normalization).
std::string encode(const BubbleTree& t);
std::string encode(const InteriorItem& it);
std::string encode(const BoundaryItem& it);
std::string canonical_key(const BubbleTree& t, CanonLevel level = CanonLevel::Stratum);

// Reverses the boundary sequence of the flat bubble at path; child
// subtrees are preserved intact.
BubbleTree flip(const BubbleTree& t, const NodePath& path);

// Paths of all bubble nodes (root excluded), in deterministic order.
std::vector<NodePath> bubble_paths(const BubbleTree& t);

// Removes the bubble at path (deletes one arc). Sphere children join the
// parent interior set; a punctured bubble splices in its given orientation;
// a flat bubble splices in both. Results are canonicalized and deduplicated.
std::vector<BubbleTree> merge_bubble(const BubbleTree& t, const NodePath& path);

// Single-orientation merge used for chamber faces: every bubble splices in
// its drawn orientation. Result is not canonicalized.
BubbleTree drawn_merge(const BubbleTree& t, const NodePath& path);

// All canonical codim-1 uppers of the stratum of t: strata reachable by
// removing a single arc, collected across every representative of the
// stratum (not just t itself). Deduplicated, canonicalized at Stratum level.
std::vector<BubbleTree> stratum_uppers(const BubbleTree& t);

struct Stratum {
  BubbleTree canonical;
  int codim = 0;
  int dim = 0;
  std::vector<ModuliFactor> factors;
  std::string key;
};

Stratum make_stratum(const BubbleTree& t);

// Dual partially-planar tree: one vertex per bubble plus the root, leaves
// per particle; spatial edges carry interior attachments (unordered),
// planar edges boundary attachments (ordered).
struct DualTree {
  struct Node {
    enum class Kind { Vertex, InteriorLeaf, BoundaryLeaf };
    Kind kind = Kind::Vertex;
    int label = 0;
    std::vector<Node> spatial;
    std::vector<Node> planar;
  };
  int n = 0;
  int m = 0;
  Node root;
};

DualTree dual_tree(const BubbleTree& t);
BubbleTree from_dual(const DualTree& d);

}  // namespace kbar
