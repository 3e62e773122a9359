#include "kbar/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kbar {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadPath: return "BadPath";
    case Errc::NotFlat: return "NotFlat";
    case Errc::IsRoot: return "IsRoot";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::DegenerateSpace: return "DegenerateSpace";
    case Errc::CodimOutOfRange: return "CodimOutOfRange";
    case Errc::UnsupportedM0: return "UnsupportedM0";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::TheoremHypothesis: return "TheoremHypothesis";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotAChamber: return "NotAChamber";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotGraded: return "NotGraded";
    case Errc::ParseError: return "ParseError";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "Ok";
    case Verdict::LabelPartition: return "LabelPartition";
    case Verdict::BubbleTooSmall: return "BubbleTooSmall";
    case Verdict::RootUnstable: return "RootUnstable";
    case Verdict::AnchorViolation: return "AnchorViolation";
    case Verdict::DegenerateSpace: return "DegenerateSpace";
  }
  return "Unknown";
}

int space_dim(int n, int m) { return 2 * n + m - 3; }

// ---------------------------------------------------------------------------
// Validation

namespace {

void collect_labels(const InteriorItem& it, std::vector<int>& interior) {
  if (it.is_particle()) {
    interior.push_back(it.particle);
    return;
  }
  for (const auto& c : it.children) collect_labels(c, interior);
}

void collect_labels(const BoundaryItem& it, std::vector<int>& interior,
                    std::vector<int>& boundary) {
  if (it.is_particle()) {
    boundary.push_back(it.particle);
    return;
  }
  for (const auto& c : it.interior) collect_labels(c, interior);
  for (const auto& c : it.boundary) collect_labels(c, interior, boundary);
}

bool contains_interior_label(const InteriorItem& it, int label) {
  if (it.is_particle()) return it.particle == label;
  for (const auto& c : it.children)
    if (contains_interior_label(c, label)) return true;
  return false;
}

bool contains_interior_label(const BoundaryItem& it, int label) {
  if (it.is_particle()) return false;
  for (const auto& c : it.interior)
    if (contains_interior_label(c, label)) return true;
  for (const auto& c : it.boundary)
    if (contains_interior_label(c, label)) return true;
  return false;
}

ValidationResult check_sizes(const InteriorItem& it) {
  if (it.is_particle()) return {};
  if (it.children.size() < 2)
    return {Verdict::BubbleTooSmall,
            "sphere bubble with " + std::to_string(it.children.size()) +
                " children"};
  for (const auto& c : it.children) {
    auto r = check_sizes(c);
    if (!r.ok()) return r;
  }
  return {};
}

ValidationResult check_sizes(const BoundaryItem& it) {
  if (it.is_particle()) return {};
  int stab = 2 * static_cast<int>(it.interior.size()) +
             static_cast<int>(it.boundary.size());
  if (stab < 2)
    return {Verdict::BubbleTooSmall,
            "disk bubble with 2i+b = " + std::to_string(stab)};
  for (const auto& c : it.interior) {
    auto r = check_sizes(c);
    if (!r.ok()) return r;
  }
  for (const auto& c : it.boundary) {
    auto r = check_sizes(c);
    if (!r.ok()) return r;
  }
  return {};
}

}  // namespace

ValidationResult validate_tree(const BubbleTree& t) {
  if (t.n < 0 || t.m < 0 || 2 * t.n + t.m < 3)
    return {Verdict::DegenerateSpace,
            "2n+m = " + std::to_string(2 * t.n + t.m) + " < 3"};

  std::vector<int> in, bn;
  for (const auto& it : t.interior) collect_labels(it, in);
  for (const auto& it : t.boundary) collect_labels(it, in, bn);
  std::sort(in.begin(), in.end());
  std::sort(bn.begin(), bn.end());
  auto expect = [](int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return v;
  };
  if (in != expect(t.n))
    return {Verdict::LabelPartition, "interior labels are not exactly 1.." +
                                         std::to_string(t.n)};
  if (bn != expect(t.m))
    return {Verdict::LabelPartition, "boundary labels are not exactly 1.." +
                                         std::to_string(t.m)};

  for (const auto& it : t.interior) {
    auto r = check_sizes(it);
    if (!r.ok()) return r;
  }
  for (const auto& it : t.boundary) {
    auto r = check_sizes(it);
    if (!r.ok()) return r;
  }

  int root_stab = 2 * static_cast<int>(t.interior.size()) +
                  static_cast<int>(t.boundary.size());
  if (root_stab < 3)
    return {Verdict::RootUnstable, "root has 2i+b = " + std::to_string(root_stab)};

  // mu = interior particle n must never lie inside a disk bubble subtree.
  if (t.n >= 1) {
    for (const auto& it : t.boundary) {
      if (contains_interior_label(it, t.n))
        return {Verdict::AnchorViolation,
                "interior particle " + std::to_string(t.n) +
                    " lies inside a disk bubble"};
    }
  }
  return {};
}

void require_valid(const BubbleTree& t) {
  auto r = validate_tree(t);
  if (!r.ok())
    throw Error(Errc::InvalidTree,
                std::string(verdict_name(r.verdict)) + " (" + r.detail + ")");
}

// ---------------------------------------------------------------------------
// codim, factors

namespace {

int count_bubbles(const InteriorItem& it) {
  if (it.is_particle()) return 0;
  int c = 1;
  for (const auto& ch : it.children) c += count_bubbles(ch);
  return c;
}

int count_bubbles(const BoundaryItem& it) {
  if (it.is_particle()) return 0;
  int c = 1;
  for (const auto& ch : it.interior) c += count_bubbles(ch);
  for (const auto& ch : it.boundary) c += count_bubbles(ch);
  return c;
}

}  // namespace

int codim(const BubbleTree& t) {
  int c = 0;
  for (const auto& it : t.interior) c += count_bubbles(it);
  for (const auto& it : t.boundary) c += count_bubbles(it);
  return c;
}

int ModuliFactor::dimension() const {
  switch (tag) {
    case Tag::Kbar: return 2 * a + b - 3;
    case Tag::Mreal: return a - 3;
    case Tag::Ncomplex: return 2 * a - 5;
  }
  return 0;
}

long long ModuliFactor::chamber_count() const {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (tag) {
    case Tag::Kbar: return fact(b - 1);
    case Tag::Mreal: return fact(a - 1) / 2;
    case Tag::Ncomplex: return 1;
  }
  return 1;
}

std::string ModuliFactor::str() const {
  switch (tag) {
    case Tag::Kbar:
      return "Kbar(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Tag::Mreal: return "Mreal(" + std::to_string(a) + ")";
    case Tag::Ncomplex: return "Ncomplex(" + std::to_string(a) + ")";
  }
  return "?";
}

ModuliFactor kbar_factor(int n, int m) {
  if (2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "Kbar factor with 2n+m < 3");
  return {ModuliFactor::Tag::Kbar, n, m};
}

ModuliFactor mreal_factor(int k) {
  if (k < 3) throw Error(Errc::TooSmall, "Mreal factor with k < 3");
  return {ModuliFactor::Tag::Mreal, k, 0};
}

ModuliFactor ncomplex_factor(int k) {
  if (k < 3) throw Error(Errc::TooSmall, "Ncomplex factor with k < 3");
  return {ModuliFactor::Tag::Ncomplex, k, 0};
}

namespace {

void collect_factors(const InteriorItem& it, std::vector<ModuliFactor>& out) {
  if (it.is_particle()) return;
  out.push_back(ncomplex_factor(static_cast<int>(it.children.size()) + 1));
  for (const auto& c : it.children) collect_factors(c, out);
}

void collect_factors(const BoundaryItem& it, std::vector<ModuliFactor>& out) {
  if (it.is_particle()) return;
  int i = static_cast<int>(it.interior.size());
  int b = static_cast<int>(it.boundary.size());
  if (i == 0)
    out.push_back(mreal_factor(b + 1));
  else
    out.push_back(kbar_factor(i, b + 1));
  for (const auto& c : it.interior) collect_factors(c, out);
  for (const auto& c : it.boundary) collect_factors(c, out);
}

}  // namespace

std::vector<ModuliFactor> factors(const BubbleTree& t) {
  require_valid(t);
  std::vector<ModuliFactor> out;
  out.push_back(kbar_factor(static_cast<int>(t.interior.size()),
                            static_cast<int>(t.boundary.size())));
  for (const auto& it : t.interior) collect_factors(it, out);
  for (const auto& it : t.boundary) collect_factors(it, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Encoding and canonicalization

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

std::string enc_int(const InteriorItem& it) {
  if (it.is_particle()) return "i" + std::to_string(it.particle);
  std::vector<std::string> cs;
  cs.reserve(it.children.size());
  for (const auto& c : it.children) cs.push_back(enc_int(c));
  return "S(" + join(cs) + ")";
}

std::string enc_bnd(const BoundaryItem& it) {
  if (it.is_particle()) return "b" + std::to_string(it.particle);
  std::vector<std::string> is, bs;
  for (const auto& c : it.interior) is.push_back(enc_int(c));
  for (const auto& c : it.boundary) bs.push_back(enc_bnd(c));
  return "D(" + join(is) + "|" + join(bs) + ")";
}

// Bottom-up normalization: sorts unordered collections and (when flips is
// set) orients every flat bubble to its lexicographically least direction.
std::string normalize_int(InteriorItem& it, bool flips);
std::string normalize_bnd(BoundaryItem& it, bool flips);

std::string normalize_int(InteriorItem& it, bool flips) {
  if (it.is_particle()) return "i" + std::to_string(it.particle);
  std::vector<std::pair<std::string, InteriorItem>> cs;
  cs.reserve(it.children.size());
  for (auto& c : it.children) {
    std::string e = normalize_int(c, flips);
    cs.emplace_back(std::move(e), std::move(c));
  }
  std::sort(cs.begin(), cs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  it.children.clear();
  std::vector<std::string> es;
  for (auto& [e, c] : cs) {
    es.push_back(e);
    it.children.push_back(std::move(c));
  }
  return "S(" + join(es) + ")";
}

std::string normalize_bnd(BoundaryItem& it, bool flips) {
  if (it.is_particle()) return "b" + std::to_string(it.particle);
  std::vector<std::pair<std::string, InteriorItem>> is;
  for (auto& c : it.interior) {
    std::string e = normalize_int(c, flips);
    is.emplace_back(std::move(e), std::move(c));
  }
  std::sort(is.begin(), is.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  it.interior.clear();
  std::vector<std::string> ies;
  for (auto& [e, c] : is) {
    ies.push_back(e);
    it.interior.push_back(std::move(c));
  }
  std::vector<std::string> bes;
  for (auto& c : it.boundary) bes.push_back(normalize_bnd(c, flips));
  if (flips && it.interior.empty()) {
    std::vector<std::string> rev(bes.rbegin(), bes.rend());
    if (join(rev) < join(bes)) {
      std::reverse(it.boundary.begin(), it.boundary.end());
      bes = std::move(rev);
    }
  }
  return "D(" + join(ies) + "|" + join(bes) + ")";
}

// Rotates the root boundary sequence to its lexicographically least
// rotation; items must already be normalized.
void normalize_root_rotation(BubbleTree& t) {
  std::size_t k = t.boundary.size();
  if (k < 2) return;
  std::vector<std::string> es;
  es.reserve(k);
  for (const auto& it : t.boundary) es.push_back(enc_bnd(it));
  std::size_t best = 0;
  std::string best_s;
  for (std::size_t r = 0; r < k; ++r) {
    std::string s;
    for (std::size_t j = 0; j < k; ++j) s += es[(r + j) % k] + ",";
    if (r == 0 || s < best_s) {
      best_s = std::move(s);
      best = r;
    }
  }
  if (best != 0)
    std::rotate(t.boundary.begin(), t.boundary.begin() + best, t.boundary.end());
}

std::string encode_normalized(const BubbleTree& t) {
  std::vector<std::string> is, bs;
  for (const auto& it : t.interior) is.push_back(enc_int(it));
  for (const auto& it : t.boundary) bs.push_back(enc_bnd(it));
  return "K" + std::to_string(t.n) + "," + std::to_string(t.m) + "(" +
         join(is) + "|" + join(bs) + ")";
}

BubbleTree normalize(const BubbleTree& tree, bool flips) {
  BubbleTree t = tree;
  std::vector<std::pair<std::string, InteriorItem>> is;
  for (auto& c : t.interior) {
    std::string e = normalize_int(c, flips);
    is.emplace_back(std::move(e), std::move(c));
  }
  std::sort(is.begin(), is.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  t.interior.clear();
  for (auto& [e, c] : is) t.interior.push_back(std::move(c));
  for (auto& c : t.boundary) normalize_bnd(c, flips);
  normalize_root_rotation(t);
  return t;
}

// n=0 top-level re-rooting: flat bubble F = boundary[j] becomes the new
// outer region; the remaining root items are wrapped into a flat bubble F'
// appended after F's contents. reverse_f flips F before re-rooting (only
// meaningful at stratum level).
bool reroot(const BubbleTree& t, std::size_t j, bool reverse_f, BubbleTree& out) {
  const BoundaryItem& f = t.boundary[j];
  if (!f.is_flat()) return false;
  std::size_t k = t.boundary.size();
  if (k < 3 || f.boundary.size() < 2) return false;  // stability
  out.n = t.n;
  out.m = t.m;
  out.interior.clear();
  out.boundary.clear();
  if (reverse_f)
    out.boundary.assign(f.boundary.rbegin(), f.boundary.rend());
  else
    out.boundary = f.boundary;
  BoundaryItem fp;
  for (std::size_t d = 1; d < k; ++d)
    fp.boundary.push_back(t.boundary[(j + d) % k]);
  out.boundary.push_back(std::move(fp));
  return true;
}

// Smoothed boundary word: the boundary particle labels read in the drawn
// cyclic order, i.e. the chamber reached by contracting every arc in its
// drawn orientation.
void append_word(const BoundaryItem& it, std::vector<int>& w) {
  if (it.is_particle()) {
    w.push_back(it.particle);
    return;
  }
  for (const auto& c : it.boundary) append_word(c, w);
}

std::vector<int> boundary_word(const BubbleTree& t) {
  std::vector<int> w;
  for (const auto& it : t.boundary) append_word(it, w);
  return w;
}

// Orientation class of an n = 0 tree: true when the labels 1,2,3 occur in
// that cyclic order in the smoothed boundary word. This is invariant under
// root rotation and re-rooting (both preserve the word up to rotation) but
// not under flips, and it separates the two copies of the real moduli
// space that make up Kbar(0,m).
bool orientation_bit(const BubbleTree& t) {
  std::vector<int> w = boundary_word(t);
  std::size_t p1 = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 1) p1 = i;
  for (std::size_t d = 1; d < w.size(); ++d) {
    int label = w[(p1 + d) % w.size()];
    if (label == 2) return true;
    if (label == 3) return false;
  }
  return true;  // unreachable for valid n = 0 trees (m >= 3)
}

}  // namespace

std::string encode(const InteriorItem& it) { return enc_int(it); }
std::string encode(const BoundaryItem& it) { return enc_bnd(it); }
std::string encode(const BubbleTree& t) { return encode_normalized(t); }

namespace {

// n = 0 orbit under single flips and top-level re-rooting, with every
// member stored rotation-normalized (flips stay explicit generators so
// that the orientation classes remain distinguishable). Keys are the
// normalized encodings.
std::map<std::string, BubbleTree> rerooting_orbit(const BubbleTree& start,
                                                  bool flips) {
  std::map<std::string, BubbleTree> seen;
  BubbleTree first = normalize(start, false);
  std::vector<BubbleTree> queue{first};
  seen.emplace(encode_normalized(first), std::move(first));
  while (!queue.empty()) {
    BubbleTree cur = std::move(queue.back());
    queue.pop_back();
    std::vector<BubbleTree> nexts;
    if (flips)
      for (const NodePath& path : bubble_paths(cur))
        nexts.push_back(flip(cur, path));
    for (std::size_t j = 0; j < cur.boundary.size(); ++j) {
      if (!cur.boundary[j].is_flat()) continue;
      BubbleTree next;
      if (!reroot(cur, j, false, next)) continue;
      if (!validate_tree(next).ok()) continue;
      nexts.push_back(std::move(next));
    }
    for (BubbleTree& next : nexts) {
      BubbleTree norm = normalize(next, false);
      std::string key = encode_normalized(norm);
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), norm);
      queue.push_back(std::move(norm));
    }
  }
  return seen;
}

}  // namespace

BubbleTree canonicalize(const BubbleTree& tree, CanonLevel level) {
  require_valid(tree);
  bool flips = level == CanonLevel::Stratum;
  if (tree.n != 0) return normalize(tree, flips);

  // n = 0: least representative of the flip/re-rooting orbit; at Stratum
  // level restricted to the input's orientation class, which refines the
  // orbit into the two copies of the real moduli space.
  bool bit = flips && orientation_bit(tree);
  std::map<std::string, BubbleTree> orbit = rerooting_orbit(tree, flips);
  for (auto& [key, rep] : orbit)
    if (!flips || orientation_bit(rep) == bit) return std::move(rep);
  throw Error(Errc::InvalidTree, "empty canonicalization orbit");
}

std::string canonical_key(const BubbleTree& t, CanonLevel level) {
  return encode_normalized(canonicalize(t, level));
}

// ---------------------------------------------------------------------------
// Paths, flip, merge

namespace {

void paths_int(const InteriorItem& it, NodePath& cur, std::vector<NodePath>& out) {
  if (it.is_particle()) return;
  out.push_back(cur);
  for (std::size_t i = 0; i < it.children.size(); ++i) {
    cur.push_back({false, static_cast<int>(i)});
    paths_int(it.children[i], cur, out);
    cur.pop_back();
  }
}

void paths_bnd(const BoundaryItem& it, NodePath& cur, std::vector<NodePath>& out) {
  if (it.is_particle()) return;
  out.push_back(cur);
  for (std::size_t i = 0; i < it.interior.size(); ++i) {
    cur.push_back({false, static_cast<int>(i)});
    paths_int(it.interior[i], cur, out);
    cur.pop_back();
  }
  for (std::size_t i = 0; i < it.boundary.size(); ++i) {
    cur.push_back({true, static_cast<int>(i)});
    paths_bnd(it.boundary[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<NodePath> bubble_paths(const BubbleTree& t) {
  std::vector<NodePath> out;
  NodePath cur;
  for (std::size_t i = 0; i < t.interior.size(); ++i) {
    cur.push_back({false, static_cast<int>(i)});
    paths_int(t.interior[i], cur, out);
    cur.pop_back();
  }
  for (std::size_t i = 0; i < t.boundary.size(); ++i) {
    cur.push_back({true, static_cast<int>(i)});
    paths_bnd(t.boundary[i], cur, out);
    cur.pop_back();
  }
  return out;
}

namespace {

// Resolves a path to the addressed boundary item, if it is one.
BoundaryItem* resolve_boundary(BubbleTree& t, const NodePath& path) {
  if (path.empty()) return nullptr;
  std::vector<InteriorItem>* icur = &t.interior;
  std::vector<BoundaryItem>* bcur = &t.boundary;
  BoundaryItem* node = nullptr;
  for (std::size_t s = 0; s < path.size(); ++s) {
    const PathStep& st = path[s];
    if (st.boundary_side) {
      if (!bcur || st.index < 0 || st.index >= static_cast<int>(bcur->size()))
        return nullptr;
      node = &(*bcur)[st.index];
      if (node->is_particle()) return s + 1 == path.size() ? nullptr : nullptr;
      icur = &node->interior;
      bcur = &node->boundary;
    } else {
      if (!icur || st.index < 0 || st.index >= static_cast<int>(icur->size()))
        return nullptr;
      InteriorItem* in = &(*icur)[st.index];
      if (s + 1 == path.size()) return nullptr;  // addresses an interior item
      if (in->is_particle()) return nullptr;
      icur = &in->children;
      bcur = nullptr;
      node = nullptr;
    }
  }
  return node;
}

}  // namespace

BubbleTree flip(const BubbleTree& tree, const NodePath& path) {
  require_valid(tree);
  BubbleTree t = tree;
  if (path.empty()) throw Error(Errc::NotFlat, "root is not flippable");
  if (!path.back().boundary_side)
    throw Error(Errc::NotFlat, "path addresses an interior item");
  BoundaryItem* node = resolve_boundary(t, path);
  if (!node) throw Error(Errc::BadPath, "path does not address a disk bubble");
  if (!node->is_flat())
    throw Error(Errc::NotFlat, "bubble has direct interior children");
  std::reverse(node->boundary.begin(), node->boundary.end());
  return t;
}

namespace {

// Merge of the bubble addressed by `path` within an interior item forest /
// boundary item context. Returns every raw splice variant of the whole tree.
//
// General shape: walk down to the parent of the target, rebuild with the
// target removed and its content spliced in.

struct MergeVariants {
  std::vector<BubbleTree> trees;
};

void splice_disk(std::vector<InteriorItem>& parent_interior,
                 std::vector<BoundaryItem>& parent_boundary, std::size_t pos,
                 bool reversed) {
  BoundaryItem target = std::move(parent_boundary[pos]);
  parent_boundary.erase(parent_boundary.begin() + pos);
  for (auto& c : target.interior) parent_interior.push_back(std::move(c));
  std::vector<BoundaryItem> items = std::move(target.boundary);
  if (reversed) std::reverse(items.begin(), items.end());
  parent_boundary.insert(parent_boundary.begin() + pos,
                         std::make_move_iterator(items.begin()),
                         std::make_move_iterator(items.end()));
}

void splice_sphere(std::vector<InteriorItem>& container, std::size_t pos) {
  InteriorItem target = std::move(container[pos]);
  container.erase(container.begin() + pos);
  for (auto& c : target.children) container.push_back(std::move(c));
}

// Applies the merge inside a copy of the tree. orientations: 0 = as given,
// 1 = reversed (flat disks only).
BubbleTree merge_in_copy(const BubbleTree& tree, const NodePath& path,
                         bool reversed) {
  BubbleTree t = tree;
  std::vector<InteriorItem>* icur = &t.interior;
  std::vector<BoundaryItem>* bcur = &t.boundary;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const PathStep& st = path[s];
    if (st.boundary_side) {
      if (!bcur || st.index >= static_cast<int>(bcur->size()))
        throw Error(Errc::BadPath, "step out of range");
      BoundaryItem& node = (*bcur)[st.index];
      if (node.is_particle()) throw Error(Errc::BadPath, "step into a particle");
      icur = &node.interior;
      bcur = &node.boundary;
    } else {
      if (!icur || st.index >= static_cast<int>(icur->size()))
        throw Error(Errc::BadPath, "step out of range");
      InteriorItem& node = (*icur)[st.index];
      if (node.is_particle()) throw Error(Errc::BadPath, "step into a particle");
      icur = &node.children;
      bcur = nullptr;
    }
  }
  const PathStep& last = path.back();
  if (last.boundary_side) {
    if (!bcur || last.index >= static_cast<int>(bcur->size()))
      throw Error(Errc::BadPath, "final step out of range");
    BoundaryItem& node = (*bcur)[last.index];
    if (!node.is_bubble()) throw Error(Errc::BadPath, "target is a particle");
    if (!icur) throw Error(Errc::BadPath, "disk bubble without a disk parent");
    splice_disk(*icur, *bcur, static_cast<std::size_t>(last.index), reversed);
  } else {
    if (!icur || last.index >= static_cast<int>(icur->size()))
      throw Error(Errc::BadPath, "final step out of range");
    InteriorItem& node = (*icur)[last.index];
    if (node.is_particle()) throw Error(Errc::BadPath, "target is a particle");
    if (reversed) throw Error(Errc::BadPath, "sphere merge has no orientation");
    splice_sphere(*icur, static_cast<std::size_t>(last.index));
  }
  return t;
}

const BoundaryItem* peek_boundary(const BubbleTree& t, const NodePath& path) {
  return resolve_boundary(const_cast<BubbleTree&>(t), path);
}

}  // namespace

std::vector<BubbleTree> merge_bubble(const BubbleTree& tree, const NodePath& path) {
  require_valid(tree);
  if (path.empty()) throw Error(Errc::IsRoot, "cannot merge the root");
  bool flat = false;
  if (path.back().boundary_side) {
    const BoundaryItem* node = peek_boundary(tree, path);
    if (!node) throw Error(Errc::BadPath, "path does not address a bubble");
    flat = node->is_flat();
  }
  std::vector<BubbleTree> out;
  std::set<std::string> keys;
  int orientations = flat ? 2 : 1;
  for (int o = 0; o < orientations; ++o) {
    BubbleTree merged = merge_in_copy(tree, path, o == 1);
    require_valid(merged);
    // n = 0: only merges that stay in the tree's orientation class lie in
    // the closure relation of its stratum.
    if (tree.n == 0 && orientation_bit(merged) != orientation_bit(tree))
      continue;
    BubbleTree canon = canonicalize(merged, CanonLevel::Stratum);
    std::string key = encode_normalized(canon);
    if (keys.insert(key).second) out.push_back(std::move(canon));
  }
  return out;
}

BubbleTree drawn_merge(const BubbleTree& tree, const NodePath& path) {
  if (path.empty()) throw Error(Errc::IsRoot, "cannot merge the root");
  return merge_in_copy(tree, path, false);
}

std::vector<BubbleTree> stratum_uppers(const BubbleTree& tree) {
  require_valid(tree);
  std::vector<BubbleTree> out;
  std::set<std::string> keys;
  auto add = [&](BubbleTree canon) {
    std::string key = encode_normalized(canon);
    if (keys.insert(key).second) out.push_back(std::move(canon));
  };
  if (tree.n != 0) {
    for (const NodePath& path : bubble_paths(tree))
      for (BubbleTree& up : merge_bubble(tree, path)) add(std::move(up));
    return out;
  }
  // n = 0: uppers reachable from any representative of the stratum. Drawn
  // merges preserve the smoothed word, hence the orientation class, so
  // restricting to representatives in the input's class suffices.
  bool bit = orientation_bit(tree);
  for (const auto& [key, rep] : rerooting_orbit(tree, true)) {
    if (orientation_bit(rep) != bit) continue;
    for (const NodePath& path : bubble_paths(rep))
      add(canonicalize(drawn_merge(rep, path), CanonLevel::Stratum));
  }
  return out;
}

Stratum make_stratum(const BubbleTree& t) {
  Stratum s;
  s.canonical = canonicalize(t, CanonLevel::Stratum);
  s.codim = codim(s.canonical);
  s.dim = space_dim(s.canonical.n, s.canonical.m) - s.codim;
  s.factors = factors(s.canonical);
  s.key = encode(s.canonical);
  return s;
}

// ---------------------------------------------------------------------------
// Dual partially-planar trees

namespace {

DualTree::Node dual_int(const InteriorItem& it) {
  DualTree::Node n;
  if (it.is_particle()) {
    n.kind = DualTree::Node::Kind::InteriorLeaf;
    n.label = it.particle;
    return n;
  }
  n.kind = DualTree::Node::Kind::Vertex;
  for (const auto& c : it.children) n.spatial.push_back(dual_int(c));
  return n;
}

DualTree::Node dual_bnd(const BoundaryItem& it) {
  DualTree::Node n;
  if (it.is_particle()) {
    n.kind = DualTree::Node::Kind::BoundaryLeaf;
    n.label = it.particle;
    return n;
  }
  n.kind = DualTree::Node::Kind::Vertex;
  for (const auto& c : it.interior) n.spatial.push_back(dual_int(c));
  for (const auto& c : it.boundary) n.planar.push_back(dual_bnd(c));
  return n;
}

InteriorItem undual_int(const DualTree::Node& n) {
  if (n.kind == DualTree::Node::Kind::InteriorLeaf)
    return InteriorItem::ip(n.label);
  if (n.kind != DualTree::Node::Kind::Vertex || !n.planar.empty())
    throw Error(Errc::ParseError, "spatial edge must lead to a leaf or sphere");
  std::vector<InteriorItem> ch;
  for (const auto& c : n.spatial) ch.push_back(undual_int(c));
  return InteriorItem::sphere(std::move(ch));
}

BoundaryItem undual_bnd(const DualTree::Node& n) {
  if (n.kind == DualTree::Node::Kind::BoundaryLeaf)
    return BoundaryItem::bp(n.label);
  if (n.kind != DualTree::Node::Kind::Vertex)
    throw Error(Errc::ParseError, "planar edge must lead to a leaf or disk");
  std::vector<InteriorItem> in;
  std::vector<BoundaryItem> bn;
  for (const auto& c : n.spatial) in.push_back(undual_int(c));
  for (const auto& c : n.planar) bn.push_back(undual_bnd(c));
  return BoundaryItem::disk(std::move(in), std::move(bn));
}

}  // namespace

DualTree dual_tree(const BubbleTree& t) {
  require_valid(t);
  DualTree d;
  d.n = t.n;
  d.m = t.m;
  d.root.kind = DualTree::Node::Kind::Vertex;
  for (const auto& c : t.interior) d.root.spatial.push_back(dual_int(c));
  for (const auto& c : t.boundary) d.root.planar.push_back(dual_bnd(c));
  return d;
}

BubbleTree from_dual(const DualTree& d) {
  if (d.root.kind != DualTree::Node::Kind::Vertex)
    throw Error(Errc::ParseError, "dual root must be a vertex");
  BubbleTree t;
  t.n = d.n;
  t.m = d.m;
  for (const auto& c : d.root.spatial) t.interior.push_back(undual_int(c));
  for (const auto& c : d.root.planar) t.boundary.push_back(undual_bnd(c));
  require_valid(t);
  return t;
}

}  // namespace kbar
