#include "kbar/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kbar {

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string label_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Raw tree generation.
//
// A node (root or disk bubble) over interior labels I and boundary labels B
// is built by: choosing the labels that stay at this level as interior items
// (structured into particles and sphere bubbles), pushing the rest into disk
// bubbles below (jointly partitioned with the descending boundary labels),
// and arranging the resulting boundary items in every linear order.

struct NodeOpt {
  std::vector<InteriorItem> interior;
  std::vector<BoundaryItem> boundary;
  int bubbles = 0;
};

struct ForestOpt {
  std::vector<InteriorItem> items;
  int bubbles = 0;
};

void gen_forests(const std::vector<int>& labels, int budget,
                 std::vector<ForestOpt>& out);

// Sphere structures over `labels` (>= 2 of them): forests with >= 2 roots.
void gen_spheres(const std::vector<int>& labels, int budget,
                 std::vector<std::pair<InteriorItem, int>>& out) {
  if (budget < 1) return;
  std::vector<ForestOpt> fs;
  gen_forests(labels, budget - 1, fs);
  for (auto& f : fs) {
    if (f.items.size() < 2) continue;
    out.emplace_back(InteriorItem::sphere(std::move(f.items)), f.bubbles + 1);
  }
}

void gen_forests(const std::vector<int>& labels, int budget,
                 std::vector<ForestOpt>& out) {
  if (labels.empty()) {
    out.push_back({});
    return;
  }
  int x = labels[0];
  std::vector<int> rest(labels.begin() + 1, labels.end());

  // x as a lone particle.
  {
    std::vector<ForestOpt> tail;
    gen_forests(rest, budget, tail);
    for (auto& t : tail) {
      ForestOpt f;
      f.items.push_back(InteriorItem::ip(x));
      for (auto& it : t.items) f.items.push_back(std::move(it));
      f.bubbles = t.bubbles;
      out.push_back(std::move(f));
    }
  }
  // x inside a sphere over {x} ∪ S for every nonempty S ⊆ rest.
  std::size_t r = rest.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> block{x}, remain;
    for (std::size_t i = 0; i < r; ++i)
      (mask >> i & 1 ? block : remain).push_back(rest[i]);
    std::vector<std::pair<InteriorItem, int>> spheres;
    gen_spheres(block, budget, spheres);
    if (spheres.empty()) continue;
    std::vector<ForestOpt> tail;
    gen_forests(remain, budget, tail);
    for (auto& [sp, sc] : spheres) {
      for (auto& t : tail) {
        if (sc + t.bubbles > budget) continue;
        ForestOpt f;
        f.items.push_back(sp);
        for (const auto& it : t.items) f.items.push_back(it);
        f.bubbles = sc + t.bubbles;
        out.push_back(std::move(f));
      }
    }
  }
}

// Set partitions of `elems` (restricted-growth enumeration).
template <typename T>
void gen_partitions(const std::vector<T>& elems,
                    std::vector<std::vector<std::vector<T>>>& out) {
  std::size_t k = elems.size();
  std::vector<int> rg(k, 0);
  auto emit = [&] {
    int blocks = *std::max_element(rg.begin(), rg.end()) + 1;
    std::vector<std::vector<T>> p(blocks);
    for (std::size_t i = 0; i < k; ++i) p[rg[i]].push_back(elems[i]);
    out.push_back(std::move(p));
  };
  if (k == 0) return;
  // Iterate restricted growth strings.
  while (true) {
    emit();
    int i = static_cast<int>(k) - 1;
    for (; i > 0; --i) {
      int maxPrev = *std::max_element(rg.begin(), rg.begin() + i);
      if (rg[i] <= maxPrev) {
        ++rg[i];
        std::fill(rg.begin() + i + 1, rg.end(), 0);
        break;
      }
      rg[i] = 0;
    }
    if (i == 0) break;
  }
}

struct GenState {
  long long cap = 0;
  long long raw = 0;
};

void gen_node(const std::vector<int>& interior_labels,
              const std::vector<int>& boundary_labels, bool is_root, int mu,
              int budget, GenState& st,
              const std::function<void(NodeOpt&&)>& sink);

// Tagged label for joint bubble-content partitions.
struct Tagged {
  bool boundary = false;
  int label = 0;
};

void gen_node(const std::vector<int>& interior_labels,
              const std::vector<int>& boundary_labels, bool is_root, int mu,
              int budget, GenState& st,
              const std::function<void(NodeOpt&&)>& sink) {
  std::size_t ni = interior_labels.size();
  std::size_t nb = boundary_labels.size();
  for (std::size_t imask = 0; imask < (std::size_t{1} << ni); ++imask) {
    std::vector<int> here_i, deep_i;
    for (std::size_t i = 0; i < ni; ++i)
      (imask >> i & 1 ? here_i : deep_i).push_back(interior_labels[i]);
    if (is_root && mu > 0 &&
        std::find(here_i.begin(), here_i.end(), mu) == here_i.end())
      continue;  // mu may not enter a disk bubble
    std::vector<ForestOpt> forests;
    gen_forests(here_i, budget, forests);
    if (forests.empty()) continue;

    for (std::size_t bmask = 0; bmask < (std::size_t{1} << nb); ++bmask) {
      std::vector<int> here_b, deep_b;
      for (std::size_t i = 0; i < nb; ++i)
        (bmask >> i & 1 ? here_b : deep_b).push_back(boundary_labels[i]);

      // No bubbles at this level.
      if (deep_i.empty() && deep_b.empty()) {
        for (const auto& f : forests) {
          int stab = 2 * static_cast<int>(f.items.size()) +
                     static_cast<int>(here_b.size());
          if (stab < (is_root ? 3 : 2)) continue;
          std::vector<BoundaryItem> items;
          for (int b : here_b) items.push_back(BoundaryItem::bp(b));
          std::sort(items.begin(), items.end(),
                    [](const BoundaryItem& a, const BoundaryItem& b) {
                      return a.particle < b.particle;
                    });
          std::vector<int> idx(items.size());
          std::iota(idx.begin(), idx.end(), 0);
          do {
            NodeOpt opt;
            opt.interior = f.items;
            for (int i : idx) opt.boundary.push_back(items[i]);
            opt.bubbles = f.bubbles;
            sink(std::move(opt));
          } while (std::next_permutation(idx.begin(), idx.end()));
        }
        continue;
      }

      // Partition descending labels into bubble contents.
      std::vector<Tagged> tagged;
      for (int l : deep_i) tagged.push_back({false, l});
      for (int l : deep_b) tagged.push_back({true, l});
      std::vector<std::vector<std::vector<Tagged>>> partitions;
      gen_partitions(tagged, partitions);

      for (const auto& part : partitions) {
        bool feasible = true;
        for (const auto& block : part) {
          int bi = 0, bb = 0;
          for (const auto& t : block) (t.boundary ? bb : bi)++;
          if (bi == 0 && bb < 2) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        int nblocks = static_cast<int>(part.size());

        for (const auto& f : forests) {
          if (f.bubbles + nblocks > budget) continue;
          int stab = 2 * static_cast<int>(f.items.size()) +
                     static_cast<int>(here_b.size()) + nblocks;
          if (stab < (is_root ? 3 : 2)) continue;

          // Structurings per block.
          std::vector<std::vector<NodeOpt>> block_opts(part.size());
          bool any_empty = false;
          int remaining = budget - f.bubbles - nblocks;
          for (std::size_t bi = 0; bi < part.size(); ++bi) {
            std::vector<int> I, B;
            for (const auto& t : part[bi])
              (t.boundary ? B : I).push_back(t.label);
            gen_node(I, B, false, 0, remaining, st, [&](NodeOpt&& o) {
              block_opts[bi].push_back(std::move(o));
            });
            if (block_opts[bi].empty()) {
              any_empty = true;
              break;
            }
          }
          if (any_empty) continue;

          // Cross product over block structurings, then all arrangements.
          std::vector<std::size_t> choice(part.size(), 0);
          while (true) {
            int total = f.bubbles + nblocks;
            for (std::size_t bi = 0; bi < part.size(); ++bi)
              total += block_opts[bi][choice[bi]].bubbles;
            if (total <= budget) {
              std::vector<BoundaryItem> items;
              for (int b : here_b) items.push_back(BoundaryItem::bp(b));
              for (std::size_t bi = 0; bi < part.size(); ++bi) {
                const NodeOpt& o = block_opts[bi][choice[bi]];
                items.push_back(BoundaryItem::disk(o.interior, o.boundary));
              }
              std::vector<int> idx(items.size());
              std::iota(idx.begin(), idx.end(), 0);
              std::sort(idx.begin(), idx.end());
              do {
                NodeOpt opt;
                opt.interior = f.items;
                for (int i : idx) opt.boundary.push_back(items[i]);
                opt.bubbles = total;
                sink(std::move(opt));
              } while (std::next_permutation(idx.begin(), idx.end()));
            }
            // Advance the choice vector.
            std::size_t pos = 0;
            for (; pos < choice.size(); ++pos) {
              if (++choice[pos] < block_opts[pos].size()) break;
              choice[pos] = 0;
            }
            if (pos == choice.size()) break;
          }
        }
      }
    }
  }
}

}  // namespace

void for_each_raw_tree(int n, int m, int max_codim, const EnumOptions& opts,
                       const std::function<void(const BubbleTree&)>& fn) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  std::vector<int> I(n), B(m);
  std::iota(I.begin(), I.end(), 1);
  std::iota(B.begin(), B.end(), 1);
  GenState st;
  st.cap = opts.cap;
  gen_node(I, B, true, n >= 1 ? n : 0, max_codim, st, [&](NodeOpt&& o) {
    if (++st.raw > st.cap)
      throw Error(Errc::CapExceeded,
                  "raw tree count exceeded cap " + std::to_string(st.cap));
    BubbleTree t;
    t.n = n;
    t.m = m;
    t.interior = std::move(o.interior);
    t.boundary = std::move(o.boundary);
    fn(t);
  });
}

std::vector<Stratum> enumerate_strata(int n, int m, int k,
                                      const EnumOptions& opts) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  if (k < 0 || k > space_dim(n, m))
    throw Error(Errc::CodimOutOfRange,
                "codim " + std::to_string(k) + " not in [0, " +
                    std::to_string(space_dim(n, m)) + "]");
  std::set<std::string> seen;
  std::vector<Stratum> out;
  for_each_raw_tree(n, m, k, opts, [&](const BubbleTree& t) {
    if (codim(t) != k) return;
    Stratum s = make_stratum(t);
    if (seen.insert(s.key).second) out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end(),
            [](const Stratum& a, const Stratum& b) { return a.key < b.key; });
  return out;
}

std::vector<long long> f_vector(int n, int m, const EnumOptions& opts) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  int d = space_dim(n, m);
  std::vector<std::set<std::string>> seen(static_cast<std::size_t>(d) + 1);
  for_each_raw_tree(n, m, d, opts, [&](const BubbleTree& t) {
    int k = codim(t);
    seen[static_cast<std::size_t>(k)].insert(canonical_key(t));
  });
  std::vector<long long> f;
  for (const auto& s : seen) f.push_back(static_cast<long long>(s.size()));
  return f;
}

long long chambers(int n, int m, const EnumOptions& opts) {
  if (m < 1) throw Error(Errc::UnsupportedM0, "chamber count requires m >= 1");
  long long c = static_cast<long long>(enumerate_strata(n, m, 0, opts).size());
  if (c != factorial(m - 1))
    throw Error(Errc::TheoremHypothesis,
                "chamber count " + std::to_string(c) + " != (m-1)! = " +
                    std::to_string(factorial(m - 1)));
  return c;
}

// ---------------------------------------------------------------------------
// Divisor census

std::string DivisorClass::str() const {
  switch (kind) {
    case Kind::Interior: return "interior" + label_set(interior_labels);
    case Kind::Boundary: return "boundary" + label_set(boundary_labels);
    case Kind::Mixed:
      return "mixed" + label_set(interior_labels) + label_set(boundary_labels);
  }
  return "?";
}

namespace {

void collect_interior_labels(const InteriorItem& it, std::vector<int>& out) {
  if (it.is_particle()) {
    out.push_back(it.particle);
    return;
  }
  for (const auto& c : it.children) collect_interior_labels(c, out);
}

DivisorClass classify_codim1(const BubbleTree& t) {
  DivisorClass d;
  for (const auto& it : t.interior) {
    if (!it.is_particle()) {
      d.kind = DivisorClass::Kind::Interior;
      collect_interior_labels(it, d.interior_labels);
      std::sort(d.interior_labels.begin(), d.interior_labels.end());
      int i = static_cast<int>(d.interior_labels.size());
      d.outer = kbar_factor(t.n - i + 1, t.m);
      d.inner = ncomplex_factor(i + 1);
      return d;
    }
  }
  for (const auto& it : t.boundary) {
    if (!it.is_bubble()) continue;
    for (const auto& c : it.interior)
      collect_interior_labels(c, d.interior_labels);
    for (const auto& c : it.boundary) d.boundary_labels.push_back(c.particle);
    std::sort(d.interior_labels.begin(), d.interior_labels.end());
    std::sort(d.boundary_labels.begin(), d.boundary_labels.end());
    int i = static_cast<int>(d.interior_labels.size());
    int b = static_cast<int>(d.boundary_labels.size());
    if (i == 0) {
      d.kind = DivisorClass::Kind::Boundary;
      d.outer = kbar_factor(t.n, t.m - b + 1);
      d.inner = mreal_factor(b + 1);
    } else {
      d.kind = DivisorClass::Kind::Mixed;
      d.outer = kbar_factor(t.n - i, t.m - b + 1);
      d.inner = kbar_factor(i, b + 1);
    }
    return d;
  }
  throw Error(Errc::InvalidTree, "codim-1 tree without a bubble");
}

}  // namespace

DivisorCensus divisor_census(int n, int m, const EnumOptions& opts) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  DivisorCensus census;
  std::map<std::string, DivisorClass> by_content;
  // A zero-dimensional space has no codim-1 strata; the census is empty
  // (and the closed forms below all evaluate to zero).
  std::vector<Stratum> codim1;
  if (space_dim(n, m) >= 1) codim1 = enumerate_strata(n, m, 1, opts);
  for (const Stratum& s : codim1) {
    DivisorClass d = classify_codim1(s.canonical);
    auto [it, fresh] = by_content.emplace(d.str(), std::move(d));
    ++it->second.stratum_count;
  }
  for (auto& [key, d] : by_content) {
    switch (d.kind) {
      case DivisorClass::Kind::Interior: ++census.interior_total; break;
      case DivisorClass::Kind::Boundary: ++census.boundary_total; break;
      case DivisorClass::Kind::Mixed: ++census.mixed_total; break;
    }
    census.classes.push_back(std::move(d));
  }

  if (n >= 1 && m >= 1) {
    census.closed_form_checked = true;
    census.cf_interior = (1LL << n) - n - 1;
    census.cf_boundary = (1LL << m) - m - 1;
    census.cf_mixed = (1LL << m) * ((1LL << (n - 1)) - 1);
    if (census.interior_total != census.cf_interior ||
        census.boundary_total != census.cf_boundary ||
        census.mixed_total != census.cf_mixed)
      throw Error(Errc::TheoremHypothesis,
                  "enumerated divisor totals differ from closed forms");
    // Per-(i,b) binomial refinement.
    std::map<std::pair<int, int>, long long> interior_ib, boundary_ib, mixed_ib;
    for (const auto& d : census.classes) {
      int i = static_cast<int>(d.interior_labels.size());
      int b = static_cast<int>(d.boundary_labels.size());
      switch (d.kind) {
        case DivisorClass::Kind::Interior: ++interior_ib[{i, 0}]; break;
        case DivisorClass::Kind::Boundary: ++boundary_ib[{0, b}]; break;
        case DivisorClass::Kind::Mixed: ++mixed_ib[{i, b}]; break;
      }
    }
    for (const auto& [ib, count] : interior_ib)
      if (count != binom(n, ib.first))
        throw Error(Errc::TheoremHypothesis, "interior (i) refinement mismatch");
    for (const auto& [ib, count] : boundary_ib)
      if (count != binom(m, ib.second))
        throw Error(Errc::TheoremHypothesis, "boundary (b) refinement mismatch");
    for (const auto& [ib, count] : mixed_ib)
      if (count != binom(n - 1, ib.first) * binom(m, ib.second))
        throw Error(Errc::TheoremHypothesis, "mixed (i,b) refinement mismatch");
  }
  return census;
}

// ---------------------------------------------------------------------------
// Building set

std::string BuildingSetElement::str() const {
  switch (kind) {
    case DivisorClass::Kind::Interior: return "interior" + label_set(interior_labels);
    case DivisorClass::Kind::Boundary: return "boundary" + label_set(boundary_labels);
    case DivisorClass::Kind::Mixed:
      return "mixed" + label_set(interior_labels) + label_set(boundary_labels);
  }
  return "?";
}

std::vector<BuildingSetElement> building_set(int n, int m) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  std::vector<BuildingSetElement> out;
  auto subset = [](std::size_t mask, int count) {
    std::vector<int> v;
    for (int i = 0; i < count; ++i)
      if (mask >> i & 1) v.push_back(i + 1);
    return v;
  };
  // Interior collisions of i >= 2 particles: naive codim 2(i-1) >= 2.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s = subset(mask, n);
    if (s.size() < 2) continue;
    BuildingSetElement e;
    e.kind = DivisorClass::Kind::Interior;
    e.interior_labels = std::move(s);
    e.grading = 2 * static_cast<int>(e.interior_labels.size());
    out.push_back(std::move(e));
  }
  // Boundary collisions of b particles: naive codim b-1 >= 2 needs b >= 3.
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> s = subset(mask, m);
    if (s.size() < 3) continue;
    BuildingSetElement e;
    e.kind = DivisorClass::Kind::Boundary;
    e.boundary_labels = std::move(s);
    e.grading = static_cast<int>(e.boundary_labels.size());
    out.push_back(std::move(e));
  }
  // Mixed collisions: i >= 1 non-mu interior, b >= 0 boundary, except the
  // single-interior naive-codim-1 case (i,b) = (1,0).
  int free_interior = n >= 1 ? n - 1 : 0;
  for (std::size_t im = 0; im < (std::size_t{1} << free_interior); ++im) {
    std::vector<int> si = subset(im, free_interior);
    if (si.empty()) continue;
    for (std::size_t bm = 0; bm < (std::size_t{1} << m); ++bm) {
      std::vector<int> sb = subset(bm, m);
      if (si.size() == 1 && sb.empty()) continue;
      BuildingSetElement e;
      e.kind = DivisorClass::Kind::Mixed;
      e.interior_labels = si;
      e.boundary_labels = std::move(sb);
      e.grading = 2 * static_cast<int>(e.interior_labels.size()) +
                  static_cast<int>(e.boundary_labels.size());
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BuildingSetElement& a, const BuildingSetElement& b) {
              if (a.grading != b.grading) return a.grading < b.grading;
              return a.str() < b.str();
            });
  return out;
}

// ---------------------------------------------------------------------------
// Posets over strata

namespace {

struct Universe {
  std::vector<Stratum> strata;           // sorted by (codim, key)
  std::map<std::string, int> index;
};

Universe enumerate_universe(int n, int m, const EnumOptions& opts) {
  if (n < 0 || m < 0 || 2 * n + m < 3)
    throw Error(Errc::DegenerateSpace, "2n+m < 3");
  Universe u;
  std::set<std::string> seen;
  for_each_raw_tree(n, m, space_dim(n, m), opts, [&](const BubbleTree& t) {
    Stratum s = make_stratum(t);
    if (seen.insert(s.key).second) u.strata.push_back(std::move(s));
  });
  std::sort(u.strata.begin(), u.strata.end(),
            [](const Stratum& a, const Stratum& b) {
              if (a.codim != b.codim) return a.codim < b.codim;
              return a.key < b.key;
            });
  for (std::size_t i = 0; i < u.strata.size(); ++i)
    u.index[u.strata[i].key] = static_cast<int>(i);
  return u;
}

}  // namespace

FacePoset face_poset(int n, int m, const EnumOptions& opts) {
  Universe u = enumerate_universe(n, m, opts);
  FacePoset p;
  for (const Stratum& s : u.strata) p.elements.push_back({s.dim, s.key});
  std::set<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < u.strata.size(); ++i) {
    const Stratum& s = u.strata[i];
    if (s.codim == 0) continue;
    for (const BubbleTree& up : stratum_uppers(s.canonical)) {
      auto it = u.index.find(encode(up));
      if (it == u.index.end())
        throw Error(Errc::InvalidTree, "merge escaped the enumerated set");
      covers.insert({static_cast<int>(i), it->second});
    }
  }
  p.covers.assign(covers.begin(), covers.end());
  return p;
}

ClosurePoset chamber_closure_poset(int n, int m, const Stratum& chamber,
                                   const EnumOptions& opts) {
  if (chamber.codim != 0)
    throw Error(Errc::NotAChamber, "closure requires a codim-0 stratum");

  // Chamber of a drawn diagram: contract every arc in its drawn orientation.
  auto chamber_of = [](BubbleTree t) {
    while (true) {
      auto paths = bubble_paths(t);
      if (paths.empty()) break;
      t = drawn_merge(t, paths[0]);
    }
    return canonical_key(t, CanonLevel::Stratum);
  };

  // All faces of the chamber: diagrams (no flip identification) that
  // contract onto it.
  std::map<std::string, BubbleTree> faces;
  for_each_raw_tree(n, m, space_dim(n, m), opts, [&](const BubbleTree& t) {
    BubbleTree d = canonicalize(t, CanonLevel::Diagram);
    std::string key = encode(d);
    if (faces.count(key)) return;
    if (chamber_of(d) != chamber.key) return;
    faces.emplace(std::move(key), std::move(d));
  });

  ClosurePoset cp;
  cp.chamber_key = chamber.key;
  std::map<std::string, int> index;
  for (const auto& [key, tree] : faces) {
    index[key] = static_cast<int>(cp.poset.elements.size());
    cp.poset.elements.push_back({space_dim(n, m) - codim(tree), key});
    cp.stratum_keys.push_back(canonical_key(tree, CanonLevel::Stratum));
  }
  std::set<std::pair<int, int>> covers;
  for (const auto& [key, tree] : faces) {
    int lo = index.at(key);
    for (const NodePath& path : bubble_paths(tree)) {
      std::string up =
          encode(canonicalize(drawn_merge(tree, path), CanonLevel::Diagram));
      auto it = index.find(up);
      if (it == index.end())
        throw Error(Errc::InvalidTree, "face merge left the chamber closure");
      covers.insert({lo, it->second});
    }
  }
  cp.poset.covers.assign(covers.begin(), covers.end());

  std::set<std::string> distinct(cp.stratum_keys.begin(), cp.stratum_keys.end());
  cp.self_glued = distinct.size() != cp.stratum_keys.size();
  return cp;
}

ClosurePoset chamber_closure_poset(int n, int m, const EnumOptions& opts) {
  auto ch = enumerate_strata(n, m, 0, opts);
  if (ch.empty()) throw Error(Errc::NotAChamber, "no chambers");
  return chamber_closure_poset(n, m, ch.front(), opts);
}

AdjacencyResult chamber_adjacency(int n, int m, const EnumOptions& opts) {
  if (m < 1) throw Error(Errc::UnsupportedM0, "adjacency requires m >= 1");
  AdjacencyResult res;
  res.chambers = enumerate_strata(n, m, 0, opts);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < res.chambers.size(); ++i)
    index[res.chambers[i].key] = static_cast<int>(i);

  std::set<std::pair<int, int>> edges;
  std::vector<int> parent(res.chambers.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Stratum& s : enumerate_strata(n, m, 1, opts)) {
    std::set<int> touching;
    for (const BubbleTree& up : stratum_uppers(s.canonical))
      touching.insert(index.at(encode(up)));
    for (auto a = touching.begin(); a != touching.end(); ++a)
      for (auto b = std::next(a); b != touching.end(); ++b) {
        edges.insert({*a, *b});
        parent[find(*a)] = find(*b);
      }
  }
  res.edges.assign(edges.begin(), edges.end());
  std::map<int, std::vector<int>> comps;
  for (std::size_t i = 0; i < res.chambers.size(); ++i)
    comps[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [root, members] : comps) res.components.push_back(members);
  std::sort(res.components.begin(), res.components.end());
  return res;
}

long long euler_characteristic(int n, int m, const EnumOptions& opts) {
  if (n > 1)
    throw Error(Errc::UnsupportedN,
                "strata of Kbar(n,m) with n >= 2 are not open cells");
  Universe u = enumerate_universe(n, m, opts);
  long long chi = 0;
  for (const Stratum& s : u.strata) chi += (s.dim % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace kbar
