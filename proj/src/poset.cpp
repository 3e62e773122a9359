#include "kbar/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kbar/tree.hpp"

namespace kbar {

namespace {

struct Degrees {
  std::vector<int> up, down;
};

Degrees degrees(const FacePoset& p) {
  Degrees d;
  d.up.assign(p.elements.size(), 0);
  d.down.assign(p.elements.size(), 0);
  for (auto [lo, hi] : p.covers) {
    ++d.up[lo];
    ++d.down[hi];
  }
  return d;
}

}  // namespace

bool is_graded(const FacePoset& p) {
  if (p.elements.empty()) return true;
  int lo = p.elements[0].rank, hi = p.elements[0].rank;
  for (const auto& e : p.elements) {
    lo = std::min(lo, e.rank);
    hi = std::max(hi, e.rank);
  }
  for (auto [a, b] : p.covers) {
    if (a < 0 || b < 0 || a >= static_cast<int>(p.elements.size()) ||
        b >= static_cast<int>(p.elements.size()))
      return false;
    if (p.elements[b].rank != p.elements[a].rank + 1) return false;
  }
  Degrees d = degrees(p);
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (d.down[i] == 0 && p.elements[i].rank != lo) return false;
    if (d.up[i] == 0 && p.elements[i].rank != hi) return false;
  }
  return true;
}

std::vector<long long> poset_f_vector(const FacePoset& p) {
  if (!is_graded(p)) throw Error(Errc::NotGraded, "poset is not graded");
  if (p.elements.empty()) return {};
  int lo = p.elements[0].rank, hi = p.elements[0].rank;
  for (const auto& e : p.elements) {
    lo = std::min(lo, e.rank);
    hi = std::max(hi, e.rank);
  }
  std::vector<long long> f(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& e : p.elements) ++f[static_cast<std::size_t>(e.rank - lo)];
  return f;
}

namespace {

struct IsoContext {
  std::vector<std::vector<int>> up_p, up_q;    // adjacency by covers
  std::vector<std::vector<int>> down_p, down_q;
  std::vector<int> map_pq;  // p index -> q index or -1
  std::vector<int> map_qp;
  std::vector<std::vector<int>> candidates;  // per p element
  std::vector<int> order;                    // assignment order
};

bool extend(IsoContext& c, std::size_t pos) {
  if (pos == c.order.size()) return true;
  int pi = c.order[pos];
  for (int qi : c.candidates[pi]) {
    if (c.map_qp[qi] != -1) continue;
    bool ok = true;
    // Covers to already-assigned elements must match exactly both ways.
    for (int up : c.up_p[pi]) {
      if (c.map_pq[up] == -1) continue;
      if (std::find(c.up_q[qi].begin(), c.up_q[qi].end(), c.map_pq[up]) ==
          c.up_q[qi].end()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (int dn : c.down_p[pi]) {
        if (c.map_pq[dn] == -1) continue;
        if (std::find(c.down_q[qi].begin(), c.down_q[qi].end(),
                      c.map_pq[dn]) == c.down_q[qi].end()) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    c.map_pq[pi] = qi;
    c.map_qp[qi] = pi;
    if (extend(c, pos + 1)) return true;
    c.map_pq[pi] = -1;
    c.map_qp[qi] = -1;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const FacePoset& p, const FacePoset& q, std::size_t cap) {
  if (p.elements.size() > cap || q.elements.size() > cap)
    throw Error(Errc::CapExceeded, "poset too large for isomorphism search");
  if (p.elements.size() != q.elements.size()) return false;
  if (p.covers.size() != q.covers.size()) return false;

  auto signature = [](const FacePoset& x) {
    Degrees d = degrees(x);
    std::map<std::tuple<int, int, int>, int> sig;
    for (std::size_t i = 0; i < x.elements.size(); ++i)
      ++sig[{x.elements[i].rank, d.up[i], d.down[i]}];
    return sig;
  };
  auto sp = signature(p), sq = signature(q);
  // Ranks may be offset between the two posets; compare after shifting both
  // to a common bottom rank.
  auto shift = [](std::map<std::tuple<int, int, int>, int>& s) {
    if (s.empty()) return;
    int lo = std::get<0>(s.begin()->first);
    for (const auto& [k, v] : s) lo = std::min(lo, std::get<0>(k));
    std::map<std::tuple<int, int, int>, int> out;
    for (const auto& [k, v] : s)
      out[{std::get<0>(k) - lo, std::get<1>(k), std::get<2>(k)}] = v;
    s = std::move(out);
  };
  shift(sp);
  shift(sq);
  if (sp != sq) return false;

  int plo = p.elements.empty() ? 0 : p.elements[0].rank;
  for (const auto& e : p.elements) plo = std::min(plo, e.rank);
  int qlo = q.elements.empty() ? 0 : q.elements[0].rank;
  for (const auto& e : q.elements) qlo = std::min(qlo, e.rank);

  IsoContext c;
  auto adj = [](const FacePoset& x, std::vector<std::vector<int>>& up,
                std::vector<std::vector<int>>& down) {
    up.assign(x.elements.size(), {});
    down.assign(x.elements.size(), {});
    for (auto [a, b] : x.covers) {
      up[a].push_back(b);
      down[b].push_back(a);
    }
  };
  adj(p, c.up_p, c.down_p);
  adj(q, c.up_q, c.down_q);
  Degrees dp = degrees(p), dq = degrees(q);
  c.map_pq.assign(p.elements.size(), -1);
  c.map_qp.assign(q.elements.size(), -1);
  c.candidates.assign(p.elements.size(), {});
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    for (std::size_t j = 0; j < q.elements.size(); ++j) {
      if (p.elements[i].rank - plo == q.elements[j].rank - qlo &&
          dp.up[i] == dq.up[j] && dp.down[i] == dq.down[j])
        c.candidates[i].push_back(static_cast<int>(j));
    }
  }
  c.order.resize(p.elements.size());
  for (std::size_t i = 0; i < c.order.size(); ++i)
    c.order[i] = static_cast<int>(i);
  // Most-constrained first.
  std::sort(c.order.begin(), c.order.end(), [&](int a, int b) {
    return c.candidates[a].size() < c.candidates[b].size();
  });
  return extend(c, 0);
}

std::string to_dot(const FacePoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    os << "  e" << i << " [label=\"r" << p.elements[i].rank;
    if (!p.elements[i].label.empty()) os << " " << p.elements[i].label;
    os << "\"];\n";
  }
  auto covers = p.covers;
  std::sort(covers.begin(), covers.end());
  for (auto [a, b] : covers) os << "  e" << a << " -> e" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const FacePoset& p) {
  std::ostringstream os;
  os << "poset elements=" << p.elements.size() << " covers=" << p.covers.size()
     << "\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    os << i << " rank=" << p.elements[i].rank << " " << p.elements[i].label
       << "\n";
  auto covers = p.covers;
  std::sort(covers.begin(), covers.end());
  for (auto [a, b] : covers) os << a << " < " << b << "\n";
  return os.str();
}

}  // namespace kbar
