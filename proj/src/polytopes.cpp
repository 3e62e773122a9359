#include "kbar/polytopes.hpp"

#include <algorithm>
#include <map>

#include "kbar/tree.hpp"

namespace kbar {

std::string Bracketing::str() const {
  std::string s;
  for (const auto& [i, j] : brackets) {
    if (!s.empty()) s += ' ';
    s += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return s.empty() ? "()" : s;
}

namespace {

bool compatible(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.second < b.first || b.second < a.first) return true;  // disjoint
  // nested
  if (a.first <= b.first && b.second <= a.second) return true;
  if (b.first <= a.first && a.second <= b.second) return true;
  return false;
}

void extend_bracketings(const std::vector<std::pair<int, int>>& intervals,
                        std::size_t from, Bracketing& cur,
                        std::vector<Bracketing>& out) {
  out.push_back(cur);
  for (std::size_t i = from; i < intervals.size(); ++i) {
    bool ok = true;
    for (const auto& b : cur.brackets)
      if (!compatible(intervals[i], b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.brackets.push_back(intervals[i]);
    extend_bracketings(intervals, i + 1, cur, out);
    cur.brackets.pop_back();
  }
}

}  // namespace

FacePoset associahedron_poset(int n) {
  if (n < 2) throw Error(Errc::TooSmall, "associahedron needs n >= 2");
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (j - i + 1 <= n - 1) intervals.push_back({i, j});

  std::vector<Bracketing> faces;
  Bracketing cur;
  cur.n = n;
  extend_bracketings(intervals, 0, cur, faces);

  FacePoset p;
  std::map<std::string, int> index;
  for (auto& f : faces) {
    std::sort(f.brackets.begin(), f.brackets.end());
    std::string key = f.str();
    index[key] = static_cast<int>(p.elements.size());
    p.elements.push_back({n - 2 - static_cast<int>(f.brackets.size()), key});
  }
  // Covers: removing one bracket goes up one rank.
  for (const auto& f : faces) {
    if (f.brackets.empty()) continue;
    int lo = index.at(f.str());
    for (std::size_t i = 0; i < f.brackets.size(); ++i) {
      Bracketing g = f;
      g.brackets.erase(g.brackets.begin() + i);
      p.covers.push_back({lo, index.at(g.str())});
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

long long catalan(int k) {
  if (k < 0) throw Error(Errc::TooSmall, "catalan needs k >= 0");
  long long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

ClosurePoset cyclohedron_poset(int n, const EnumOptions& opts) {
  if (n < 2) throw Error(Errc::TooSmall, "cyclohedron needs n >= 2");
  return chamber_closure_poset(1, n, opts);
}

}  // namespace kbar
