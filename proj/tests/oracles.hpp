// Slow, independent reference implementations used by the unit tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/property.hpp"

namespace oracle {

using EdgeList = std::set<std::pair<int, int>>;

inline EdgeList edges_of(const indsub::Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.insert({e.u, e.v});
  return out;
}

inline bool adjacent(const EdgeList& e, int u, int v) {
  if (u > v) std::swap(u, v);
  return e.count({u, v}) > 0;
}

// Permutation search without pruning.
inline bool isomorphic(const indsub::Graph& a, const indsub::Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const auto ea = edges_of(a), eb = edges_of(b);
  std::vector<int> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : ea)
      if (!adjacent(eb, perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Σ_{S ⊆ E} Φ(g[S]) (−1)^{|S|} by recursion over edges.
inline long long alt_enum(const indsub::PropertySpec& s, const indsub::Graph& g) {
  const auto& all = g.edges();
  long long total = 0;
  std::vector<indsub::Edge> chosen;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == all.size()) {
      if (s.evaluate(indsub::Graph(g.num_vertices(), chosen))) total += chosen.size() % 2 ? -1 : 1;
      return;
    }
    self(self, i + 1);
    chosen.push_back(all[i]);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return total;
}

// Exhaustive search for disjoint A, B of size a with A × B ⊆ E.
inline bool has_biclique(const indsub::Graph& g, int a) {
  const int n = g.num_vertices();
  const auto e = edges_of(g);
  for (unsigned left = 0; left < (1U << n); ++left) {
    if (__builtin_popcount(left) != static_cast<int>(a)) continue;
    int common = 0;
    for (int v = 0; v < n; ++v) {
      if ((left >> v) & 1U) continue;
      bool all = true;
      for (int u = 0; u < n; ++u)
        if (((left >> u) & 1U) && !adjacent(e, u, v)) all = false;
      common += all;
    }
    if (common >= a) return true;
  }
  return false;
}

// BFS distances from s; -1 when unreachable.
inline std::vector<int> distances(const indsub::Graph& g, int s) {
  std::vector<int> d(g.num_vertices(), -1);
  std::vector<int> queue{s};
  d[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& e : g.edges()) {
      const int u = queue[i];
      const int w = e.u == u ? e.v : e.v == u ? e.u : -1;
      if (w >= 0 && d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  return d;
}

inline bool connected(const indsub::Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto d = distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

// -1 for disconnected graphs
inline int diameter(const indsub::Graph& g) {
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int x : distances(g, v)) {
      if (x < 0) return -1;
      best = std::max(best, x);
    }
  return best;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
