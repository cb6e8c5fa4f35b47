// Brute-force reference answers for small graphs. Deliberately naive: they
// only use order() and adjacent(), never the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "p6c4/graph.hpp"

namespace oracle {

using p6c4::Graph;
using p6c4::VertexId;

inline bool is_clique_mask(const Graph& g, std::uint64_t mask) {
  for (int u = 0; u < g.order(); ++u) {
    if (!(mask >> u & 1)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if ((mask >> v & 1) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline int grow_clique(const Graph& g, std::vector<VertexId>& clique, VertexId from) {
  int best = static_cast<int>(clique.size());
  for (VertexId v = from; v < g.order(); ++v) {
    bool joins = true;
    for (VertexId u : clique) joins = joins && g.adjacent(u, v);
    if (!joins) continue;
    clique.push_back(v);
    best = std::max(best, grow_clique(g, clique, v + 1));
    clique.pop_back();
  }
  return best;
}

// Clique number by listing every clique in increasing vertex order.
inline int omega(const Graph& g) {
  std::vector<VertexId> clique;
  return grow_clique(g, clique, 0);
}

inline bool colorable(const Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.order()) return true;
  // Symmetry: a vertex never opens more than one new color.
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u]);
  for (int c = 1; c <= std::min(k, used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && color[u] == c);
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, k, color, v + 1)) return true;
  }
  color[v] = 0;
  return false;
}

// Chromatic number by trying k = 1, 2, ... with plain backtracking.
inline int chi(const Graph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> color(g.order(), 0);
  for (int k = 1;; ++k) {
    if (colorable(g, k, color, 0)) return k;
  }
}

// Every injective map from pattern into host, checked edge by edge.
inline bool contains_induced(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<VertexId> chosen;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) chosen.push_back(v);
    }
    do {
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        for (int b = a + 1; b < k && ok; ++b) {
          ok = pattern.adjacent(a, b) == host.adjacent(chosen[a], chosen[b]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && oracle::contains_induced(a, b);
}

inline int components_without(const Graph& g, std::uint64_t removed) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if ((removed >> s & 1) || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (!(removed >> u & 1) && !seen[u] && g.adjacent(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

// Some clique (possibly empty) whose removal leaves two or more components.
inline bool has_clique_cutset(const Graph& g) {
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (is_clique_mask(g, mask) && components_without(g, mask) >= 2) return true;
  }
  return false;
}

inline bool is_atom(const Graph& g) {
  return !has_clique_cutset(g);
}

inline bool extends_to_induced_cycle(const Graph& g, std::vector<VertexId>& path, int k) {
  const int len = static_cast<int>(path.size());
  if (len == k) return g.adjacent(path.front(), path.back());
  for (int v = 0; v < g.order(); ++v) {
    if (std::find(path.begin(), path.end(), v) != path.end()) continue;
    if (!g.adjacent(path.back(), v)) continue;
    bool ok = true;
    for (int i = 0; i + 1 < len && ok; ++i) {
      // Only the first vertex may touch v, and only when v closes the cycle.
      if (g.adjacent(path[i], v)) ok = (i == 0 && len + 1 == k);
    }
    if (len + 1 == k && !g.adjacent(path[0], v)) ok = false;
    if (!ok) continue;
    path.push_back(v);
    if (extends_to_induced_cycle(g, path, k)) return true;
    path.pop_back();
  }
  return false;
}

inline bool has_induced_cycle(const Graph& g, int k) {
  for (int s = 0; s < g.order(); ++s) {
    std::vector<VertexId> path{s};
    if (extends_to_induced_cycle(g, path, k)) return true;
  }
  return false;
}

// Chordal means no induced cycle of any length from 4 to n.
inline bool is_chordal(const Graph& g) {
  for (int k = 4; k <= g.order(); ++k) {
    if (has_induced_cycle(g, k)) return false;
  }
  return true;
}

inline bool proper(const Graph& g, const std::vector<int>& color) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) && color[u] == color[v]) return false;
    }
  }
  return true;
}

}  // namespace oracle
