#pragma once

#include <vector>

#include "p6c4/generators.hpp"
#include "p6c4/graph.hpp"

namespace support {

using p6c4::Graph;

inline Graph random_graph(p6c4::Rng& rng, int n, double p) {
  std::vector<p6c4::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// g with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<p6c4::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<int> random_permutation(p6c4::Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  return perm;
}

inline std::vector<int> all(int count, int value) { return std::vector<int>(count, value); }

}  // namespace support
