#include "p6c4/graph.hpp"

#include <algorithm>
#include <string>

#include "p6c4/error.hpp"

namespace p6c4 {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  std::vector<Bitset> rows(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    rows[u].set(v);
    rows[v].set(u);
  }
  return from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const auto n = rows.size();
  Graph g;
  g.adj_.resize(n);
  long long degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].size() != n) throw InvalidArgument("adjacency row has the wrong width");
    if (rows[v].test(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
    auto& list = g.adj_[v];
    list.reserve(rows[v].count());
    for (auto u = rows[v].find_first(); u != Bitset::npos; u = rows[v].find_next(u)) {
      if (!rows[u].test(v)) throw InvalidArgument("adjacency is not symmetric");
      list.push_back(static_cast<VertexId>(u));
    }
    degree_sum += static_cast<long long>(list.size());
  }
  g.rows_ = std::move(rows);
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::check_invariants() const {
  const int n = order();
  if (static_cast<int>(rows_.size()) != n) return false;
  long long degree_sum = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (rows_[v].size() != static_cast<std::size_t>(n) || rows_[v].test(v)) return false;
    if (!std::is_sorted(adj_[v].begin(), adj_[v].end())) return false;
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end()) return false;
    if (rows_[v].count() != adj_[v].size()) return false;
    for (VertexId u : adj_[v]) {
      if (u < 0 || u >= n || u == v || !rows_[v].test(u) || !rows_[u].test(v)) return false;
    }
    degree_sum += static_cast<long long>(adj_[v].size());
  }
  return degree_sum % 2 == 0 && degree_sum / 2 == m_;
}

Bitset to_bitset(const Graph& g, std::span<const VertexId> vertices) {
  Bitset bits(g.order());
  for (VertexId v : vertices) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
    bits.set(v);
  }
  return bits;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) {
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const VertexId> subset) {
  const int n = g.order();
  VertexMap map;
  map.old_to_new.assign(n, -1);
  map.new_to_old.reserve(subset.size());
  for (VertexId v : subset) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
    if (map.old_to_new[v] != -1) throw InvalidArgument("vertex " + std::to_string(v) + " repeated in subset");
    map.old_to_new[v] = static_cast<VertexId>(map.new_to_old.size());
    map.new_to_old.push_back(v);
  }
  const int k = static_cast<int>(map.new_to_old.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i) {
    for (VertexId u : g.neighbors(map.new_to_old[i])) {
      if (map.old_to_new[u] >= 0) rows[i].set(map.old_to_new[u]);
    }
  }
  return {Graph::from_rows(std::move(rows)), std::move(map)};
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const Bitset& subset) {
  if (subset.size() != static_cast<std::size_t>(g.order())) {
    throw InvalidArgument("vertex set does not belong to this graph");
  }
  const auto list = to_vertex_set(subset);
  return induced_subgraph(g, list);
}

std::pair<Graph, VertexMap> remove_vertex(const Graph& g, VertexId v) {
  if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
  auto keep = g.full_set();
  keep.reset(v);
  return induced_subgraph(g, keep);
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool connect) {
  const int a = g.order();
  const int n = a + h.order();
  std::vector<Bitset> rows(n, Bitset(n));
  for (VertexId v = 0; v < a; ++v) {
    for (VertexId u : g.neighbors(v)) rows[v].set(u);
    if (connect) {
      for (int w = a; w < n; ++w) rows[v].set(w);
    }
  }
  for (VertexId v = 0; v < h.order(); ++v) {
    for (VertexId u : h.neighbors(v)) rows[a + v].set(a + u);
    if (connect) {
      for (int w = 0; w < a; ++w) rows[a + v].set(w);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }
Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Bitset> rows(n);
  for (VertexId v = 0; v < n; ++v) {
    rows[v] = ~g.row(v);
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

BlowUp blow_up(const Graph& g, std::span<const int> sizes) {
  const int k = g.order();
  if (static_cast<int>(sizes.size()) != k) {
    throw InvalidArgument("blow-up needs one size per vertex (got " + std::to_string(sizes.size()) +
                          " for " + std::to_string(k) + " vertices)");
  }
  std::vector<int> first(k + 1, 0);
  for (VertexId v = 0; v < k; ++v) {
    if (sizes[v] < 1) throw InvalidArgument("blow-up size of vertex " + std::to_string(v) + " must be at least 1");
    first[v + 1] = first[v] + sizes[v];
  }
  const int n = first[k];
  BlowUp out;
  out.class_of.resize(n);
  std::vector<Bitset> class_bits(k, Bitset(n));
  for (VertexId v = 0; v < k; ++v) {
    for (int w = first[v]; w < first[v + 1]; ++w) {
      out.class_of[w] = v;
      class_bits[v].set(w);
    }
  }
  std::vector<Bitset> rows(n);
  for (VertexId v = 0; v < k; ++v) {
    Bitset row = class_bits[v];
    for (VertexId u : g.neighbors(v)) row |= class_bits[u];
    for (int w = first[v]; w < first[v + 1]; ++w) {
      rows[w] = row;
      rows[w].reset(w);
    }
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

Graph complete_graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  std::vector<Bitset> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = ~Bitset(n);
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph edgeless_graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  return Graph::from_rows(std::vector<Bitset>(n, Bitset(n)));
}

std::vector<Bitset> connected_components(const Graph& g, const Bitset& within) {
  std::vector<Bitset> out;
  Bitset unseen = within;
  std::vector<VertexId> stack;
  for (auto s = unseen.find_first(); s != Bitset::npos; s = unseen.find_first()) {
    Bitset comp(g.order());
    unseen.reset(s);
    comp.set(s);
    stack.assign(1, static_cast<VertexId>(s));
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (unseen.test(u)) {
          unseen.reset(u);
          comp.set(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& comp : connected_components(g, g.full_set())) out.push_back(to_vertex_set(comp));
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g, g.full_set()).size() <= 1; }

bool is_clique(const Graph& g, const Bitset& vertices) {
  for (auto v = vertices.find_first(); v != Bitset::npos; v = vertices.find_next(v)) {
    Bitset rest = vertices;
    rest.reset(v);
    if (!rest.is_subset_of(g.row(static_cast<VertexId>(v)))) return false;
  }
  return true;
}

bool is_clique(const Graph& g, std::span<const VertexId> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_complete_graph(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

}  // namespace p6c4
