#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace p6c4 {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;
// Sorted, duplicate-free list of vertices of one graph.
using VertexSet = std::vector<VertexId>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Result of an operation that re-indexes vertices. `old_to_new[v]` is -1 for
// vertices that were dropped; `new_to_old` lists the kept vertices in order.
struct VertexMap {
  std::vector<VertexId> old_to_new;
  std::vector<VertexId> new_to_old;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Each vertex keeps a sorted neighbor list for iteration and a bitset row for
// O(1) adjacency queries. Copies are cheap enough for desk-scale graphs and
// every "mutation" returns a new value.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on an out-of-range endpoint or a self-loop.
  // Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Rows must be symmetric and loop-free; checked.
  static Graph from_rows(std::vector<Bitset> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  long long size() const { return m_; }
  bool empty() const { return adj_.empty(); }

  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  const Bitset& row(VertexId v) const { return rows_[v]; }
  bool contains(VertexId v) const { return v >= 0 && v < order(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Full scan of the representation invariants.
  bool check_invariants() const;

  Bitset empty_set() const { return Bitset(adj_.size()); }
  Bitset full_set() const { return ~Bitset(adj_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Bitset> rows_;
  long long m_ = 0;
};

Bitset to_bitset(const Graph& g, std::span<const VertexId> vertices);
VertexSet to_vertex_set(const Bitset& bits);

// G[S]. Vertices keep their relative order. Throws if S has an invalid or
// repeated vertex.
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const VertexId> subset);
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const Bitset& subset);
std::pair<Graph, VertexMap> remove_vertex(const Graph& g, VertexId v);

// Vertices of `h` are shifted by g.order() in both operations.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// Every vertex v becomes a clique of sizes[v] vertices; `class_of[w]` is the
// original vertex w was blown up from. Vertices of one class are consecutive.
struct BlowUp {
  Graph graph;
  std::vector<VertexId> class_of;
};
BlowUp blow_up(const Graph& g, std::span<const int> sizes);

Graph complete_graph(int n);
Graph edgeless_graph(int n);

// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of G[within].
std::vector<Bitset> connected_components(const Graph& g, const Bitset& within);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, std::span<const VertexId> vertices);
bool is_clique(const Graph& g, const Bitset& vertices);
bool is_complete_graph(const Graph& g);

}  // namespace p6c4
