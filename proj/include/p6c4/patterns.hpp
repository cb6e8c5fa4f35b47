#pragma once

#include <optional>
#include <vector>

#include "p6c4/graph.hpp"

namespace p6c4 {

// embedding[p] is the host vertex that pattern vertex p maps to.
using InducedEmbedding = std::vector<VertexId>;

// Backtracking search for an induced copy of `pattern` in `host`. Pattern
// vertices are matched in a connected search order; candidates are pruned by
// degree and by adjacency/non-adjacency against already matched vertices.
std::optional<InducedEmbedding> contains_induced(const Graph& host, const Graph& pattern);

// True iff `embedding` is injective and preserves both edges and non-edges.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const InducedEmbedding& embedding);

// Isomorphism via contains_induced once order, size and degree sequence match.
std::optional<InducedEmbedding> find_isomorphism(const Graph& g, const Graph& pattern);

// Specialized detectors. The witness is returned in pattern order: a C4 as
// a, b, c, d around the cycle, a P6 from one end to the other.
std::optional<std::vector<VertexId>> find_induced_c4(const Graph& g);
std::optional<std::vector<VertexId>> find_induced_p6(const Graph& g);
bool is_c4_free(const Graph& g);
bool is_p6_free(const Graph& g);
bool is_p6_c4_free(const Graph& g);

// An induced cycle on k vertices (k in 4..6) in cycle order, or nothing.
std::optional<std::vector<VertexId>> find_induced_cycle(const Graph& g, int k);

// All induced k-cycles, each listed once: the smallest vertex first and the
// second vertex smaller than the last. Stops after `limit` cycles.
std::vector<std::vector<VertexId>> enumerate_induced_cycles(const Graph& g, int k,
                                                            std::size_t limit = static_cast<std::size_t>(-1));

// True iff `cycle` has k >= 3 distinct vertices inducing C_k in that order.
bool is_induced_cycle(const Graph& g, const std::vector<VertexId>& cycle);

// Lexicographic BFS order (first visited first).
std::vector<VertexId> lex_bfs_order(const Graph& g);
// True iff `order` (eliminated first to last) is a perfect elimination ordering.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order);
bool is_chordal(const Graph& g);

// Lowest-index vertex whose neighborhood is a clique.
std::optional<VertexId> find_simplicial_vertex(const Graph& g);

}  // namespace p6c4
