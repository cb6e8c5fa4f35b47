#pragma once

#include <span>
#include <utility>
#include <vector>

#include "p6c4/decomposition.hpp"
#include "p6c4/graph.hpp"

namespace p6c4 {

// Total map vertex -> color in 1..palette.
class Coloring {
 public:
  Coloring() = default;
  // Throws InvalidArgument if any color is < 1.
  explicit Coloring(std::vector<int> colors);

  int order() const { return static_cast<int>(colors_.size()); }
  int palette() const { return palette_; }
  int operator[](VertexId v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int palette_ = 0;
};

// Relabels colors to 1..k in order of first appearance.
Coloring compact(const Coloring& c);

// Colors 1..n. Throws InvalidArgument when g is not complete.
Coloring color_clique(const Graph& g);

// Colors the blow-up by peeling layers: within each connected piece of the
// pattern, one vertex of every non-empty class forms a copy of an induced
// subgraph of the pattern, which gets an optimal coloring on a fresh range of
// colors. The clique part takes the colors after that. Uses at most
// floor(3/2 * omega) colors. Throws InvalidArgument if `leaf` does not describe g.
Coloring color_blowup_leaf(const Graph& g, const LeafJoinBlowup& leaf);

// Merges colorings of G[H1 + K] and G[H2 + K] into a coloring of the parent.
// `to_parent1/2` map child vertices to parent ids; the shared parent ids form
// K. The second coloring is permuted to agree with the first on K and the
// rest of its palette is sent, in increasing order, to the smallest unused
// colors. The palette is max(palette1, palette2). Throws InvalidArgument when
// the children do not cover the parent or K is not colored injectively.
Coloring combine_on_clique_cutset(const Coloring& first, std::span<const VertexId> to_parent1,
                                  const Coloring& second, std::span<const VertexId> to_parent2,
                                  int parent_order);

// `child` colors G - v with the indexing produced by remove_vertex; v takes
// the smallest color missing from its neighborhood.
Coloring reinsert_vertex(const Coloring& child, const Graph& g, VertexId v);

// Bottom-up evaluation of a decomposition tree.
Coloring color_tree(const DecompTree& tree);

// Colors each component through its decomposition tree; component colorings
// share the palette. Always proper; at most floor(3/2 * omega) colors when g
// is (P6, C4)-free.
Coloring approx_color(const Graph& g);

// ---- exact oracles ---------------------------------------------------------

struct CliqueResult {
  int size = 0;
  VertexSet witness;
};

// Branch and bound over a degeneracy order with greedy-coloring bounds.
// Throws LimitExceeded when g.order() > limit.
CliqueResult max_clique_bruteforce(const Graph& g, int limit = 24);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

// DSATUR branch and bound seeded with the clique lower bound. Throws
// LimitExceeded when g.order() > limit.
ChromaticResult chromatic_number_bruteforce(const Graph& g, int limit = 20);

// floor(3/2 * omega)
inline int ratio_bound(int omega) { return 3 * omega / 2; }

// Throws InvalidArgument when c does not cover exactly g's vertices.
bool verify_coloring(const Graph& g, const Coloring& c);
// palette <= floor(3/2 * omega) with omega from the clique oracle.
bool verify_ratio(const Graph& g, const Coloring& c, int clique_limit = 24);

}  // namespace p6c4
