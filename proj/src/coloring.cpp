#include "p6c4/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "p6c4/error.hpp"

namespace p6c4 {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1) throw InvalidArgument("vertex " + std::to_string(v) + " has no color");
    palette_ = std::max(palette_, colors_[v]);
  }
}

Coloring compact(const Coloring& c) {
  std::map<int, int> relabel;
  std::vector<int> out(c.order());
  for (VertexId v = 0; v < c.order(); ++v) {
    auto [it, inserted] = relabel.emplace(c[v], static_cast<int>(relabel.size()) + 1);
    out[v] = it->second;
  }
  return Coloring(std::move(out));
}

Coloring color_clique(const Graph& g) {
  if (!is_complete_graph(g)) throw InvalidArgument("color_clique needs a complete graph");
  std::vector<int> colors(g.order());
  for (VertexId v = 0; v < g.order(); ++v) colors[v] = v + 1;
  return Coloring(std::move(colors));
}

namespace {

using Mask = std::uint32_t;

class LayerPeeler {
 public:
  LayerPeeler(const Graph& g, const LeafJoinBlowup& leaf)
      : leaf_(leaf), pattern_(skeleton_pattern(leaf.kind)), colors_(g.order(), 0),
        next_(leaf.classes.size(), 0) {}

  Coloring run() {
    Mask all = 0;
    for (std::size_t p = 0; p < leaf_.classes.size(); ++p) all |= Mask{1} << p;
    const int used = peel(all, 0);
    int c = used;
    for (VertexId v : leaf_.clique_part) colors_[v] = ++c;
    return Coloring(std::move(colors_));
  }

 private:
  std::vector<Mask> components(Mask mask) const {
    std::vector<Mask> out;
    while (mask) {
      Mask comp = mask & (~mask + 1);
      Mask frontier = comp;
      while (frontier) {
        const int p = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        for (VertexId q : pattern_.neighbors(p)) {
          const Mask bit = Mask{1} << q;
          if ((mask & bit) && !(comp & bit)) {
            comp |= bit;
            frontier |= bit;
          }
        }
      }
      out.push_back(comp);
      mask &= ~comp;
    }
    return out;
  }

  // Optimal coloring of pattern[mask], indexed by pattern vertex.
  const std::vector<int>& layer_coloring(Mask mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<VertexId> members;
    for (int p = 0; p < pattern_.order(); ++p) {
      if (mask & (Mask{1} << p)) members.push_back(p);
    }
    const auto sub = induced_subgraph(pattern_, members).first;
    const auto exact = chromatic_number_bruteforce(sub, pattern_.order());
    std::vector<int> by_pattern(pattern_.order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) by_pattern[members[i]] = exact.coloring[static_cast<VertexId>(i)];
    return memo_.emplace(mask, std::move(by_pattern)).first->second;
  }

  // Colors every remaining vertex of the classes in `mask` with colors
  // offset+1.. and returns how many it used. Connected pieces of the pattern
  // share the same range.
  int peel(Mask mask, int offset) {
    if (mask == 0) return 0;
    const auto comps = components(mask);
    if (comps.size() > 1) {
      int used = 0;
      for (Mask c : comps) used = std::max(used, peel(c, offset));
      return used;
    }
    int used = 0;
    for (;;) {
      const auto& layer = layer_coloring(mask);
      int layer_colors = 0;
      Mask remaining = 0;
      for (int p = 0; p < pattern_.order(); ++p) {
        if (!(mask & (Mask{1} << p))) continue;
        colors_[leaf_.classes[p][next_[p]++]] = offset + used + layer[p];
        layer_colors = std::max(layer_colors, layer[p]);
        if (next_[p] < leaf_.classes[p].size()) remaining |= Mask{1} << p;
      }
      used += layer_colors;
      if (remaining != mask) return used + peel(remaining, offset + used);
    }
  }

  const LeafJoinBlowup& leaf_;
  const Graph& pattern_;
  std::vector<int> colors_;
  std::vector<std::size_t> next_;
  std::map<Mask, std::vector<int>> memo_;
};

}  // namespace

Coloring color_blowup_leaf(const Graph& g, const LeafJoinBlowup& leaf) {
  if (!verify_join_blowup(g, leaf)) throw InvalidArgument("leaf structure does not describe the graph");
  return LayerPeeler(g, leaf).run();
}

Coloring combine_on_clique_cutset(const Coloring& first, std::span<const VertexId> to_parent1,
                                  const Coloring& second, std::span<const VertexId> to_parent2,
                                  int parent_order) {
  if (static_cast<int>(to_parent1.size()) != first.order() ||
      static_cast<int>(to_parent2.size()) != second.order()) {
    throw InvalidArgument("child coloring and vertex map sizes differ");
  }
  std::vector<int> colors(parent_order, 0);
  for (VertexId i = 0; i < first.order(); ++i) {
    const VertexId p = to_parent1[i];
    if (p < 0 || p >= parent_order) throw InvalidArgument("vertex map leaves the parent graph");
    colors[p] = first[i];
  }
  const int palette = std::max(first.palette(), second.palette());
  std::vector<int> image(second.palette() + 1, 0);
  std::vector<char> taken(palette + 1, 0);
  for (VertexId i = 0; i < second.order(); ++i) {
    const VertexId p = to_parent2[i];
    if (p < 0 || p >= parent_order) throw InvalidArgument("vertex map leaves the parent graph");
    if (colors[p] == 0) continue;
    // p is in the cutset
    const int from = second[i];
    const int to = colors[p];
    if (image[from] != 0 || taken[to]) throw InvalidArgument("cutset is not colored injectively by both children");
    image[from] = to;
    taken[to] = 1;
  }
  int free_color = 1;
  for (int from = 1; from <= second.palette(); ++from) {
    if (image[from] != 0) continue;
    while (taken[free_color]) ++free_color;
    image[from] = free_color;
    taken[free_color] = 1;
  }
  for (VertexId i = 0; i < second.order(); ++i) {
    const VertexId p = to_parent2[i];
    if (colors[p] == 0) colors[p] = image[second[i]];
  }
  for (VertexId p = 0; p < parent_order; ++p) {
    if (colors[p] == 0) throw InvalidArgument("children do not cover the parent graph");
  }
  return Coloring(std::move(colors));
}

Coloring reinsert_vertex(const Coloring& child, const Graph& g, VertexId v) {
  if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the graph");
  if (child.order() != g.order() - 1) throw InvalidArgument("child coloring does not match G - v");
  std::vector<int> colors(g.order());
  for (VertexId u = 0; u < g.order(); ++u) {
    if (u != v) colors[u] = child[u < v ? u : u - 1];
  }
  std::vector<char> seen(g.degree(v) + 2, 0);
  for (VertexId u : g.neighbors(v)) {
    if (colors[u] < static_cast<int>(seen.size())) seen[colors[u]] = 1;
  }
  int c = 1;
  while (seen[c]) ++c;
  colors[v] = c;
  return Coloring(std::move(colors));
}

namespace {

// Both lists are increasing root ids; the child's is a subsequence.
std::vector<VertexId> child_to_parent(const DecompNode& parent, const DecompNode& child) {
  std::vector<VertexId> out(child.to_root.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < child.to_root.size(); ++i) {
    while (j < parent.to_root.size() && parent.to_root[j] != child.to_root[i]) ++j;
    if (j == parent.to_root.size()) throw InternalError("child vertex missing from parent");
    out[i] = static_cast<VertexId>(j);
  }
  return out;
}

Coloring evaluate(const DecompNode& node) {
  if (std::holds_alternative<LeafClique>(node.content)) return color_clique(node.graph);
  if (const auto* leaf = std::get_if<LeafJoinBlowup>(&node.content)) return color_blowup_leaf(node.graph, *leaf);
  if (const auto* r = std::get_if<SmallRemoval>(&node.content)) {
    return reinsert_vertex(evaluate(*r->child), node.graph, r->vertex);
  }
  const auto& s = std::get<CutsetSplit>(node.content);
  const auto map1 = child_to_parent(node, *s.left);
  const auto map2 = child_to_parent(node, *s.right);
  return combine_on_clique_cutset(evaluate(*s.left), map1, evaluate(*s.right), map2, node.graph.order());
}

}  // namespace

Coloring color_tree(const DecompTree& tree) {
  if (!tree.root) return Coloring();
  return evaluate(*tree.root);
}

Coloring approx_color(const Graph& g) {
  std::vector<int> colors(g.order(), 0);
  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp).first;
    const Coloring c = color_tree(build_decomposition_tree(sub));
    for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = c[static_cast<VertexId>(i)];
  }
  return Coloring(std::move(colors));
}

// ---- oracles --------------------------------------------------------------------

namespace {

// Smallest-last order reversed: dense cores first.
std::vector<VertexId> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<VertexId> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    VertexId best = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    }
    removed[best] = 1;
    order.push_back(best);
    for (VertexId u : g.neighbors(best)) {
      if (!removed[u]) --deg[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : order_(degeneracy_order(g)) {
    const int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order_[i]] = i;
    adj_.assign(n, Bitset(n));
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId u : g.neighbors(v)) adj_[pos[v]].set(pos[u]);
    }
  }

  CliqueResult run() {
    const int n = static_cast<int>(adj_.size());
    if (n > 0) expand(~Bitset(n));
    CliqueResult out;
    out.size = static_cast<int>(best_.size());
    for (int i : best_) out.witness.push_back(order_[i]);
    std::sort(out.witness.begin(), out.witness.end());
    return out;
  }

 private:
  void expand(Bitset candidates) {
    std::vector<int> seq;
    std::vector<int> bound;
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        q -= adj_[v];
        uncolored.reset(v);
        seq.push_back(static_cast<int>(v));
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const int v = seq[i];
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<VertexId> order_;
  std::vector<Bitset> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const CliqueResult& clique) : g_(g), n_(g.order()) {
    colors_.assign(n_, 0);
    conflicts_.assign(n_, std::vector<int>(n_ + 2, 0));
    lower_ = clique.size;
    int c = 0;
    for (VertexId v : clique.witness) assign(v, ++c);
    used_ = c;
    colored_ = c;
  }

  ChromaticResult run() {
    best_ = greedy();
    upper_ = *std::max_element(best_.begin(), best_.end());
    if (upper_ > lower_) search();
    return {upper_, Coloring(best_)};
  }

 private:
  void assign(VertexId v, int c) {
    colors_[v] = c;
    for (VertexId u : g_.neighbors(v)) ++conflicts_[u][c];
  }
  void unassign(VertexId v) {
    const int c = colors_[v];
    for (VertexId u : g_.neighbors(v)) --conflicts_[u][c];
    colors_[v] = 0;
  }
  int saturation(VertexId v, int up_to) const {
    int s = 0;
    for (int c = 1; c <= up_to; ++c) s += conflicts_[v][c] > 0;
    return s;
  }
  VertexId pick() const {
    VertexId best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexId v = 0; v < n_; ++v) {
      if (colors_[v]) continue;
      const int sat = saturation(v, used_);
      int deg = 0;
      for (VertexId u : g_.neighbors(v)) deg += colors_[u] == 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  // DSATUR from the current partial coloring.
  std::vector<int> greedy() {
    std::vector<VertexId> stack;
    const int saved_used = used_;
    const int saved_colored = colored_;
    while (colored_ < n_) {
      const VertexId v = pick();
      int c = 1;
      while (conflicts_[v][c]) ++c;
      assign(v, c);
      used_ = std::max(used_, c);
      ++colored_;
      stack.push_back(v);
    }
    std::vector<int> out = colors_;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) unassign(*it);
    used_ = saved_used;
    colored_ = saved_colored;
    return out;
  }

  void search() {
    if (colored_ == n_) {
      if (used_ < upper_) {
        upper_ = used_;
        best_ = colors_;
      }
      return;
    }
    const VertexId v = pick();
    const int top = std::min(used_ + 1, upper_ - 1);
    for (int c = 1; c <= top && upper_ > lower_; ++c) {
      if (conflicts_[v][c]) continue;
      const int saved = used_;
      assign(v, c);
      used_ = std::max(used_, c);
      ++colored_;
      search();
      --colored_;
      used_ = saved;
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> conflicts_;
  std::vector<int> best_;
  int lower_ = 0;
  int upper_ = 0;
  int used_ = 0;
  int colored_ = 0;
};

}  // namespace

CliqueResult max_clique_bruteforce(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw LimitExceeded("clique oracle: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                        std::to_string(limit) + "; skip bound verification or raise the limit");
  }
  return CliqueSearch(g).run();
}

ChromaticResult chromatic_number_bruteforce(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw LimitExceeded("chromatic oracle: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                        std::to_string(limit));
  }
  if (g.empty()) return {0, Coloring()};
  const auto clique = max_clique_bruteforce(g, g.order());
  return ColoringSearch(g, clique).run();
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) {
    throw InvalidArgument("coloring covers " + std::to_string(c.order()) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

bool verify_ratio(const Graph& g, const Coloring& c, int clique_limit) {
  if (c.order() != g.order()) throw InvalidArgument("coloring does not cover the graph");
  return c.palette() <= ratio_bound(max_clique_bruteforce(g, clique_limit).size);
}

}  // namespace p6c4
