#include "p6c4/decomposition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "p6c4/coloring.hpp"
#include "p6c4/error.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/patterns.hpp"

namespace p6c4 {

TwinPartition twin_partition(const Graph& g) {
  const int n = g.order();
  TwinPartition tp;
  tp.class_of.assign(n, -1);
  std::map<Bitset, int> by_closed_neighborhood;
  for (VertexId v = 0; v < n; ++v) {
    Bitset closed = g.row(v);
    closed.set(v);
    auto [it, inserted] = by_closed_neighborhood.emplace(std::move(closed), static_cast<int>(tp.classes.size()));
    if (inserted) tp.classes.emplace_back();
    tp.class_of[v] = it->second;
    tp.classes[it->second].push_back(v);
  }
  VertexSet reps;
  reps.reserve(tp.classes.size());
  for (const auto& cls : tp.classes) reps.push_back(cls.front());
  tp.skeleton = induced_subgraph(g, reps).first;
  return tp;
}

VertexId min_degree_vertex(const Graph& g) {
  if (g.empty()) throw InvalidArgument("minimum degree vertex of the empty graph");
  VertexId best = 0;
  for (VertexId v = 1; v < g.order(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  }
  return out;
}

namespace {

// Minimal elimination ordering by MCS-M. Returns the elimination order
// (first eliminated first) and, per vertex, its later neighbors in the
// minimal triangulation.
struct EliminationOrdering {
  std::vector<VertexId> order;
  std::vector<Bitset> later;
};

EliminationOrdering mcs_m(const Graph& g) {
  const int n = g.order();
  EliminationOrdering eo;
  eo.order.assign(n, -1);
  eo.later.assign(n, Bitset(n));
  std::vector<int> weight(n, 0);
  Bitset numbered(n);
  std::vector<std::vector<VertexId>> buckets(n + 1);
  std::vector<VertexId> raised;
  for (int pos = n - 1; pos >= 0; --pos) {
    VertexId v = -1;
    for (VertexId u = 0; u < n; ++u) {
      if (!numbered.test(u) && (v < 0 || weight[u] > weight[v])) v = u;
    }
    numbered.set(v);
    eo.order[pos] = v;

    // u gets raised when some path v..u through unnumbered vertices has all
    // inner vertices lighter than u.
    Bitset reached = numbered;
    raised.clear();
    for (auto& b : buckets) b.clear();
    for (VertexId u : g.neighbors(v)) {
      if (reached.test(u)) continue;
      reached.set(u);
      raised.push_back(u);
      buckets[weight[u]].push_back(u);
    }
    for (int level = 0; level <= n; ++level) {
      while (!buckets[level].empty()) {
        const VertexId x = buckets[level].back();
        buckets[level].pop_back();
        for (VertexId z : g.neighbors(x)) {
          if (reached.test(z)) continue;
          reached.set(z);
          if (weight[z] > level) {
            raised.push_back(z);
            buckets[weight[z]].push_back(z);
          } else {
            buckets[level].push_back(z);
          }
        }
      }
    }
    for (VertexId u : raised) {
      ++weight[u];
      eo.later[u].set(v);
    }
  }
  return eo;
}

bool separates(const Graph& g, const Bitset& k) {
  Bitset rest = ~k;
  return connected_components(g, rest).size() > connected_components(g, g.full_set()).size();
}

Bitset neighborhood(const Graph& g, const Bitset& c) {
  Bitset out(g.order());
  for (auto v = c.find_first(); v != Bitset::npos; v = c.find_next(v)) out |= g.row(static_cast<VertexId>(v));
  return out - c;
}

// madj(x) can be larger than needed. N(C) for the component C of x still
// separates, and so does N(D) for another component D of G - N(C).
Bitset tighten(const Graph& g, const Bitset& k, VertexId x) {
  Bitset s = k;
  for (const auto& c : connected_components(g, ~k)) {
    if (c.test(x)) {
      s = neighborhood(g, c);
      break;
    }
  }
  for (const auto& d : connected_components(g, ~s)) {
    if (!d.test(x)) return neighborhood(g, d);
  }
  return s;
}

}  // namespace

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("clique cutset search needs a connected graph");
  if (g.order() < 3) return std::nullopt;
  const auto eo = mcs_m(g);
  for (VertexId x : eo.order) {
    const Bitset& s = eo.later[x];
    if (s.none() || !is_clique(g, s)) continue;
    if (connected_components(g, ~s).size() > 1) return to_vertex_set(tighten(g, s, x));
  }
  return std::nullopt;
}

bool is_atom(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    if (find_clique_cutset(induced_subgraph(g, comp).first)) return false;
  }
  return true;
}

bool is_clique_cutset(const Graph& g, const VertexSet& k) {
  const Bitset bits = to_bitset(g, k);
  return is_clique(g, bits) && separates(g, bits);
}

std::string_view to_string(SkeletonKind kind) {
  return kind == SkeletonKind::kPetersen ? "petersen" : "f";
}

const Graph& skeleton_pattern(SkeletonKind kind) {
  static const Graph kPetersen = petersen();
  static const Graph kF = f_graph();
  return kind == SkeletonKind::kPetersen ? kPetersen : kF;
}

bool is_petersen(const Graph& g) {
  return find_isomorphism(g, skeleton_pattern(SkeletonKind::kPetersen)).has_value();
}

bool is_f_graph(const Graph& g) {
  return find_isomorphism(g, skeleton_pattern(SkeletonKind::kF)).has_value();
}

std::vector<int> LeafJoinBlowup::class_sizes() const {
  std::vector<int> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

bool verify_join_blowup(const Graph& g, const LeafJoinBlowup& leaf) {
  const Graph& pattern = skeleton_pattern(leaf.kind);
  const int n = g.order();
  if (static_cast<int>(leaf.classes.size()) != pattern.order()) return false;
  Bitset covered(n);
  std::vector<Bitset> class_bits(leaf.classes.size(), Bitset(n));
  for (std::size_t p = 0; p < leaf.classes.size(); ++p) {
    if (leaf.classes[p].empty()) return false;
    for (VertexId v : leaf.classes[p]) {
      if (!g.contains(v) || covered.test(v)) return false;
      covered.set(v);
      class_bits[p].set(v);
    }
  }
  Bitset universal(n);
  for (VertexId v : leaf.clique_part) {
    if (!g.contains(v) || covered.test(v)) return false;
    covered.set(v);
    universal.set(v);
  }
  if (!covered.all()) return false;
  for (VertexId v : leaf.clique_part) {
    if (g.degree(v) != n - 1) return false;
  }
  for (VertexId p = 0; p < pattern.order(); ++p) {
    Bitset expected = class_bits[p] | universal;
    for (VertexId q : pattern.neighbors(p)) expected |= class_bits[q];
    for (VertexId v : leaf.classes[p]) {
      Bitset closed = g.row(v);
      closed.set(v);
      if (closed != expected) return false;
    }
  }
  return true;
}

std::optional<LeafJoinBlowup> match_join_blowup(const Graph& g) {
  const VertexSet universal = universal_vertices(g);
  const int n = g.order();
  if (static_cast<int>(universal.size()) == n) return std::nullopt;
  Bitset rest = ~to_bitset(g, universal);
  auto [stripped, map] = induced_subgraph(g, rest);
  const TwinPartition tp = twin_partition(stripped);
  const int k = tp.skeleton.order();
  std::optional<SkeletonKind> kind;
  std::optional<InducedEmbedding> iso;
  for (SkeletonKind candidate : {SkeletonKind::kPetersen, SkeletonKind::kF}) {
    if (skeleton_pattern(candidate).order() != k) continue;
    iso = find_isomorphism(tp.skeleton, skeleton_pattern(candidate));
    if (iso) {
      kind = candidate;
      break;
    }
  }
  if (!kind) return std::nullopt;
  LeafJoinBlowup leaf;
  leaf.kind = *kind;
  leaf.clique_part = universal;
  leaf.classes.resize(k);
  for (int p = 0; p < k; ++p) {
    for (VertexId v : tp.classes[(*iso)[p]]) leaf.classes[p].push_back(map.new_to_old[v]);
  }
  if (!verify_join_blowup(g, leaf)) throw InternalError("twin partition produced an inconsistent blow-up");
  return leaf;
}

std::optional<LeafJoinBlowup> classify_strong_atom_leaf(const Graph& g) {
  if (g.empty()) throw InvalidArgument("leaf classification of the empty graph");
  if (is_complete_graph(g)) throw InvalidArgument("leaf classification needs a graph that is not a clique");
  if (!is_connected(g) || find_clique_cutset(g)) {
    throw InvalidArgument("leaf classification needs an atom");
  }
  return match_join_blowup(g);
}

std::string_view to_string(AtomClassification::Kind kind) {
  switch (kind) {
    case AtomClassification::Kind::kSmall: return "small";
    case AtomClassification::Kind::kUniversal: return "universal";
    case AtomClassification::Kind::kPetersenBlowup: return "petersen_blowup";
    case AtomClassification::Kind::kFBlowup: return "f_blowup";
    case AtomClassification::Kind::kNotInClass: return "not_in_class";
  }
  return "?";
}

AtomClassification classify_atom(const Graph& g, const OracleLimits& limits) {
  if (g.empty()) throw InvalidArgument("atom classification of the empty graph");
  AtomClassification out;
  out.omega = max_clique_bruteforce(g, limits.clique).size;
  const VertexId v = min_degree_vertex(g);
  // d(v) <= 3/2 omega - 1, kept in integers
  if (2 * g.degree(v) + 2 <= 3 * out.omega) {
    out.kind = AtomClassification::Kind::kSmall;
    out.vertex = v;
    return out;
  }
  const VertexSet universal = universal_vertices(g);
  if (!universal.empty()) {
    out.kind = AtomClassification::Kind::kUniversal;
    out.vertex = universal.front();
    return out;
  }
  TwinPartition tp = twin_partition(g);
  for (SkeletonKind kind : {SkeletonKind::kPetersen, SkeletonKind::kF}) {
    if (auto iso = find_isomorphism(tp.skeleton, skeleton_pattern(kind))) {
      out.kind = kind == SkeletonKind::kPetersen ? AtomClassification::Kind::kPetersenBlowup
                                                 : AtomClassification::Kind::kFBlowup;
      out.skeleton_embedding = std::move(*iso);
      out.twins = std::move(tp);
      return out;
    }
  }
  return out;
}

// ---- tree ---------------------------------------------------------------------

namespace {

std::unique_ptr<DecompNode> make_child(const DecompNode& parent, const Bitset& keep) {
  auto [graph, map] = induced_subgraph(parent.graph, keep);
  auto child = std::make_unique<DecompNode>();
  child->to_root.reserve(map.new_to_old.size());
  for (VertexId v : map.new_to_old) child->to_root.push_back(parent.to_root[v]);
  child->graph = std::move(graph);
  return child;
}

void expand(DecompNode& node);

void split(DecompNode& node, const Bitset& cutset) {
  const Graph& g = node.graph;
  const auto parts = connected_components(g, ~cutset);
  if (parts.size() < 2) throw InternalError("cutset does not separate");
  const Bitset left = parts.front() | cutset;
  const Bitset right = ~parts.front();
  CutsetSplit s;
  s.cutset = to_vertex_set(cutset);
  s.left = make_child(node, left);
  s.right = make_child(node, right);
  expand(*s.left);
  expand(*s.right);
  node.content = std::move(s);
}

void expand(DecompNode& node) {
  const Graph& g = node.graph;
  if (g.empty()) throw InternalError("empty node in decomposition tree");
  if (connected_components(g, g.full_set()).size() > 1) {
    split(node, g.empty_set());
    return;
  }
  if (auto k = find_clique_cutset(g)) {
    split(node, to_bitset(g, *k));
    return;
  }
  if (is_complete_graph(g)) {
    node.content = LeafClique{g.order()};
    return;
  }
  if (auto leaf = match_join_blowup(g)) {
    node.content = std::move(*leaf);
    return;
  }
  SmallRemoval r;
  r.vertex = min_degree_vertex(g);
  Bitset keep = g.full_set();
  keep.reset(r.vertex);
  r.child = make_child(node, keep);
  expand(*r.child);
  node.content = std::move(r);
}

template <class Fn>
void visit(const DecompNode& node, std::size_t depth, Fn&& fn) {
  fn(node, depth);
  if (const auto* s = std::get_if<CutsetSplit>(&node.content)) {
    visit(*s->left, depth + 1, fn);
    visit(*s->right, depth + 1, fn);
  } else if (const auto* r = std::get_if<SmallRemoval>(&node.content)) {
    visit(*r->child, depth + 1, fn);
  }
}

}  // namespace

DecompTree build_decomposition_tree(const Graph& g) {
  if (g.empty()) throw InvalidArgument("decomposition of the empty graph");
  if (!is_connected(g)) throw InvalidArgument("decomposition needs a connected graph");
  DecompTree tree;
  tree.root_order = g.order();
  tree.root = std::make_unique<DecompNode>();
  tree.root->graph = g;
  tree.root->to_root.resize(g.order());
  for (VertexId v = 0; v < g.order(); ++v) tree.root->to_root[v] = v;
  expand(*tree.root);
  return tree;
}

std::size_t DecompTree::internal_nodes() const {
  std::size_t count = 0;
  if (root) visit(*root, 0, [&](const DecompNode& n, std::size_t) { count += n.is_leaf() ? 0 : 1; });
  return count;
}

std::size_t DecompTree::leaves() const {
  std::size_t count = 0;
  if (root) visit(*root, 0, [&](const DecompNode& n, std::size_t) { count += n.is_leaf() ? 1 : 0; });
  return count;
}

std::size_t DecompTree::depth() const {
  std::size_t deepest = 0;
  if (root) visit(*root, 0, [&](const DecompNode&, std::size_t d) { deepest = std::max(deepest, d); });
  return deepest;
}

}  // namespace p6c4
