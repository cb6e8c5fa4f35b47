#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "p6c4/graph.hpp"

namespace p6c4 {

// Partition of V into true-twin classes: adjacent vertices with the same
// closed neighborhood. Classes are ordered by smallest member; class i is
// represented by skeleton vertex i.
struct TwinPartition {
  std::vector<VertexSet> classes;
  std::vector<int> class_of;  // vertex -> class index
  Graph skeleton;             // induced on the smallest member of each class
};

TwinPartition twin_partition(const Graph& g);

// Lowest-index vertex of minimum degree. Throws on the empty graph.
VertexId min_degree_vertex(const Graph& g);
VertexSet universal_vertices(const Graph& g);

// A clique K with G - K disconnected, or nothing when G is an atom. Uses a
// minimal elimination ordering (MCS-M) and tests the higher neighborhood of
// each vertex in elimination order. Throws InvalidArgument if G is
// disconnected.
std::optional<VertexSet> find_clique_cutset(const Graph& g);
bool is_atom(const Graph& g);
// True iff K is a clique and G - K has more components than G.
bool is_clique_cutset(const Graph& g, const VertexSet& k);

enum class SkeletonKind { kPetersen, kF };
std::string_view to_string(SkeletonKind kind);
const Graph& skeleton_pattern(SkeletonKind kind);

bool is_petersen(const Graph& g);
bool is_f_graph(const Graph& g);

// join(blow_up(pattern, sizes), K_|clique_part|) laid out on a concrete
// graph: classes[p] holds the vertices blown up from pattern vertex p.
struct LeafJoinBlowup {
  SkeletonKind kind = SkeletonKind::kPetersen;
  std::vector<VertexSet> classes;
  VertexSet clique_part;

  std::vector<int> class_sizes() const;
};

// True iff `leaf` describes g exactly (covering, cliques, complete or
// anti-complete classes per the pattern, universal clique part).
bool verify_join_blowup(const Graph& g, const LeafJoinBlowup& leaf);

// Strips universal vertices, partitions the rest into twin classes and
// matches the skeleton against Petersen and F. Precondition: g is an atom and
// not a clique (InvalidArgument otherwise).
std::optional<LeafJoinBlowup> classify_strong_atom_leaf(const Graph& g);

// Same test without the precondition checks.
std::optional<LeafJoinBlowup> match_join_blowup(const Graph& g);

struct OracleLimits {
  int clique = 24;
  int chromatic = 20;
};

struct AtomClassification {
  enum class Kind { kSmall, kUniversal, kPetersenBlowup, kFBlowup, kNotInClass };
  Kind kind = Kind::kNotInClass;
  VertexId vertex = -1;               // kSmall / kUniversal
  std::optional<TwinPartition> twins;  // blow-up cases
  std::vector<VertexId> skeleton_embedding;  // pattern vertex -> skeleton vertex
  int omega = 0;
};
std::string_view to_string(AtomClassification::Kind kind);

// Checks the four outcomes in order (small, universal, Petersen blow-up,
// F blow-up) and returns the first verified one. Needs the exact clique
// number, so g.order() must be within limits.clique.
AtomClassification classify_atom(const Graph& g, const OracleLimits& limits = {});

// ---- decomposition tree ----------------------------------------------------

struct DecompNode;

// children are G[H1 + K] and G[rest + K]. An empty cutset splits a
// disconnected graph into its first component and the rest.
struct CutsetSplit {
  VertexSet cutset;  // node-local ids
  std::unique_ptr<DecompNode> left;
  std::unique_ptr<DecompNode> right;
};

struct SmallRemoval {
  VertexId vertex = -1;  // node-local id; child is G - vertex
  std::unique_ptr<DecompNode> child;
};

struct LeafClique {
  int size = 0;
};

struct DecompNode {
  Graph graph;
  std::vector<VertexId> to_root;  // node-local id -> root id
  std::variant<CutsetSplit, SmallRemoval, LeafClique, LeafJoinBlowup> content;

  bool is_leaf() const { return content.index() >= 2; }
};

struct DecompTree {
  std::unique_ptr<DecompNode> root;
  int root_order = 0;

  std::size_t internal_nodes() const;
  std::size_t leaves() const;
  std::size_t depth() const;
};

// Builds T(G) for a connected graph: clique cutset split first, then clique
// leaf, then join-blow-up leaf, otherwise removal of the minimum-degree
// vertex. Terminates for every input. Throws InvalidArgument when g is
// disconnected.
DecompTree build_decomposition_tree(const Graph& g);

}  // namespace p6c4
