#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p6c4/decomposition.hpp"
#include "p6c4/graph.hpp"

namespace p6c4 {

// Vertices outside an induced cycle, bucketed by their exact neighborhood on
// it. Neighborhoods are bitmasks over cycle positions (bit i = cycle[i]).
struct CyclePartition {
  std::vector<VertexId> cycle;
  std::vector<std::uint32_t> mask_of;  // per vertex; 0 for cycle vertices too
  std::vector<bool> on_cycle;
  std::vector<VertexSet> buckets;      // indexed by mask, size 2^k
  std::vector<VertexSet> by_count;     // S_j for j = 0..k

  const VertexSet& bucket(std::uint32_t mask) const { return buckets.at(mask); }
};

// Throws InvalidArgument unless `cycle` is an induced cycle of g with at most
// 12 vertices.
CyclePartition partition_by_cycle(const Graph& g, const std::vector<VertexId>& cycle);

// A failed instance of one of the nine C5 neighborhood properties. Cycle
// labels 1..5 are cycle[0..4]; `rotation` is the label playing "i" (0-based)
// and `reversed` flips the orientation.
struct PropertyViolation {
  std::string property;  // "P1" .. "P9"
  int clause = 0;        // which sentence of a multi-part property
  int rotation = 0;
  bool reversed = false;
  std::vector<VertexId> witness;
  std::string reason;
};

// All violations over every rotation and both orientations, one per
// (property, clause, witness). Throws InvalidArgument unless `cycle` is an
// induced C5.
std::vector<PropertyViolation> check_c5_properties(const Graph& g, const std::vector<VertexId>& cycle);

// Re-derives the violation from the graph alone.
bool reverify_violation(const Graph& g, const std::vector<VertexId>& cycle, const PropertyViolation& v);

// Every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

struct AuditOptions {
  // Induced C5/C6 are enumerated exhaustively up to this many vertices and
  // sampled (first `sampled_cycles` found) above it.
  int enumeration_cap = 14;
  std::size_t sampled_cycles = 64;
  OracleLimits limits;
};

struct AuditReport {
  int n = 0;
  long long m = 0;
  bool connected = false;
  bool atom = false;
  std::optional<VertexSet> cutset;
  std::optional<std::vector<VertexId>> c4_witness;
  std::optional<std::vector<VertexId>> p6_witness;
  bool in_class = false;

  bool classified = false;
  AtomClassification::Kind kind = AtomClassification::Kind::kNotInClass;
  VertexId witness_vertex = -1;
  int omega = 0;
  bool classification_verified = false;
  std::string classification_note;

  bool exhaustive = false;
  int c5_checked = 0;
  int c5_non_dominating = 0;
  std::vector<PropertyViolation> violations;
  int c6_checked = 0;
  int c6_non_dominating = 0;
  bool c6_structure_ok = true;

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Atom test, class membership, classification with an independently
// re-checked witness, C5 properties and domination, and the C6 join
// structure. A certified (P6, C4)-free atom for which no case verifies is
// recorded in `failures`.
AuditReport audit_atom_classification(const Graph& g, const AuditOptions& options = {});

}  // namespace p6c4
