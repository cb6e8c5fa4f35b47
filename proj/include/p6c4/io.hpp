#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "p6c4/coloring.hpp"
#include "p6c4/decomposition.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/graph.hpp"
#include "p6c4/structure.hpp"

namespace p6c4 {

enum class GraphFormat { kAuto, kEdgeList, kDimacs };

// Edge list: optional "n <count>" header, then one "u v" pair per line,
// 0-based. Without a header n is one more than the largest id.
// DIMACS: "p edge n m" (or "p col n m") and "e u v" lines, 1-based.
// Both accept blank lines; '#' (edge list) and 'c' (DIMACS) start comments.
// kAuto picks DIMACS when the first meaningful line starts with 'p', 'e' or
// 'c'. Throws ParseError with the 1-based line number.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::kEdgeList);
GraphFormat parse_format_name(std::string_view name);  // "auto" | "edgelist" | "dimacs"

// "v c" lines (vertex 0-based, color >= 1), '#' comments; or the JSON
// object {"palette": k, "assignment": [c0, c1, ...]}.
Coloring parse_coloring(std::string_view text, int n);
std::string serialize_coloring(const Coloring& c);

nlohmann::json coloring_to_json(const Coloring& c);
// Vertex ids are the tree's root ids, passed through `relabel` when given.
nlohmann::json tree_to_json(const DecompTree& tree, std::span<const VertexId> relabel = {});
nlohmann::json violation_to_json(const PropertyViolation& v);
nlohmann::json audit_to_json(const AuditReport& r);
nlohmann::json graph_stats_json(const Graph& g);

void to_json(nlohmann::json& j, const CorpusSpec& spec);
void from_json(const nlohmann::json& j, CorpusSpec& spec);

// Undirected DOT; with a coloring, nodes are filled from the set312 scheme by
// color index.
std::string to_dot(const Graph& g, const Coloring* coloring = nullptr);

}  // namespace p6c4
