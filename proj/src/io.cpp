#include "p6c4/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "p6c4/error.hpp"
#include "p6c4/patterns.hpp"

namespace p6c4 {
namespace {

using nlohmann::json;

// Adjacency is dense, n^2 bits.
constexpr long long kMaxVertices = 1 << 16;
constexpr long long kMaxColor = std::numeric_limits<int>::max();

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

// Calls fn(line_number, tokens) for every non-blank line.
void for_each_line(std::string_view text, const std::function<void(int, const std::vector<std::string_view>&)>& fn) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    const auto t = tokens(text.substr(pos, end - pos));
    if (!t.empty()) fn(number, t);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Graph parse_edge_list(std::string_view text) {
  long long declared = -1;
  bool seen_edge = false;
  std::vector<std::pair<Edge, int>> edges;
  long long max_id = -1;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0].front() == '#') return;
    if (t[0] == "n") {
      if (declared >= 0 || seen_edge) throw ParseError("the 'n' header must come first and only once", line);
      if (t.size() != 2) throw ParseError("header must be 'n <count>'", line);
      declared = to_integer(t[1], line);
      if (declared < 0) throw ParseError("negative vertex count", line);
      if (declared > kMaxVertices) throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices", line);
      return;
    }
    if (t.size() != 2) throw ParseError("edge line must be 'u v'", line);
    const long long u = to_integer(t[0], line);
    const long long v = to_integer(t[1], line);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line);
    if (u >= kMaxVertices || v >= kMaxVertices) {
      throw ParseError("vertex id beyond the limit of " + std::to_string(kMaxVertices) + " vertices", line);
    }
    if (declared >= 0 && (u >= declared || v >= declared)) {
      throw ParseError("vertex id exceeds declared count " + std::to_string(declared), line);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
    seen_edge = true;
    max_id = std::max({max_id, u, v});
    edges.push_back({{static_cast<VertexId>(u), static_cast<VertexId>(v)}, line});
  });
  const long long n = declared >= 0 ? declared : max_id + 1;
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back(e.first);
  return Graph::from_edges(static_cast<int>(n), plain);
}

Graph parse_dimacs(std::string_view text) {
  long long declared = -1;
  std::vector<Edge> edges;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "c") return;
    if (t[0] == "p") {
      if (declared >= 0) throw ParseError("duplicate problem line", line);
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) throw ParseError("problem line must be 'p edge n m'", line);
      declared = to_integer(t[2], line);
      if (declared < 0 || to_integer(t[3], line) < 0) throw ParseError("negative count in problem line", line);
      if (declared > kMaxVertices) throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices", line);
      return;
    }
    if (t[0] == "e") {
      if (declared < 0) throw ParseError("edge before the problem line", line);
      if (t.size() != 3) throw ParseError("edge line must be 'e u v'", line);
      const long long u = to_integer(t[1], line);
      const long long v = to_integer(t[2], line);
      if (u < 1 || v < 1 || u > declared || v > declared) {
        throw ParseError("vertex id outside 1.." + std::to_string(declared), line);
      }
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line);
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      return;
    }
    throw ParseError("unknown line type '" + std::string(t[0]) + "'", line);
  });
  if (declared < 0) throw ParseError("missing problem line", 0);
  return Graph::from_edges(static_cast<int>(declared), edges);
}

GraphFormat detect(std::string_view text) {
  GraphFormat found = GraphFormat::kEdgeList;
  bool decided = false;
  for_each_line(text, [&](int, const std::vector<std::string_view>& t) {
    if (decided) return;
    decided = true;
    if (t[0] == "p" || t[0] == "e" || t[0] == "c") found = GraphFormat::kDimacs;
  });
  return found;
}

class TreeWriter {
 public:
  explicit TreeWriter(std::span<const VertexId> relabel) : relabel_(relabel) {}

  json node(const DecompNode& node) const;

 private:
  VertexId out_id(const DecompNode& node, VertexId local) const {
    const VertexId root = node.to_root[local];
    return relabel_.empty() ? root : relabel_[root];
  }
  json ids(const DecompNode& node, const std::vector<VertexId>& local) const {
    json out = json::array();
    for (VertexId v : local) out.push_back(out_id(node, v));
    return out;
  }

  std::span<const VertexId> relabel_;
};

json TreeWriter::node(const DecompNode& node) const {
  json j;
  j["n"] = node.graph.order();
  std::vector<VertexId> all(node.graph.order());
  for (VertexId v = 0; v < node.graph.order(); ++v) all[v] = v;
  j["vertices"] = ids(node, all);
  if (const auto* s = std::get_if<CutsetSplit>(&node.content)) {
    j["kind"] = "cutset_split";
    j["cutset"] = ids(node, s->cutset);
    j["left"] = this->node(*s->left);
    j["right"] = this->node(*s->right);
  } else if (const auto* r = std::get_if<SmallRemoval>(&node.content)) {
    j["kind"] = "small_removal";
    j["vertex"] = out_id(node, r->vertex);
    j["degree"] = node.graph.degree(r->vertex);
    j["child"] = this->node(*r->child);
  } else if (const auto* c = std::get_if<LeafClique>(&node.content)) {
    j["kind"] = "leaf_clique";
    j["size"] = c->size;
  } else {
    const auto& leaf = std::get<LeafJoinBlowup>(node.content);
    j["kind"] = "leaf_join_blowup";
    j["skeleton"] = std::string(to_string(leaf.kind));
    j["class_sizes"] = leaf.class_sizes();
    json classes = json::array();
    for (const auto& cls : leaf.classes) classes.push_back(ids(node, cls));
    j["classes"] = std::move(classes);
    j["clique_part"] = ids(node, leaf.clique_part);
  }
  return j;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = detect(text);
  try {
    return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::kDimacs) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << "n " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
  return out.str();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "dimacs" || name == "col") return GraphFormat::kDimacs;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

Coloring parse_coloring(std::string_view text, int n) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<int> colors(n, 0);
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("coloring JSON: ") + e.what(), 0);
    }
    if (!j.contains("assignment") || !j["assignment"].is_array()) {
      throw ParseError("coloring JSON needs an 'assignment' array", 0);
    }
    const auto& a = j["assignment"];
    if (static_cast<int>(a.size()) != n) {
      throw ParseError("assignment has " + std::to_string(a.size()) + " entries for " + std::to_string(n) + " vertices", 0);
    }
    for (int v = 0; v < n; ++v) {
      if (!a[v].is_number_integer() || a[v].get<long long>() < 1 || a[v].get<long long>() > kMaxColor) {
        throw ParseError("colors must be positive integers", 0);
      }
      colors[v] = a[v].get<int>();
    }
    return Coloring(std::move(colors));
  }
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0].front() == '#') return;
    if (t.size() != 2) throw ParseError("coloring line must be 'v c'", line);
    const long long v = to_integer(t[0], line);
    const long long c = to_integer(t[1], line);
    if (v < 0 || v >= n) throw ParseError("vertex id outside 0.." + std::to_string(n - 1), line);
    if (c < 1 || c > kMaxColor) throw ParseError("colors must be positive integers", line);
    if (colors[v] != 0) throw ParseError("vertex " + std::to_string(v) + " colored twice", line);
    colors[v] = static_cast<int>(c);
  });
  for (int v = 0; v < n; ++v) {
    if (colors[v] == 0) throw ParseError("vertex " + std::to_string(v) + " has no color", 0);
  }
  return Coloring(std::move(colors));
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  for (VertexId v = 0; v < c.order(); ++v) out << v << ' ' << c[v] << '\n';
  return out.str();
}

json coloring_to_json(const Coloring& c) {
  return json{{"palette", c.palette()}, {"assignment", c.colors()}};
}

json tree_to_json(const DecompTree& tree, std::span<const VertexId> relabel) {
  json j;
  j["root_order"] = tree.root_order;
  j["internal_nodes"] = tree.internal_nodes();
  j["leaves"] = tree.leaves();
  j["depth"] = tree.depth();
  j["root"] = tree.root ? TreeWriter(relabel).node(*tree.root) : json();
  return j;
}

json violation_to_json(const PropertyViolation& v) {
  return json{{"property", v.property}, {"clause", v.clause},   {"rotation", v.rotation + 1},
              {"reversed", v.reversed}, {"witness", v.witness}, {"reason", v.reason}};
}

json audit_to_json(const AuditReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  j["atom"] = r.atom;
  j["cutset"] = r.cutset ? json(*r.cutset) : json();
  j["c4_free"] = !r.c4_witness;
  j["p6_free"] = !r.p6_witness;
  j["c4_witness"] = r.c4_witness ? json(*r.c4_witness) : json();
  j["p6_witness"] = r.p6_witness ? json(*r.p6_witness) : json();
  j["in_class"] = r.in_class;
  json cls;
  cls["performed"] = r.classified;
  if (r.classified) {
    cls["kind"] = std::string(to_string(r.kind));
    cls["vertex"] = r.witness_vertex >= 0 ? json(r.witness_vertex) : json();
    cls["omega"] = r.omega;
    cls["verified"] = r.classification_verified;
  }
  if (!r.classification_note.empty()) cls["note"] = r.classification_note;
  j["classification"] = std::move(cls);
  j["exhaustive_cycles"] = r.exhaustive;
  j["c5_checked"] = r.c5_checked;
  j["c5_non_dominating"] = r.c5_non_dominating;
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(violation_to_json(v));
  j["violations"] = std::move(violations);
  j["c6_checked"] = r.c6_checked;
  j["c6_non_dominating"] = r.c6_non_dominating;
  j["c6_structure_ok"] = r.c6_structure_ok;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  return j;
}

json graph_stats_json(const Graph& g) {
  json j;
  const int n = g.order();
  j["n"] = n;
  j["m"] = g.size();
  std::vector<int> degrees(n);
  for (VertexId v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::vector<int> sorted = degrees;
  std::sort(sorted.rbegin(), sorted.rend());
  j["min_degree"] = n ? json(sorted.back()) : json();
  j["max_degree"] = n ? json(sorted.front()) : json();
  j["average_degree"] = n ? 2.0 * static_cast<double>(g.size()) / n : 0.0;
  j["degree_sequence"] = sorted;
  j["components"] = connected_components(g).size();
  j["universal_vertices"] = universal_vertices(g).size();
  const auto tp = twin_partition(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : tp.classes) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  j["twin_classes"] = tp.classes.size();
  j["twin_class_sizes"] = sizes;
  j["skeleton_order"] = tp.skeleton.order();
  j["skeleton_size"] = tp.skeleton.size();
  return j;
}

void to_json(nlohmann::json& j, const CorpusSpec& s) {
  j = json{{"seed", s.seed},
           {"random_count", s.random_count},
           {"random_n_min", s.random_n_min},
           {"random_n_max", s.random_n_max},
           {"random_p_min", s.random_p_min},
           {"random_p_max", s.random_p_max},
           {"max_attempts", s.max_attempts},
           {"blowup_count", s.blowup_count},
           {"class_size_max", s.class_size_max},
           {"clique_join_max", s.clique_join_max},
           {"constructive_n_max", s.constructive_n_max},
           {"chordal_count", s.chordal_count},
           {"chordal_n_min", s.chordal_n_min},
           {"chordal_n_max", s.chordal_n_max},
           {"union_count", s.union_count}};
}

void from_json(const nlohmann::json& j, CorpusSpec& s) {
  const CorpusSpec d;
  s.seed = j.value("seed", d.seed);
  s.random_count = j.value("random_count", d.random_count);
  s.random_n_min = j.value("random_n_min", d.random_n_min);
  s.random_n_max = j.value("random_n_max", d.random_n_max);
  s.random_p_min = j.value("random_p_min", d.random_p_min);
  s.random_p_max = j.value("random_p_max", d.random_p_max);
  s.max_attempts = j.value("max_attempts", d.max_attempts);
  s.blowup_count = j.value("blowup_count", d.blowup_count);
  s.class_size_max = j.value("class_size_max", d.class_size_max);
  s.clique_join_max = j.value("clique_join_max", d.clique_join_max);
  s.constructive_n_max = j.value("constructive_n_max", d.constructive_n_max);
  s.chordal_count = j.value("chordal_count", d.chordal_count);
  s.chordal_n_min = j.value("chordal_n_min", d.chordal_n_min);
  s.chordal_n_max = j.value("chordal_n_max", d.chordal_n_max);
  s.union_count = j.value("union_count", d.union_count);
}

std::string to_dot(const Graph& g, const Coloring* coloring) {
  if (coloring && coloring->order() != g.order()) throw InvalidArgument("coloring does not cover the graph");
  std::ostringstream out;
  out << "graph G {\n";
  if (coloring) out << "  node [colorscheme=set312, style=filled];\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (coloring) out << " [fillcolor=" << ((*coloring)[v] - 1) % 12 + 1 << ", label=\"" << v << ":" << (*coloring)[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace p6c4
