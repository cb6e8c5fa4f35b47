#include "p6c4/p6c4.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "p6c4/coloring.hpp"
#include "p6c4/decomposition.hpp"
#include "p6c4/error.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/io.hpp"
#include "p6c4/patterns.hpp"
#include "p6c4/structure.hpp"

struct p6c4_graph {
  p6c4::Graph graph;
};

struct p6c4_coloring {
  p6c4::Coloring coloring;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

constexpr int kDefaultOracleLimit = 24;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
p6c4_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return P6C4_OK;
  } catch (const p6c4::ParseError& e) {
    last_error = e.what();
    return P6C4_ERR_PARSE;
  } catch (const p6c4::InvalidArgument& e) {
    last_error = e.what();
    return P6C4_ERR_INVALID_ARGUMENT;
  } catch (const p6c4::LimitExceeded& e) {
    last_error = e.what();
    return P6C4_ERR_LIMIT;
  } catch (const IoError& e) {
    last_error = e.what();
    return P6C4_ERR_IO;
  } catch (const json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return P6C4_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return P6C4_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return P6C4_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw p6c4::InvalidArgument(std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

p6c4::GraphFormat to_format(p6c4_format f) {
  switch (f) {
    case P6C4_FORMAT_AUTO: return p6c4::GraphFormat::kAuto;
    case P6C4_FORMAT_EDGE_LIST: return p6c4::GraphFormat::kEdgeList;
    case P6C4_FORMAT_DIMACS: return p6c4::GraphFormat::kDimacs;
  }
  throw p6c4::InvalidArgument("unknown graph format");
}

int oracle_limit(const p6c4_options* o) {
  return o && o->oracle_limit > 0 ? o->oracle_limit : kDefaultOracleLimit;
}

// {omega, bound} when the clique oracle applies, nulls otherwise.
std::pair<json, json> omega_and_bound(const p6c4::Graph& g, int limit) {
  if (g.order() > limit) return {json(), json()};
  const int omega = p6c4::max_clique_bruteforce(g, limit).size;
  return {omega, p6c4::ratio_bound(omega)};
}

}  // namespace

extern "C" {

const char* p6c4_version(void) { return "1.0.0"; }

const char* p6c4_last_error(void) { return last_error.c_str(); }

const char* p6c4_status_name(p6c4_status status) {
  switch (status) {
    case P6C4_OK: return "ok";
    case P6C4_ERR_INVALID_ARGUMENT: return "invalid argument";
    case P6C4_ERR_PARSE: return "parse error";
    case P6C4_ERR_LIMIT: return "oracle limit exceeded";
    case P6C4_ERR_IO: return "i/o error";
    case P6C4_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void p6c4_string_free(char* s) { std::free(s); }

p6c4_options p6c4_default_options(void) { return p6c4_options{kDefaultOracleLimit, 0, 1}; }

p6c4_status p6c4_graph_parse(const char* text, size_t length, p6c4_format format, p6c4_graph** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    if (!text && length > 0) throw p6c4::InvalidArgument("text is null");
    auto g = p6c4::parse_graph(std::string_view(text ? text : "", length), to_format(format));
    *out = new p6c4_graph{std::move(g)};
  });
}

p6c4_status p6c4_graph_from_edges(int n, const int* edges, size_t edge_count, p6c4_graph** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    if (!edges && edge_count > 0) throw p6c4::InvalidArgument("edge array is null");
    std::vector<p6c4::Edge> list;
    list.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new p6c4_graph{p6c4::Graph::from_edges(n, list)};
  });
}

p6c4_status p6c4_graph_named(const char* name, int param, p6c4_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output handle");
    *out = nullptr;
    const std::string_view n(name);
    p6c4::Graph g;
    if (n == "petersen") g = p6c4::petersen();
    else if (n == "f") g = p6c4::f_graph();
    else if (n == "f1") g = p6c4::f1();
    else if (n == "f2") g = p6c4::f2();
    else if (n == "f3") g = p6c4::f3();
    else if (n == "cycle") g = p6c4::cycle(param);
    else if (n == "path") g = p6c4::path(param);
    else if (n == "complete") g = p6c4::complete_graph(param);
    else if (n == "tightness") g = p6c4::tightness_family(param);
    else throw p6c4::InvalidArgument("unknown named graph '" + std::string(n) + "'");
    *out = new p6c4_graph{std::move(g)};
  });
}

void p6c4_graph_free(p6c4_graph* g) { delete g; }

int p6c4_graph_order(const p6c4_graph* g) { return g ? g->graph.order() : -1; }

long long p6c4_graph_size(const p6c4_graph* g) { return g ? g->graph.size() : -1; }

int p6c4_graph_adjacent(const p6c4_graph* g, int u, int v) {
  if (!g || !g->graph.contains(u) || !g->graph.contains(v)) return -1;
  return g->graph.adjacent(u, v) ? 1 : 0;
}

p6c4_status p6c4_graph_serialize(const p6c4_graph* g, p6c4_format format, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    const auto f = format == P6C4_FORMAT_AUTO ? p6c4::GraphFormat::kEdgeList : to_format(format);
    *out = duplicate(p6c4::serialize_graph(g->graph, f));
  });
}

p6c4_status p6c4_graph_stats_json(const p6c4_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    *out = duplicate(p6c4::graph_stats_json(g->graph).dump());
  });
}

p6c4_status p6c4_export_dot(const p6c4_graph* g, const p6c4_coloring* coloring, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    *out = duplicate(p6c4::to_dot(g->graph, coloring ? &coloring->coloring : nullptr));
  });
}

p6c4_status p6c4_color(const p6c4_graph* g, p6c4_coloring** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output handle");
    *out = nullptr;
    auto c = p6c4::approx_color(g->graph);
    if (!p6c4::verify_coloring(g->graph, c)) throw p6c4::InternalError("pipeline produced an improper coloring");
    *out = new p6c4_coloring{std::move(c)};
  });
}

p6c4_status p6c4_color_report_json(const p6c4_graph* g, const p6c4_options* options, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    const auto& graph = g->graph;
    const auto c = p6c4::approx_color(graph);
    if (!p6c4::verify_coloring(graph, c)) throw p6c4::InternalError("pipeline produced an improper coloring");
    json j = p6c4::coloring_to_json(c);
    auto [omega, bound] = omega_and_bound(graph, oracle_limit(options));
    j["omega"] = omega;
    j["bound"] = bound;
    j["ratio_ok"] = bound.is_null() ? json() : json(c.palette() <= bound.get<int>());
    std::string guarantee = "unchecked";
    j["in_class"] = json();
    if (options && options->verify_class) {
      const bool in_class = p6c4::is_p6_c4_free(graph);
      j["in_class"] = in_class;
      if (!in_class) {
        guarantee = "not in class, no ratio guarantee";
      } else if (bound.is_null()) {
        guarantee = "in-class, omega not computed (graph exceeds the oracle limit)";
      } else if (c.palette() <= bound.get<int>()) {
        guarantee = "in-class, bound " + std::to_string(bound.get<int>()) + " satisfied";
      } else {
        throw p6c4::InternalError("palette " + std::to_string(c.palette()) + " exceeds the bound " +
                                  std::to_string(bound.get<int>()) + " on a (P6,C4)-free graph");
      }
    }
    j["guarantee"] = guarantee;
    *out = duplicate(j.dump());
  });
}

p6c4_status p6c4_coloring_parse(const char* text, size_t length, int n, p6c4_coloring** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    if (!text && length > 0) throw p6c4::InvalidArgument("text is null");
    if (n < 0) throw p6c4::InvalidArgument("negative vertex count");
    *out = new p6c4_coloring{p6c4::parse_coloring(std::string_view(text ? text : "", length), n)};
  });
}

p6c4_status p6c4_coloring_from_array(const int* colors, int n, p6c4_coloring** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    if (n < 0 || (!colors && n > 0)) throw p6c4::InvalidArgument("bad color array");
    *out = new p6c4_coloring{p6c4::Coloring(std::vector<int>(colors, colors + n))};
  });
}

void p6c4_coloring_free(p6c4_coloring* c) { delete c; }

int p6c4_coloring_order(const p6c4_coloring* c) { return c ? c->coloring.order() : -1; }

int p6c4_coloring_palette(const p6c4_coloring* c) { return c ? c->coloring.palette() : -1; }

int p6c4_coloring_color(const p6c4_coloring* c, int v) {
  if (!c || v < 0 || v >= c->coloring.order()) return -1;
  return c->coloring[v];
}

p6c4_status p6c4_coloring_serialize(const p6c4_coloring* c, int as_json, char** out) {
  return guarded([&] {
    require(c, "coloring");
    require(out, "output string");
    *out = duplicate(as_json ? p6c4::coloring_to_json(c->coloring).dump() : p6c4::serialize_coloring(c->coloring));
  });
}

p6c4_status p6c4_verify_coloring(const p6c4_graph* g, const p6c4_coloring* c, int* proper) {
  return guarded([&] {
    require(g, "graph");
    require(c, "coloring");
    require(proper, "result");
    *proper = p6c4::verify_coloring(g->graph, c->coloring) ? 1 : 0;
  });
}

p6c4_status p6c4_verify_report_json(const p6c4_graph* g, const p6c4_coloring* c, const p6c4_options* options,
                                    char** out) {
  return guarded([&] {
    require(g, "graph");
    require(c, "coloring");
    require(out, "output string");
    json j;
    j["proper"] = p6c4::verify_coloring(g->graph, c->coloring);
    j["palette"] = c->coloring.palette();
    auto [omega, bound] = omega_and_bound(g->graph, oracle_limit(options));
    j["omega"] = omega;
    j["bound"] = bound;
    j["ratio_ok"] = bound.is_null() ? json() : json(c->coloring.palette() <= bound.get<int>());
    *out = duplicate(j.dump());
  });
}

p6c4_status p6c4_decompose_json(const p6c4_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    json components = json::array();
    for (const auto& comp : p6c4::connected_components(g->graph)) {
      const auto sub = p6c4::induced_subgraph(g->graph, comp).first;
      const auto tree = p6c4::build_decomposition_tree(sub);
      components.push_back(json{{"vertices", comp}, {"tree", p6c4::tree_to_json(tree, comp)}});
    }
    json j{{"n", g->graph.order()}, {"m", g->graph.size()}, {"components", std::move(components)}};
    *out = duplicate(j.dump());
  });
}

p6c4_status p6c4_check_class_json(const p6c4_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    const auto c4 = p6c4::find_induced_c4(g->graph);
    const auto p6 = p6c4::find_induced_p6(g->graph);
    json j;
    j["n"] = g->graph.order();
    j["m"] = g->graph.size();
    j["c4_free"] = !c4;
    j["p6_free"] = !p6;
    j["in_class"] = !c4 && !p6;
    j["c4_witness"] = c4 ? json(*c4) : json();
    j["p6_witness"] = p6 ? json(*p6) : json();
    j["chordal"] = p6c4::is_chordal(g->graph);
    *out = duplicate(j.dump());
  });
}

p6c4_status p6c4_audit_json(const p6c4_graph* g, const p6c4_options* options, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    p6c4::AuditOptions opts;
    opts.limits.clique = oracle_limit(options);
    *out = duplicate(p6c4::audit_to_json(p6c4::audit_atom_classification(g->graph, opts)).dump());
  });
}

p6c4_status p6c4_generate_corpus(const char* spec_json, uint64_t seed, int seed_override, const char* out_dir,
                                 const p6c4_options* options, char** manifest_out) {
  return guarded([&] {
    require(out_dir, "output directory");
    p6c4::CorpusSpec spec;
    if (spec_json && *spec_json) {
      try {
        spec = json::parse(spec_json).get<p6c4::CorpusSpec>();
      } catch (const json::exception& e) {
        throw p6c4::ParseError(std::string("corpus spec: ") + e.what(), 0);
      }
    }
    if (seed_override) spec.seed = seed;
    const int threads = options && options->threads > 1 ? options->threads : 1;
    const auto corpus = p6c4::random_p6c4_free(spec, threads);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + std::string(out_dir) + ": " + ec.message());
    json graphs = json::array();
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
      const auto& e = corpus.graphs[i];
      char name[32];
      std::snprintf(name, sizeof name, "graph_%04zu.txt", i);
      std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
      f << p6c4::serialize_graph(e.graph);
      if (!f) throw IoError("cannot write " + std::string(name));
      graphs.push_back(json{{"file", name},
                            {"family", e.family},
                            {"params", e.params},
                            {"n", e.graph.order()},
                            {"m", e.graph.size()},
                            {"attempts", e.attempts}});
    }
    json manifest{{"seed", spec.seed},
                  {"spec", spec},
                  {"requested", corpus.requested},
                  {"emitted", corpus.graphs.size()},
                  {"exhausted", corpus.exhausted},
                  {"graphs", std::move(graphs)}};
    std::ofstream mf(fs::path(out_dir) / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << '\n';
    if (!mf) throw IoError("cannot write manifest.json");
    if (manifest_out) *manifest_out = duplicate(manifest.dump());
  });
}

}  // extern "C"
