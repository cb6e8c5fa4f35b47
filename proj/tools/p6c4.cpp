// p6c4: color (P6,C4)-free graphs from the command line.
#include <p6c4/p6c4.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;

struct Failure {
  p6c4_status status;
  std::string message;
};

int exit_code(p6c4_status status) { return status == P6C4_ERR_INTERNAL ? 2 : 1; }

void check(p6c4_status status, const std::string& context = {}) {
  if (status == P6C4_OK) return;
  std::string msg = p6c4_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw Failure{status, msg};
}

struct GraphFree {
  void operator()(p6c4_graph* g) const { p6c4_graph_free(g); }
};
struct ColoringFree {
  void operator()(p6c4_coloring* c) const { p6c4_coloring_free(c); }
};
using GraphPtr = std::unique_ptr<p6c4_graph, GraphFree>;
using ColoringPtr = std::unique_ptr<p6c4_coloring, ColoringFree>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  p6c4_string_free(s);
  return out;
}

struct Settings {
  std::string format = "auto";
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int oracle_limit = 24;
  bool verify_class = false;
  int parallel = 1;
};

p6c4_format format_of(const std::string& name) {
  if (name == "auto") return P6C4_FORMAT_AUTO;
  if (name == "edgelist" || name == "edge-list") return P6C4_FORMAT_EDGE_LIST;
  if (name == "dimacs" || name == "col") return P6C4_FORMAT_DIMACS;
  throw Failure{P6C4_ERR_INVALID_ARGUMENT, "unknown format '" + name + "'"};
}

p6c4_options options_of(const Settings& s) {
  p6c4_options o = p6c4_default_options();
  o.oracle_limit = s.oracle_limit;
  o.verify_class = s.verify_class ? 1 : 0;
  o.threads = s.parallel;
  return o;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{P6C4_ERR_IO, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphPtr load_graph(const std::string& path, const Settings& s) {
  const std::string text = read_input(path);
  p6c4_graph* g = nullptr;
  check(p6c4_graph_parse(text.data(), text.size(), format_of(s.format), &g), path);
  return GraphPtr(g);
}

ColoringPtr load_coloring(const std::string& path, const p6c4_graph* g) {
  const std::string text = read_input(path);
  p6c4_coloring* c = nullptr;
  check(p6c4_coloring_parse(text.data(), text.size(), p6c4_graph_order(g), &c), path);
  return ColoringPtr(c);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ids(const json& ids) {
  std::string out;
  for (const auto& v : ids) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.get<long long>());
  }
  return out;
}

// One result per input file. Workers fill slots, output is emitted in input
// order so --parallel never changes what is printed.
struct Result {
  std::string text;
  json doc;
  std::optional<Failure> failure;
};

template <class Fn>
std::vector<Result> for_each_input(const std::vector<std::string>& files, int workers, Fn&& fn) {
  std::vector<Result> results(files.size());
  auto run = [&](std::size_t i) {
    try {
      fn(files[i], results[i]);
    } catch (const Failure& f) {
      results[i].failure = f;
    }
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(files.size())));
  if (count == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) run(i);
    return results;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < count; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < files.size(); i += count) run(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

int emit(const std::vector<std::string>& files, const std::vector<Result>& results, bool as_json) {
  int code = 0;
  const bool many = files.size() > 1;
  if (as_json) {
    json out = json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
      const auto& r = results[i];
      if (r.failure) {
        out.push_back(json{{"file", files[i]}, {"error", r.failure->message}});
      } else {
        json d = r.doc;
        if (many) d["file"] = files[i];
        out.push_back(std::move(d));
      }
    }
    std::cout << (many ? out : out[0]).dump(2) << '\n';
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto& r = results[i];
    if (r.failure) {
      std::cerr << "p6c4: " << r.failure->message << '\n';
      code = std::max(code, exit_code(r.failure->status));
      continue;
    }
    if (!as_json) {
      if (many) std::cout << "# file " << files[i] << '\n';
      std::cout << r.text;
    }
  }
  return code;
}

void color_one(const std::string& path, Result& r, const Settings& s) {
  const auto g = load_graph(path, s);
  const auto opts = options_of(s);
  char* out = nullptr;
  check(p6c4_color_report_json(g.get(), &opts, &out), path);
  r.doc = json::parse(take(out));
  std::ostringstream t;
  t << "# palette " << r.doc["palette"].get<int>() << '\n';
  if (!r.doc["omega"].is_null()) {
    t << "# omega " << r.doc["omega"].get<int>() << '\n';
    t << "# bound " << r.doc["bound"].get<int>() << '\n';
  }
  t << "# guarantee " << r.doc["guarantee"].get<std::string>() << '\n';
  const auto& a = r.doc["assignment"];
  for (std::size_t v = 0; v < a.size(); ++v) t << v << ' ' << a[v].get<int>() << '\n';
  r.text = t.str();
}

void check_class_one(const std::string& path, Result& r, const Settings& s) {
  const auto g = load_graph(path, s);
  char* out = nullptr;
  check(p6c4_check_class_json(g.get(), &out), path);
  r.doc = json::parse(take(out));
  std::ostringstream t;
  t << "c4-free: " << yes_no(r.doc["c4_free"].get<bool>());
  if (!r.doc["c4_witness"].is_null()) t << " (witness " << join_ids(r.doc["c4_witness"]) << ')';
  t << "\np6-free: " << yes_no(r.doc["p6_free"].get<bool>());
  if (!r.doc["p6_witness"].is_null()) t << " (witness " << join_ids(r.doc["p6_witness"]) << ')';
  t << "\nchordal: " << yes_no(r.doc["chordal"].get<bool>());
  t << "\nverdict: " << (r.doc["in_class"].get<bool>() ? "in-class" : "not-in-class") << '\n';
  r.text = t.str();
}

void stats_one(const std::string& path, Result& r, const Settings& s) {
  const auto g = load_graph(path, s);
  char* out = nullptr;
  check(p6c4_graph_stats_json(g.get(), &out), path);
  r.doc = json::parse(take(out));
  std::ostringstream t;
  t << "n: " << r.doc["n"] << "\nm: " << r.doc["m"] << "\nmin degree: " << r.doc["min_degree"]
    << "\nmax degree: " << r.doc["max_degree"] << "\navg degree: " << r.doc["average_degree"]
    << "\ncomponents: " << r.doc["components"] << "\nuniversal vertices: " << r.doc["universal_vertices"]
    << "\ntwin classes: " << r.doc["twin_classes"] << "\ntwin class sizes: " << join_ids(r.doc["twin_class_sizes"])
    << "\nskeleton: " << r.doc["skeleton_order"] << " vertices, " << r.doc["skeleton_size"] << " edges\n";
  r.text = t.str();
}

void render_tree(const json& node, int depth, std::ostream& out) {
  out << std::string(2 * depth, ' ');
  const std::string kind = node["kind"];
  if (kind == "cutset_split") {
    out << "cutset {" << join_ids(node["cutset"]) << "} on " << node["n"] << " vertices\n";
    render_tree(node["left"], depth + 1, out);
    render_tree(node["right"], depth + 1, out);
  } else if (kind == "small_removal") {
    out << "remove " << node["vertex"] << " (degree " << node["degree"] << ") from " << node["n"] << " vertices\n";
    render_tree(node["child"], depth + 1, out);
  } else if (kind == "leaf_clique") {
    out << "clique K" << node["size"] << " {" << join_ids(node["vertices"]) << "}\n";
  } else {
    out << "blow-up of " << node["skeleton"].get<std::string>() << ", class sizes " << join_ids(node["class_sizes"])
        << ", joined with K" << node["clique_part"].size() << '\n';
  }
}

void decompose_one(const std::string& path, Result& r, const Settings& s) {
  const auto g = load_graph(path, s);
  char* out = nullptr;
  check(p6c4_decompose_json(g.get(), &out), path);
  r.doc = json::parse(take(out));
  std::ostringstream t;
  for (const auto& comp : r.doc["components"]) {
    const auto& tree = comp["tree"];
    t << "component {" << join_ids(comp["vertices"]) << "}: " << tree["internal_nodes"] << " internal, "
      << tree["leaves"] << " leaves, depth " << tree["depth"] << '\n';
    render_tree(tree["root"], 1, t);
  }
  r.text = t.str();
}

void audit_one(const std::string& path, Result& r, const Settings& s) {
  const auto g = load_graph(path, s);
  const auto opts = options_of(s);
  char* out = nullptr;
  check(p6c4_audit_json(g.get(), &opts, &out), path);
  r.doc = json::parse(take(out));
  std::ostringstream t;
  t << "in-class: " << yes_no(r.doc["in_class"].get<bool>()) << "\natom: " << yes_no(r.doc["atom"].get<bool>());
  const auto& cls = r.doc["classification"];
  if (cls["performed"].get<bool>()) {
    t << "\ncase: " << cls["kind"].get<std::string>();
    t << "\nverified: " << yes_no(cls["verified"].get<bool>());
  }
  if (cls.contains("note")) t << "\nnote: " << cls["note"].get<std::string>();
  t << "\nC5 checked: " << r.doc["c5_checked"] << ", non-dominating: " << r.doc["c5_non_dominating"]
    << "\nproperty violations: " << r.doc["violations"].size();
  for (const auto& f : r.doc["failures"]) t << "\nfailure: " << f.get<std::string>();
  t << "\nresult: " << (r.doc["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
  r.text = t.str();
}

int run_verify(const std::string& graph_path, const std::string& coloring_path, const Settings& s) {
  const auto g = load_graph(graph_path, s);
  const auto c = load_coloring(coloring_path, g.get());
  const auto opts = options_of(s);
  char* out = nullptr;
  check(p6c4_verify_report_json(g.get(), c.get(), &opts, &out));
  const json doc = json::parse(take(out));
  const bool proper = doc["proper"].get<bool>();
  if (s.json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "proper: " << yes_no(proper) << "\npalette: " << doc["palette"] << '\n';
    if (!doc["omega"].is_null()) {
      std::cout << "omega: " << doc["omega"] << "\nbound: " << doc["bound"]
                << "\nwithin bound: " << yes_no(doc["ratio_ok"].get<bool>()) << '\n';
    }
  }
  return proper ? 0 : 1;
}

int run_generate(const std::string& spec_path, const std::string& out_dir, const Settings& s) {
  const std::string spec = spec_path.empty() ? std::string() : read_input(spec_path);
  const auto opts = options_of(s);
  char* out = nullptr;
  check(p6c4_generate_corpus(spec.c_str(), s.seed, s.seed_given ? 1 : 0, out_dir.c_str(), &opts, &out));
  const json manifest = json::parse(take(out));
  if (s.json) {
    std::cout << manifest.dump(2) << '\n';
  } else {
    std::cout << "seed: " << manifest["seed"] << "\nrequested: " << manifest["requested"]
              << "\nemitted: " << manifest["emitted"] << "\ndirectory: " << out_dir << '\n';
    for (const auto& [family, count] : manifest["exhausted"].items()) {
      std::cout << "exhausted " << family << ": " << count << '\n';
    }
  }
  return 0;
}

int run_export_dot(const std::string& graph_path, const std::string& coloring_path, bool color_it,
                   const std::string& output, const Settings& s) {
  const auto g = load_graph(graph_path, s);
  ColoringPtr c;
  if (!coloring_path.empty()) {
    c = load_coloring(coloring_path, g.get());
  } else if (color_it) {
    p6c4_coloring* made = nullptr;
    check(p6c4_color(g.get(), &made));
    c.reset(made);
  }
  char* out = nullptr;
  check(p6c4_export_dot(g.get(), c.get(), &out));
  const std::string dot = take(out);
  if (output.empty() || output == "-") {
    std::cout << dot;
  } else {
    std::ofstream f(output, std::ios::binary);
    f << dot;
    if (!f) throw Failure{P6C4_ERR_IO, "cannot write " + output};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color (P6,C4)-free graphs with at most 3/2 omega colors", "p6c4"};
  app.set_version_flag("--version", std::string(p6c4_version()));
  app.require_subcommand(1);

  Settings s;
  app.add_option("--format", s.format, "Input graph format")
      ->check(CLI::IsMember({"auto", "edgelist", "edge-list", "dimacs", "col"}))
      ->capture_default_str();
  app.add_flag("--json", s.json, "Print JSON instead of text");
  auto* seed_opt = app.add_option("--seed", s.seed, "Corpus seed (overrides the spec)");
  app.add_option("--oracle-limit", s.oracle_limit, "Largest n for the exact clique oracle")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  app.add_flag("--verify-class", s.verify_class, "Check (P6,C4)-freeness and report the guarantee");
  app.add_option("--parallel", s.parallel, "Worker threads for multi-file and corpus work")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  std::vector<std::string> files;
  auto* color = app.add_subcommand("color", "Color graphs and print the assignment");
  color->add_option("graph", files, "Graph files ('-' for stdin)")->required();
  auto* decompose = app.add_subcommand("decompose", "Print the decomposition tree");
  decompose->add_option("graph", files, "Graph files ('-' for stdin)")->required();
  auto* check_class = app.add_subcommand("check-class", "Test for induced C4 and P6");
  check_class->add_option("graph", files, "Graph files ('-' for stdin)")->required();
  auto* stats = app.add_subcommand("stats", "Print size, degree and twin statistics");
  stats->add_option("graph", files, "Graph files ('-' for stdin)")->required();
  auto* audit = app.add_subcommand("audit", "Audit atom classification and C5 structure");
  audit->add_option("graph", files, "Graph files ('-' for stdin)")->required();

  std::string graph_path, coloring_path;
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("coloring", coloring_path, "Coloring file ('v c' lines or JSON)")->required();

  std::string spec_path, out_dir;
  auto* generate = app.add_subcommand("generate", "Write a seeded corpus of (P6,C4)-free graphs");
  generate->add_option("--spec", spec_path, "Corpus spec JSON (defaults for missing keys)");
  generate->add_option("--out", out_dir, "Output directory")->required();

  std::string dot_out;
  bool dot_color = false;
  auto* export_dot = app.add_subcommand("export-dot", "Write the graph in DOT");
  export_dot->add_option("graph", graph_path, "Graph file")->required();
  export_dot->add_option("--coloring", coloring_path, "Coloring to draw as fill colors");
  export_dot->add_flag("--color", dot_color, "Color the graph first and draw the result");
  export_dot->add_option("-o,--output", dot_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  s.seed_given = seed_opt->count() > 0;

  try {
    const int workers = s.parallel;
    if (color->parsed()) {
      return emit(files, for_each_input(files, workers, [&](auto& f, auto& r) { color_one(f, r, s); }), s.json);
    }
    if (check_class->parsed()) {
      return emit(files, for_each_input(files, workers, [&](auto& f, auto& r) { check_class_one(f, r, s); }),
                  s.json);
    }
    if (stats->parsed()) {
      return emit(files, for_each_input(files, workers, [&](auto& f, auto& r) { stats_one(f, r, s); }), s.json);
    }
    if (decompose->parsed()) {
      return emit(files, for_each_input(files, workers, [&](auto& f, auto& r) { decompose_one(f, r, s); }),
                  s.json);
    }
    if (audit->parsed()) {
      return emit(files, for_each_input(files, workers, [&](auto& f, auto& r) { audit_one(f, r, s); }), s.json);
    }
    if (verify->parsed()) return run_verify(graph_path, coloring_path, s);
    if (generate->parsed()) return run_generate(spec_path, out_dir, s);
    if (export_dot->parsed()) return run_export_dot(graph_path, coloring_path, dot_color, dot_out, s);
  } catch (const Failure& f) {
    std::cerr << "p6c4: " << f.message << '\n';
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "p6c4: internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
