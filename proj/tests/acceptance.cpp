// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "p6c4/coloring.hpp"
#include "p6c4/decomposition.hpp"
#include "p6c4/error.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/patterns.hpp"
#include "p6c4/structure.hpp"

namespace {

using namespace p6c4;

constexpr int kCliqueLimit = 64;
constexpr int kChromaticLimit = 20;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) notes << "; ";
      notes << what;
      ok = false;
    }
  }
};

int omega_of(const Graph& g) { return max_clique_bruteforce(g, kCliqueLimit).size; }

std::string describe(const char* name, const Graph& g, const Coloring& c) {
  std::ostringstream s;
  s << name << " palette " << c.palette() << " omega " << omega_of(g) << " chi " << oracle::chi(g);
  return s.str();
}

Check named_graphs() {
  Check r;
  auto t0 = std::chrono::steady_clock::now();
  const Graph p = petersen();
  const Coloring cp = approx_color(p);
  const double tp = seconds_since(t0);
  r.expect(verify_coloring(p, cp) && cp.palette() <= 3, "Petersen palette " + std::to_string(cp.palette()));
  r.expect(oracle::chi(p) == 3 && oracle::omega(p) == 2, "Petersen chi/omega");
  r.expect(tp < 1.0, "Petersen took " + std::to_string(tp) + " s");

  t0 = std::chrono::steady_clock::now();
  const Graph f = f_graph();
  const Coloring cf = approx_color(f);
  const double tf = seconds_since(t0);
  r.expect(verify_coloring(f, cf) && cf.palette() <= 4, "F palette " + std::to_string(cf.palette()));
  r.expect(oracle::chi(f) == 3 && oracle::omega(f) == 3, "F chi/omega");
  r.expect(tf < 1.0, "F took " + std::to_string(tf) + " s");
  if (r.ok) r.notes << describe("Petersen", p, cp) << ", " << describe("F", f, cf);
  return r;
}

Check small_blowups() {
  Check r;
  const auto t0 = std::chrono::steady_clock::now();
  const Graph c5 = cycle(5);
  const Coloring cc = approx_color(c5);
  r.expect(verify_coloring(c5, cc) && cc.palette() == 3, "C5 palette " + std::to_string(cc.palette()));
  for (int s = 1; s <= 3; ++s) {
    const std::vector<int> sizes(10, s);
    const Graph g = blow_up(petersen(), sizes).graph;
    const Coloring c = approx_color(g);
    const int w = omega_of(g);
    r.expect(verify_coloring(g, c) && c.palette() == 3 * s,
             "s=" + std::to_string(s) + " palette " + std::to_string(c.palette()));
    r.expect(w == 2 * s, "s=" + std::to_string(s) + " omega " + std::to_string(w));
    if (r.ok) r.notes << (s > 1 ? ", " : "C5 palette 3, ") << "s=" << s << " palette " << c.palette();
  }
  const double t = seconds_since(t0);
  r.expect(t < 5.0, "took " + std::to_string(t) + " s");
  return r;
}

Check petersen_join() {
  Check r;
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = join(petersen(), complete_graph(1));
  const Coloring c = approx_color(g);
  const double t = seconds_since(t0);
  r.expect(verify_coloring(g, c) && c.palette() == 4, "palette " + std::to_string(c.palette()));
  r.expect(oracle::chi(g) == 4 && oracle::omega(g) == 3, "chi/omega");
  r.expect(t < 1.0, "took " + std::to_string(t) + " s");
  if (r.ok) r.notes << describe("join(Petersen, K1)", g, c);
  return r;
}

struct CorpusFacts {
  std::vector<CorpusEntry> graphs;
  double seconds = 0;
};

Check corpus_colorings(const CorpusFacts& corpus) {
  Check r;
  const auto t0 = std::chrono::steady_clock::now();
  int in_class = 0;
  int ratio_checked = 0;
  int chi_checked = 0;
  int max_n = 0;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const Graph& g = corpus.graphs[i].graph;
    max_n = std::max(max_n, g.order());
    const Coloring c = approx_color(g);
    const std::string tag = "graph " + std::to_string(i) + " (" + corpus.graphs[i].family + ")";
    r.expect(c.order() == g.order() && verify_coloring(g, c), tag + " improper");
    if (!is_p6_c4_free(g)) continue;
    ++in_class;
    if (g.order() <= kCliqueLimit) {
      ++ratio_checked;
      const int w = omega_of(g);
      r.expect(c.palette() <= ratio_bound(w), tag + " palette above the bound");
      r.expect(c.palette() >= w, tag + " palette below omega");
    }
    if (g.order() <= kChromaticLimit) {
      ++chi_checked;
      r.expect(c.palette() >= chromatic_number_bruteforce(g, kChromaticLimit).chi, tag + " palette below chi");
    }
  }
  const double t = seconds_since(t0) + corpus.seconds;
  r.expect(corpus.graphs.size() >= 500, "only " + std::to_string(corpus.graphs.size()) + " graphs");
  r.expect(t < 600.0, "took " + std::to_string(t) + " s");
  if (r.ok) {
    r.notes << corpus.graphs.size() << " graphs up to n=" << max_n << ", " << in_class << " in class, " << ratio_checked
            << " ratio-checked, " << chi_checked << " chi-checked";
  }
  return r;
}

Check tree_sizes(const CorpusFacts& corpus) {
  Check r;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const Graph& g = corpus.graphs[i].graph;
    std::size_t internal = 0;
    for (const auto& comp : connected_components(g)) {
      internal += build_decomposition_tree(induced_subgraph(g, comp).first).internal_nodes();
    }
    const auto n = static_cast<std::size_t>(g.order());
    r.expect(internal <= n * n, "graph " + std::to_string(i) + " has " + std::to_string(internal) + " internal nodes");
    worst = std::max(worst, internal);
  }
  if (r.ok) r.notes << "largest tree has " << worst << " internal nodes";
  return r;
}

Check atom_structure(const CorpusFacts& corpus) {
  Check r;
  const auto t0 = std::chrono::steady_clock::now();
  int atoms = 0;
  std::size_t c5s = 0;
  int property_checked = 0;
  OracleLimits limits;
  limits.clique = kCliqueLimit;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const Graph& g = corpus.graphs[i].graph;
    if (!is_p6_c4_free(g) || !is_atom(g)) continue;
    ++atoms;
    const std::string tag = "graph " + std::to_string(i);
    try {
      r.expect(classify_atom(g, limits).kind != AtomClassification::Kind::kNotInClass, tag + " classified NotInClass");
    } catch (const LimitExceeded& e) {
      r.expect(false, tag + " " + e.what());
    }
    for (const auto& cyc : enumerate_induced_cycles(g, 5)) {
      ++c5s;
      r.expect(is_dominating(g, cyc), tag + " has a non-dominating C5");
      if (g.order() <= 14) {
        r.expect(check_c5_properties(g, cyc).empty(), tag + " violates a C5 property");
      }
    }
    if (g.order() <= 14) ++property_checked;
  }
  const double t = seconds_since(t0);
  r.expect(atoms > 0, "no in-class atoms in the corpus");
  r.expect(t < 600.0, "took " + std::to_string(t) + " s");
  if (r.ok) r.notes << atoms << " atoms, " << c5s << " C5s, " << property_checked << " atoms property-checked";
  return r;
}

// Clique number of a blow-up from its class sizes: the heaviest clique of the skeleton.
int analytic_omega(const Graph& skeleton, const std::vector<int>& sizes) {
  int best = 0;
  const int n = skeleton.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!oracle::is_clique_mask(skeleton, mask)) continue;
    int w = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) w += sizes[v];
    }
    best = std::max(best, w);
  }
  return best;
}

Check large_blowups() {
  Check r;
  {
    const std::vector<int> sizes(10, 50);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = blow_up(petersen(), sizes).graph;
    const Coloring c = approx_color(g);
    const double t = seconds_since(t0);
    r.expect(verify_coloring(g, c) && c.palette() == 150, "Petersen x50 palette " + std::to_string(c.palette()));
    r.expect(t < 10.0, "Petersen x50 took " + std::to_string(t) + " s");
    if (r.ok) r.notes << "Petersen x50 palette " << c.palette() << " in " << t << " s";
  }
  {
    const std::vector<int> sizes(9, 40);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = blow_up(f_graph(), sizes).graph;
    const Coloring c = approx_color(g);
    const double t = seconds_since(t0);
    const int w = analytic_omega(f_graph(), sizes);
    r.expect(w == 120, "F x40 analytic omega " + std::to_string(w));
    r.expect(verify_coloring(g, c) && c.palette() <= ratio_bound(w), "F x40 palette " + std::to_string(c.palette()));
    r.expect(t < 10.0, "F x40 took " + std::to_string(t) + " s");
    if (r.ok) r.notes << ", F x40 palette " << c.palette() << " (bound " << ratio_bound(w) << ") in " << t << " s";
  }
  return r;
}

Check detector_agreement() {
  Check r;
  const Graph c4 = cycle(4);
  const Graph p6 = path(6);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng = Rng::stream(2024, "agreement", static_cast<std::uint64_t>(i));
    const int n = rng.uniform_int(1, 10);
    const double p = rng.uniform_real();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    disagreements += is_c4_free(g) != !contains_induced(g, c4).has_value();
    disagreements += is_p6_free(g) != !contains_induced(g, p6).has_value();
    disagreements += is_chordal(g) != oracle::is_chordal(g);
  }
  r.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  if (r.ok) r.notes << "1000 graphs, 0 disagreements";
  return r;
}

}  // namespace

int main() {
  CorpusFacts corpus;
  const auto t0 = std::chrono::steady_clock::now();
  corpus.graphs = random_p6c4_free(CorpusSpec{}).graphs;
  corpus.seconds = seconds_since(t0);

  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"named graphs", named_graphs},
      {"C5 and small Petersen blow-ups", small_blowups},
      {"join(Petersen, K1)", petersen_join},
      {"corpus colorings", [&] { return corpus_colorings(corpus); }},
      {"decomposition tree size", [&] { return tree_sizes(corpus); }},
      {"atom structure", [&] { return atom_structure(corpus); }},
      {"large blow-ups", large_blowups},
      {"detector agreement", detector_agreement},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "exception: " << e.what();
    }
    failed += !c.ok;
    std::printf("%s %zu %s: %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.notes.str().c_str());
  }
  std::printf("%s\n", failed == 0 ? "all criteria passed" : "some criteria failed");
  return failed == 0 ? 0 : 1;
}
