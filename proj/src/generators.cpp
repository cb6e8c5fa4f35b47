#include "p6c4/generators.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "p6c4/error.hpp"
#include "p6c4/patterns.hpp"

namespace p6c4 {

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                {6, 0}, {6, 3}, {7, 1}, {7, 4}, {8, 2}, {8, 5},
                                {9, 6}, {9, 7}, {9, 8}});
}

Graph f_graph() {
  return Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                               {6, 5}, {6, 0}, {6, 1}, {6, 2},
                               {7, 1}, {7, 2}, {7, 3}, {7, 4},
                               {8, 3}, {8, 4}, {8, 5}, {8, 0}});
}

namespace {

constexpr VertexId kY = 5;

std::vector<Edge> f1_edges() {
  constexpr VertexId z = 6, x = 7;
  return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
          {kY, 1}, {kY, 2}, {z, 3}, {z, 4}, {x, 2}, {x, 3}, {x, kY}, {x, z}};
}

}  // namespace

Graph f1() {
  const auto e = f1_edges();
  return Graph::from_edges(8, e);
}

Graph f2() {
  constexpr VertexId x = 6, t = 7;
  return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                               {kY, 1}, {kY, 2}, {x, 3}, {x, 4},
                               {t, 4}, {t, 0}, {t, 1}, {t, kY}, {t, x}});
}

Graph f3() {
  auto e = f1_edges();
  constexpr VertexId u = 8;
  for (VertexId i = 0; i < 5; ++i) e.emplace_back(u, i);
  return Graph::from_edges(9, e);
}

Graph cycle(int k) {
  if (k < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

Graph path(int k) {
  if (k < 1) throw InvalidArgument("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

Graph tightness_family(int s) {
  if (s < 1) throw InvalidArgument("tightness family needs s >= 1");
  const std::vector<int> sizes(10, s);
  return blow_up(petersen(), sizes).graph;
}

// ---- Rng --------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  engine_.seed(splitmix64(x));
}

Rng Rng::stream(std::uint64_t seed, std::string_view family, std::uint64_t index) {
  std::uint64_t x = seed;
  std::uint64_t mixed = splitmix64(x) ^ fnv1a(family);
  mixed = splitmix64(mixed) ^ index;
  return Rng(splitmix64(mixed));
}

std::uint64_t Rng::next() { return engine_(); }

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw InvalidArgument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return static_cast<int>(static_cast<std::int64_t>(lo) + static_cast<std::int64_t>(r % range));
}

double Rng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) { return uniform_real() < p; }

// ---- corpus -----------------------------------------------------------------

namespace {

struct Draw {
  Graph graph;
  std::string params;
};

Graph gnp(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, e);
}

Draw draw_random(Rng& rng, const CorpusSpec& spec) {
  const int n = rng.uniform_int(spec.random_n_min, spec.random_n_max);
  const double p = spec.random_p_min + (spec.random_p_max - spec.random_p_min) * rng.uniform_real();
  std::ostringstream params;
  params << "n=" << n << " p=" << p;
  return {gnp(rng, n, p), params.str()};
}

Draw draw_blowup(Rng& rng, const CorpusSpec& spec, std::uint64_t index) {
  static const char* const kNames[] = {"petersen", "f", "c5", "f3"};
  const int which = static_cast<int>(index % 4);
  const Graph base = which == 0 ? petersen() : which == 1 ? f_graph() : which == 2 ? cycle(5) : f3();
  const int k = rng.uniform_int(0, std::max(0, spec.clique_join_max));
  const int cap = std::max(1, spec.class_size_max);
  const int most = std::max(base.order(), std::min(base.order() * cap, spec.constructive_n_max - k));
  int total = rng.uniform_int(base.order(), most);
  std::vector<int> sizes(base.order(), 1);
  std::vector<int> open(base.order());
  std::iota(open.begin(), open.end(), 0);
  for (total -= base.order(); total > 0 && !open.empty(); --total) {
    const int i = rng.uniform_int(0, static_cast<int>(open.size()) - 1);
    if (++sizes[open[i]] == cap) {
      open[i] = open.back();
      open.pop_back();
    }
  }
  Graph g = join(blow_up(base, sizes).graph, complete_graph(k));
  std::ostringstream params;
  params << "base=" << kNames[which] << " sizes=";
  for (std::size_t i = 0; i < sizes.size(); ++i) params << (i ? "," : "") << sizes[i];
  params << " clique=" << k;
  return {std::move(g), params.str()};
}

// Each new vertex attaches to a clique inside the closed neighborhood of a
// random earlier vertex, so the insertion order reversed is a perfect
// elimination ordering.
Draw draw_chordal(Rng& rng, const CorpusSpec& spec) {
  const int n = rng.uniform_int(spec.chordal_n_min, spec.chordal_n_max);
  const double keep = 0.4 + 0.6 * rng.uniform_real();
  std::vector<Bitset> rows(n, Bitset(n));
  for (int v = 1; v < n; ++v) {
    const int w = rng.uniform_int(0, v - 1);
    std::vector<VertexId> nbrs;
    for (auto u = rows[w].find_first(); u != Bitset::npos; u = rows[w].find_next(u)) {
      nbrs.push_back(static_cast<VertexId>(u));
    }
    rng.shuffle(nbrs);
    std::vector<VertexId> clique{w};
    for (VertexId u : nbrs) {
      if (std::all_of(clique.begin(), clique.end(), [&](VertexId c) { return rows[c].test(u); })) {
        clique.push_back(u);
      }
    }
    for (VertexId c : clique) {
      if (c == w || rng.bernoulli(keep)) {
        rows[v].set(c);
        rows[c].set(v);
      }
    }
  }
  std::ostringstream params;
  params << "n=" << n << " keep=" << keep;
  return {Graph::from_rows(std::move(rows)), params.str()};
}

Draw draw_union(Rng& rng) {
  const int a = rng.uniform_int(2, 7);
  const int b = rng.uniform_int(2, 7);
  const double pa = rng.uniform_real();
  const double pb = rng.uniform_real();
  std::ostringstream params;
  params << "n=" << a << "+" << b << " p=" << pa << "," << pb;
  Graph ga = gnp(rng, a, pa);
  Graph gb = gnp(rng, b, pb);
  return {disjoint_union(ga, gb), params.str()};
}

struct Target {
  std::string family;
  std::uint64_t index;
};

}  // namespace

CorpusResult random_p6c4_free(const CorpusSpec& spec, int threads) {
  if (spec.random_n_min < 1 || spec.random_n_max < spec.random_n_min || spec.chordal_n_min < 1 ||
      spec.chordal_n_max < spec.chordal_n_min || spec.max_attempts < 1 || spec.random_p_min < 0 ||
      spec.random_p_max > 1 || spec.random_p_max < spec.random_p_min) {
    throw InvalidArgument("inconsistent corpus spec");
  }
  std::vector<Target> targets;
  auto add = [&](const char* family, int count) {
    for (int i = 0; i < count; ++i) targets.push_back({family, static_cast<std::uint64_t>(i)});
  };
  add("random", spec.random_count);
  add("blowup", spec.blowup_count);
  add("chordal", spec.chordal_count);
  add("union", spec.union_count);

  std::vector<std::optional<CorpusEntry>> slots(targets.size());
  auto work = [&](std::size_t t) {
    const auto& target = targets[t];
    Rng rng = Rng::stream(spec.seed, target.family, target.index);
    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
      Draw d;
      if (target.family == "random") {
        d = draw_random(rng, spec);
      } else if (target.family == "blowup") {
        d = draw_blowup(rng, spec, target.index);
        if (d.graph.order() > spec.constructive_n_max) continue;
      } else if (target.family == "chordal") {
        d = draw_chordal(rng, spec);
      } else {
        d = draw_union(rng);
      }
      if (is_c4_free(d.graph) && is_p6_free(d.graph)) {
        slots[t] = CorpusEntry{std::move(d.graph), target.family, std::move(d.params), attempt};
        return;
      }
    }
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (std::size_t t = 0; t < targets.size(); ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < targets.size(); t = next++) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  CorpusResult result;
  result.requested = static_cast<int>(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (slots[t]) {
      result.graphs.push_back(std::move(*slots[t]));
    } else {
      ++result.exhausted[targets[t].family];
    }
  }
  return result;
}

}  // namespace p6c4
