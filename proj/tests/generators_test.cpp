#include "p6c4/generators.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "oracles.hpp"
#include "p6c4/coloring.hpp"
#include "p6c4/decomposition.hpp"
#include "p6c4/error.hpp"
#include "p6c4/patterns.hpp"
#include "support.hpp"

namespace {

using namespace p6c4;

bool regular(const Graph& g, int d) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

TEST(NamedGraphs, Sizes) {
  EXPECT_EQ(petersen().order(), 10);
  EXPECT_EQ(petersen().size(), 15);
  EXPECT_TRUE(regular(petersen(), 3));
  EXPECT_EQ(f_graph().order(), 9);
  EXPECT_EQ(f_graph().size(), 18);
  EXPECT_TRUE(regular(f_graph(), 4));
  EXPECT_EQ(f1().order(), 8);
  EXPECT_EQ(f2().order(), 8);
  EXPECT_EQ(f3().order(), 9);
}

TEST(NamedGraphs, PetersenIsTheKneserGraph) {
  // 2-subsets of {0..4}, adjacent when disjoint.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  EXPECT_TRUE(oracle::isomorphic(petersen(), Graph::from_edges(10, edges)));
}

TEST(NamedGraphs, FigureAdjacency) {
  // F1: cycle 0..4 is 1..5, y = 5, z = 6, x = 7.
  const Graph a = f1();
  EXPECT_EQ(a.degree(7), 4);
  EXPECT_EQ(a.degree(5), 3);
  EXPECT_EQ(a.degree(6), 3);
  EXPECT_TRUE(a.adjacent(7, 2) && a.adjacent(7, 3) && a.adjacent(7, 5) && a.adjacent(7, 6));
  // F2: y = 5, x = 6, t = 7 adjacent to 5, 1, 2 of the cycle plus x and y.
  const Graph b = f2();
  EXPECT_EQ(b.degree(7), 5);
  EXPECT_TRUE(b.adjacent(7, 4) && b.adjacent(7, 0) && b.adjacent(7, 1) && b.adjacent(7, 5) && b.adjacent(7, 6));
  // F3 = F1 plus a vertex complete to the cycle.
  const Graph c = f3();
  EXPECT_TRUE(induced_subgraph(c, VertexSet{0, 1, 2, 3, 4, 5, 6, 7}).first == a);
  for (VertexId v = 0; v < 5; ++v) EXPECT_TRUE(c.adjacent(8, v));
  EXPECT_EQ(c.degree(8), 5);
  EXPECT_TRUE(contains_induced(f3(), f1()));
  EXPECT_TRUE(oracle::contains_induced(f3(), f1()));
}

TEST(NamedGraphs, ChromaticAndCliqueNumbers) {
  EXPECT_EQ(oracle::chi(petersen()), 3);
  EXPECT_EQ(oracle::omega(petersen()), 2);
  EXPECT_EQ(oracle::chi(f_graph()), 3);
  EXPECT_EQ(oracle::omega(f_graph()), 3);
}

TEST(NamedGraphs, CyclesAndPaths) {
  EXPECT_EQ(cycle(3).size(), 3);
  EXPECT_EQ(cycle(7).size(), 7);
  EXPECT_EQ(path(1).order(), 1);
  EXPECT_EQ(path(6).size(), 5);
  EXPECT_THROW(cycle(2), InvalidArgument);
  EXPECT_THROW(path(0), InvalidArgument);
  EXPECT_THROW(tightness_family(0), InvalidArgument);
}

TEST(TightnessFamily, Members) {
  EXPECT_TRUE(tightness_family(1) == petersen());
  EXPECT_EQ(oracle::chi(tightness_family(1)), 3);
  const Graph two = tightness_family(2);
  EXPECT_EQ(two.order(), 20);
  EXPECT_EQ(oracle::omega(two), 4);
  const Graph three = tightness_family(3);
  EXPECT_EQ(three.order(), 30);
  EXPECT_EQ(oracle::omega(three), 6);
  EXPECT_EQ(approx_color(three).palette(), 9);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a = Rng::stream(42, "random", 3);
  Rng b = Rng::stream(42, "random", 3);
  Rng c = Rng::stream(42, "random", 4);
  Rng d = Rng::stream(42, "chordal", 3);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_NE(x, d.next());
}

TEST(Rng, UniformIntStaysInRange) {
  Rng r(1);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const int v = r.uniform_int(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 6u);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform_real();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(r.uniform_int(5, 5), 5);
}

CorpusSpec small_spec(std::uint64_t seed) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.random_count = 40;
  spec.blowup_count = 40;
  spec.chordal_count = 20;
  spec.union_count = 20;
  return spec;
}

TEST(Corpus, EveryGraphIsInClass) {
  const auto corpus = random_p6c4_free(small_spec(42));
  EXPECT_EQ(corpus.requested, 120);
  EXPECT_EQ(corpus.graphs.size(), 120u);
  for (const auto& e : corpus.graphs) {
    ASSERT_TRUE(is_c4_free(e.graph)) << e.family << " " << e.params;
    ASSERT_TRUE(is_p6_free(e.graph)) << e.family << " " << e.params;
    if (e.graph.order() <= 9) {
      EXPECT_FALSE(oracle::contains_induced(e.graph, cycle(4)));
      EXPECT_FALSE(oracle::contains_induced(e.graph, path(6)));
    }
    EXPECT_GE(e.attempts, 1);
    if (e.family == "random") EXPECT_LE(e.graph.order(), 13);
    if (e.family == "blowup") EXPECT_LE(e.graph.order(), 60);
  }
}

TEST(Corpus, SameSeedSameCorpus) {
  const auto a = random_p6c4_free(small_spec(42));
  const auto b = random_p6c4_free(small_spec(42));
  ASSERT_EQ(a.graphs.size(), b.graphs.size());
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    EXPECT_TRUE(a.graphs[i].graph == b.graphs[i].graph);
    EXPECT_EQ(a.graphs[i].params, b.graphs[i].params);
  }
  const auto c = random_p6c4_free(small_spec(43));
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.graphs.size(), c.graphs.size()); ++i) {
    differs = differs || !(a.graphs[i].graph == c.graphs[i].graph);
  }
  EXPECT_TRUE(differs);
}

TEST(Corpus, ThreadCountDoesNotChangeOutput) {
  const auto a = random_p6c4_free(small_spec(7), 1);
  const auto b = random_p6c4_free(small_spec(7), 4);
  ASSERT_EQ(a.graphs.size(), b.graphs.size());
  for (std::size_t i = 0; i < a.graphs.size(); ++i) {
    EXPECT_TRUE(a.graphs[i].graph == b.graphs[i].graph);
    EXPECT_EQ(a.graphs[i].attempts, b.graphs[i].attempts);
  }
}

TEST(Corpus, ConstructiveFamilyIncludesJoinedFBlowups) {
  CorpusSpec spec;
  spec.seed = 42;
  spec.random_count = 0;
  spec.chordal_count = 0;
  spec.union_count = 0;
  spec.blowup_count = 40;
  spec.class_size_max = 3;
  const auto corpus = random_p6c4_free(spec);
  int joined_f = 0;
  for (const auto& e : corpus.graphs) {
    if (e.params.find("base=f ") == std::string::npos || e.params.find("clique=0") != std::string::npos) continue;
    ++joined_f;
    const auto leaf = classify_strong_atom_leaf(e.graph);
    ASSERT_TRUE(leaf) << e.params;
    EXPECT_EQ(leaf->kind, SkeletonKind::kF);
    EXPECT_FALSE(leaf->clique_part.empty());
  }
  EXPECT_GT(joined_f, 0);
}

TEST(Corpus, ExhaustedTargetsAreReported) {
  CorpusSpec spec;
  spec.seed = 1;
  spec.random_count = 10;
  spec.blowup_count = 0;
  spec.chordal_count = 0;
  spec.union_count = 0;
  spec.random_n_min = 13;
  spec.random_n_max = 13;
  spec.random_p_min = 0.3;
  spec.random_p_max = 0.3;
  spec.max_attempts = 1;
  const auto corpus = random_p6c4_free(spec);
  EXPECT_EQ(corpus.requested, 10);
  ASSERT_TRUE(corpus.exhausted.count("random"));
  EXPECT_EQ(static_cast<int>(corpus.graphs.size()) + corpus.exhausted.at("random"), 10);
}

TEST(Corpus, RejectsInconsistentSpec) {
  CorpusSpec spec;
  spec.random_n_min = 9;
  spec.random_n_max = 4;
  EXPECT_THROW(random_p6c4_free(spec), InvalidArgument);
  spec = CorpusSpec{};
  spec.random_p_max = 1.5;
  EXPECT_THROW(random_p6c4_free(spec), InvalidArgument);
}

}  // namespace
