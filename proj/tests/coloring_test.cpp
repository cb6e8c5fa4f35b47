#include "p6c4/coloring.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p6c4/decomposition.hpp"
#include "p6c4/error.hpp"
#include "p6c4/generators.hpp"
#include "p6c4/patterns.hpp"
#include "support.hpp"

namespace {

using namespace p6c4;

Coloring colors(std::vector<int> c) { return Coloring(std::move(c)); }

TEST(ColoringType, PaletteAndValidation) {
  const Coloring c = colors({1, 3, 2, 3});
  EXPECT_EQ(c.order(), 4);
  EXPECT_EQ(c.palette(), 3);
  EXPECT_THROW(colors({1, 0}), InvalidArgument);
  EXPECT_EQ(Coloring().palette(), 0);
  EXPECT_EQ(compact(colors({5, 2, 5, 9})).colors(), (std::vector<int>{1, 2, 1, 3}));
}

TEST(ColorClique, Cases) {
  EXPECT_EQ(color_clique(complete_graph(1)).colors(), (std::vector<int>{1}));
  EXPECT_EQ(color_clique(complete_graph(4)).palette(), 4);
  EXPECT_EQ(color_clique(Graph::from_edges(0, {})).order(), 0);
  EXPECT_THROW(color_clique(path(3)), InvalidArgument);
}

TEST(BlowupLeaf, PetersenUsesThreeColors) {
  const auto leaf = classify_strong_atom_leaf(petersen());
  ASSERT_TRUE(leaf);
  const Coloring c = color_blowup_leaf(petersen(), *leaf);
  EXPECT_TRUE(oracle::proper(petersen(), c.colors()));
  EXPECT_EQ(c.palette(), 3);
}

TEST(BlowupLeaf, PetersenBlowupsAttainTheBound) {
  for (int s = 1; s <= 3; ++s) {
    const Graph g = blow_up(petersen(), support::all(10, s)).graph;
    const auto leaf = classify_strong_atom_leaf(g);
    ASSERT_TRUE(leaf);
    const Coloring c = color_blowup_leaf(g, *leaf);
    EXPECT_TRUE(oracle::proper(g, c.colors()));
    EXPECT_EQ(oracle::omega(g), 2 * s);
    EXPECT_EQ(c.palette(), 3 * s);
  }
}

TEST(BlowupLeaf, JoinOfFWithAnEdge) {
  const Graph g = join(f_graph(), complete_graph(2));
  const auto leaf = classify_strong_atom_leaf(g);
  ASSERT_TRUE(leaf);
  const Coloring c = color_blowup_leaf(g, *leaf);
  EXPECT_TRUE(oracle::proper(g, c.colors()));
  EXPECT_EQ(c.palette(), 5);
  EXPECT_EQ(oracle::omega(g), 5);
  EXPECT_LE(c.palette(), ratio_bound(5));
}

TEST(BlowupLeaf, UnevenClassesStayWithinBound) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const bool use_f = trial % 2 == 1;
    const Graph base = use_f ? f_graph() : petersen();
    std::vector<int> sizes(base.order());
    for (int& s : sizes) s = rng.uniform_int(1, 4);
    const Graph g = join(blow_up(base, sizes).graph, complete_graph(rng.uniform_int(0, 2)));
    const auto leaf = classify_strong_atom_leaf(g);
    ASSERT_TRUE(leaf);
    const Coloring c = color_blowup_leaf(g, *leaf);
    ASSERT_TRUE(oracle::proper(g, c.colors()));
    EXPECT_LE(c.palette(), ratio_bound(oracle::omega(g))) << "trial " << trial;
  }
}

TEST(BlowupLeaf, RejectsLeafOfAnotherGraph) {
  const auto leaf = classify_strong_atom_leaf(petersen());
  ASSERT_TRUE(leaf);
  const Graph other = support::relabel(petersen(), {1, 0, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_THROW(color_blowup_leaf(other, *leaf), InvalidArgument);
}

TEST(Combine, BowtieOnAnEdge) {
  // Parent: two triangles {0,1,2} and {1,2,3} sharing the edge {1,2}.
  const std::vector<VertexId> left{0, 1, 2};
  const std::vector<VertexId> right{1, 2, 3};
  const Coloring c = combine_on_clique_cutset(colors({3, 1, 2}), left, colors({2, 3, 1}), right, 4);
  // Second child: 2 -> 1 and 3 -> 2 on the cutset, so its color 1 becomes 3.
  EXPECT_EQ(c.colors(), (std::vector<int>{3, 1, 2, 3}));
  EXPECT_EQ(c.palette(), 3);
}

TEST(Combine, EmptyCutsetConcatenates) {
  const std::vector<VertexId> left{0, 1};
  const std::vector<VertexId> right{2, 3, 4};
  const Coloring c = combine_on_clique_cutset(colors({1, 2}), left, colors({1, 2, 3}), right, 5);
  EXPECT_EQ(c.colors(), (std::vector<int>{1, 2, 1, 2, 3}));
  EXPECT_EQ(c.palette(), 3);
}

TEST(Combine, AgreeingColoringsOverlay) {
  const std::vector<VertexId> left{0, 1};
  const std::vector<VertexId> right{1, 2};
  const Coloring c = combine_on_clique_cutset(colors({1, 2}), left, colors({2, 1}), right, 3);
  EXPECT_EQ(c.colors(), (std::vector<int>{1, 2, 1}));
}

TEST(Combine, RejectsBadInput) {
  const std::vector<VertexId> left{0, 1};
  const std::vector<VertexId> right{1, 2};
  EXPECT_THROW(combine_on_clique_cutset(colors({1, 2}), left, colors({1}), right, 3), InvalidArgument);
  const std::vector<VertexId> gap{2, 3};
  EXPECT_THROW(combine_on_clique_cutset(colors({1, 2}), left, colors({1, 2}), gap, 5), InvalidArgument);
  // Both cutset vertices share a color in the second child.
  const std::vector<VertexId> both{0, 1, 2};
  EXPECT_THROW(combine_on_clique_cutset(colors({1, 2}), left, colors({1, 1, 2}), both, 3), InvalidArgument);
}

TEST(Reinsert, Cases) {
  const Graph isolated = edgeless_graph(3);
  EXPECT_EQ(reinsert_vertex(colors({1, 1}), isolated, 1).colors(), (std::vector<int>{1, 1, 1}));

  // C5 minus vertex 0 is the path 1-2-3-4 colored 1,2,1,2; vertex 0 sees 1 and 2.
  const Coloring c5 = reinsert_vertex(colors({1, 2, 1, 2}), cycle(5), 0);
  EXPECT_EQ(c5[0], 3);
  EXPECT_EQ(c5.palette(), 3);

  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(reinsert_vertex(colors({1, 2, 3}), star, 0)[0], 4);
  EXPECT_THROW(reinsert_vertex(colors({1}), star, 0), InvalidArgument);
}

TEST(ApproxColor, NamedGraphs) {
  const Coloring p = approx_color(petersen());
  EXPECT_TRUE(oracle::proper(petersen(), p.colors()));
  EXPECT_LE(p.palette(), 3);

  const Coloring c = approx_color(cycle(5));
  EXPECT_EQ(c.palette(), 3);

  const Graph j = join(petersen(), complete_graph(1));
  const Coloring jc = approx_color(j);
  EXPECT_TRUE(oracle::proper(j, jc.colors()));
  EXPECT_EQ(jc.palette(), 4);
  EXPECT_EQ(oracle::omega(j), 3);
  EXPECT_EQ(oracle::chi(j), 4);

  for (const Graph& g : {f_graph(), f1(), f2(), f3()}) {
    const Coloring fc = approx_color(g);
    EXPECT_TRUE(oracle::proper(g, fc.colors()));
    EXPECT_LE(fc.palette(), ratio_bound(oracle::omega(g)));
    EXPECT_GE(fc.palette(), oracle::chi(g));
  }
}

TEST(ApproxColor, DisconnectedGraphsSharePalette) {
  const Graph g = disjoint_union(cycle(5), disjoint_union(edgeless_graph(2), complete_graph(3)));
  const Coloring c = approx_color(g);
  EXPECT_TRUE(oracle::proper(g, c.colors()));
  EXPECT_EQ(c.palette(), 3);
  EXPECT_EQ(approx_color(Graph::from_edges(0, {})).order(), 0);
  EXPECT_EQ(approx_color(edgeless_graph(4)).palette(), 1);
}

TEST(ApproxColor, AlwaysProperOutsideTheClass) {
  Rng rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::random_graph(rng, rng.uniform_int(0, 14), rng.uniform_real());
    const Coloring c = approx_color(g);
    ASSERT_EQ(c.order(), g.order());
    ASSERT_TRUE(oracle::proper(g, c.colors())) << "trial " << trial;
    if (g.order() <= 10) EXPECT_GE(c.palette(), oracle::chi(g));
  }
}

TEST(ApproxColor, Deterministic) {
  CorpusSpec spec;
  spec.seed = 5;
  spec.random_count = 20;
  spec.blowup_count = 20;
  spec.chordal_count = 10;
  spec.union_count = 10;
  for (const auto& e : random_p6c4_free(spec).graphs) EXPECT_EQ(approx_color(e.graph), approx_color(e.graph));
}

TEST(Oracles, CliqueMatchesReference) {
  EXPECT_EQ(max_clique_bruteforce(petersen()).size, 2);
  EXPECT_EQ(max_clique_bruteforce(f_graph()).size, 3);
  EXPECT_EQ(max_clique_bruteforce(complete_graph(6)).size, 6);
  EXPECT_EQ(max_clique_bruteforce(Graph::from_edges(0, {})).size, 0);
  EXPECT_THROW(max_clique_bruteforce(complete_graph(30)), LimitExceeded);
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::random_graph(rng, rng.uniform_int(1, 16), rng.uniform_real());
    const auto r = max_clique_bruteforce(g);
    ASSERT_EQ(r.size, oracle::omega(g)) << "trial " << trial;
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.size);
    EXPECT_TRUE(is_clique(g, r.witness));
  }
}

TEST(Oracles, ChromaticMatchesReference) {
  EXPECT_EQ(chromatic_number_bruteforce(petersen()).chi, 3);
  EXPECT_EQ(chromatic_number_bruteforce(f_graph()).chi, 3);
  EXPECT_EQ(chromatic_number_bruteforce(join(petersen(), complete_graph(1))).chi, 4);
  EXPECT_EQ(oracle::chi(petersen()), 3);
  EXPECT_EQ(oracle::chi(f_graph()), 3);
  EXPECT_THROW(chromatic_number_bruteforce(complete_graph(21)), LimitExceeded);
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::random_graph(rng, rng.uniform_int(0, 11), rng.uniform_real());
    const auto r = chromatic_number_bruteforce(g);
    ASSERT_EQ(r.chi, oracle::chi(g)) << "trial " << trial;
    EXPECT_TRUE(oracle::proper(g, r.coloring.colors()));
    EXPECT_EQ(r.coloring.palette(), r.chi);
  }
}

TEST(Verify, Examples) {
  const Coloring c5 = approx_color(cycle(5));
  EXPECT_TRUE(verify_coloring(cycle(5), c5));
  EXPECT_TRUE(verify_ratio(cycle(5), c5));
  EXPECT_FALSE(verify_coloring(complete_graph(3), colors({1, 1, 1})));
  EXPECT_THROW(verify_coloring(complete_graph(3), colors({1, 2})), InvalidArgument);

  const Graph b = blow_up(petersen(), support::all(10, 2)).graph;
  const Coloring bc = approx_color(b);
  EXPECT_TRUE(verify_coloring(b, bc));
  EXPECT_TRUE(verify_ratio(b, bc));
  EXPECT_LE(bc.palette(), 6);
  EXPECT_EQ(oracle::omega(b), 4);
  EXPECT_FALSE(verify_ratio(cycle(5), colors({1, 2, 3, 4, 5})));
}

}  // namespace
