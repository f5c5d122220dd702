#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "sepkit/important_cuts.hpp"
#include "sepkit/oracles.hpp"

using namespace sepkit;
using namespace testing_graphs;

TEST(ImportantCuts, PathExample) {
  const auto cuts = enumerate_important_cuts(path(3), 0, 2, 1);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0], (VertexSet{0, 1}));
}

TEST(ImportantCuts, TriangleExample) {
  const auto cuts = enumerate_important_cuts(complete(3), 0, 2, 2);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0], (VertexSet{0, 1}));
}

TEST(ImportantCuts, DisconnectedTerminals) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  const auto cuts = enumerate_important_cuts(g, 0, 4, 0);
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0], (VertexSet{0, 1}));
}

TEST(ImportantCuts, ParallelEdgesCount) {
  // s - a - t with the a-t edge doubled: {s} costs 1, {s, a} costs 2, and
  // neither dominates the other.
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  const auto cuts = enumerate_important_cuts(g, 0, 2, 2);
  EXPECT_EQ(cuts, brute_important_cuts(g, 0, 2, 2));
  ASSERT_EQ(cuts.size(), 2u);
  EXPECT_EQ(cuts[0], (VertexSet{0}));
  EXPECT_EQ(cuts[1], (VertexSet{0, 1}));
}

TEST(ImportantCuts, Errors) {
  EXPECT_THROW(enumerate_important_cuts(path(3), 1, 1, 2), InputError);
  EXPECT_THROW(enumerate_important_cuts(path(3), 0, 7, 2), InputError);
  EXPECT_TRUE(enumerate_important_cuts(path(3), 0, 2, 0).empty());
}

TEST(ImportantCuts, MatchesBruteForce) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.45, rng);
    if (trial % 5 == 0 && g.num_edges() > 0) g.add_edge(g.edge(0).u, g.edge(0).v);
    const int p = static_cast<int>(rng() % 5);
    const auto fast = enumerate_important_cuts(g, 0, n - 1, p);
    EXPECT_EQ(fast, brute_important_cuts(g, 0, n - 1, p));
    EXPECT_LE(static_cast<double>(fast.size()), std::pow(4.0, p));
    for (const VertexSet& x : fast) {
      EXPECT_TRUE(std::binary_search(x.begin(), x.end(), 0));
      EXPECT_FALSE(std::binary_search(x.begin(), x.end(), n - 1));
      EXPECT_LE(boundary_size(g, x), p);
      EXPECT_EQ(components(induced_subgraph(g, x).graph).size(), 1u);
    }
  }
}

TEST(CoverParams, BudgetFormula) {
  const auto p = CoverParams::make(3, 4);
  EXPECT_EQ(p.p, 2 * 5 + 4);
  EXPECT_EQ(CoverParams::make(1, 2).p, 2);
  EXPECT_THROW(CoverParams::make(0, 2), InputError);
  EXPECT_THROW(CoverParams::make(1, 0), InputError);
}

TEST(Cover, EdgeExample) {
  const Cover cover = build_cover(SeparatorInstance(path(2), {0, 1}, 1), 1);
  ASSERT_EQ(cover.sets.size(), 2u);
  EXPECT_EQ(cover.sets[0], (VertexSet{0}));
  EXPECT_EQ(cover.sets[1], (VertexSet{1}));
  EXPECT_EQ(cover.source, (std::vector<Vertex>{0, 1}));
}

TEST(Cover, SingleTerminalGetsWholeGraph) {
  const Cover cover = build_cover(SeparatorInstance(cycle(5), {2}, 1), 2);
  ASSERT_EQ(cover.sets.size(), 1u);
  EXPECT_EQ(cover.sets[0], (VertexSet{0, 1, 2, 3, 4}));
}

TEST(Cover, CoveragePropertyExhaustive) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.4, rng);
    VertexSet r = random_subset(n, 0.5, rng);
    if (r.empty()) r = {0};
    const int k = 1 + static_cast<int>(rng() % 2);
    const int M = 1 + static_cast<int>(rng() % 2);
    const SeparatorInstance inst(g, r, k);
    const Cover cover = build_cover(inst, M);
    const auto terminal = inst.terminal_mask();
    for (const VertexSet& c : cover.sets) {
      int in_r = 0;
      for (Vertex v : c) in_r += terminal[v];
      EXPECT_GE(in_r, 1);
      EXPECT_LE(in_r, k);
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      VertexSet c;
      int in_r = 0;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) {
          c.push_back(v);
          in_r += terminal[v];
        }
      }
      if (in_r < 1 || in_r > k || boundary_size(g, c) > M) continue;
      if (components(induced_subgraph(g, c).graph).size() != 1) continue;
      bool covered = false;
      for (const VertexSet& big : cover.sets) {
        covered |= std::includes(big.begin(), big.end(), c.begin(), c.end()) && boundary_size(g, big) <= boundary_size(g, c);
      }
      EXPECT_TRUE(covered);
    }
  }
}
