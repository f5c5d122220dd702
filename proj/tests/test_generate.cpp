#include <gtest/gtest.h>

#include "sepkit/generate.hpp"
#include "sepkit/oracles.hpp"

using namespace sepkit;

namespace {

GenSpec planted(int n, int noise, std::uint64_t seed = 1) {
  GenSpec s;
  s.kind = GenKind::planted_triangles;
  s.n = n;
  s.noise = noise;
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Generate, PlantedNoNoise) {
  const auto gen = generate(planted(6, 0));
  EXPECT_EQ(gen.graph.num_edges(), 6);
  EXPECT_EQ(components(gen.graph).size(), 2u);
  EXPECT_EQ(brute_kes(SeparatorInstance::all_terminals(gen.graph, 3)).objective, 0);
}

TEST(Generate, PlantedOneNoiseEdge) {
  const auto gen = generate(planted(6, 1));
  EXPECT_EQ(gen.graph.num_edges(), 7);
  EXPECT_EQ(brute_kes(SeparatorInstance::all_terminals(gen.graph, 3)).objective, 1);
}

TEST(Generate, PlantedWitnessAndDegree) {
  for (int n : {3, 6, 9, 12}) {
    for (int noise = 0; noise <= (n >= 6 ? n / 2 : 0); ++noise) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto gen = generate(planted(n, noise, seed));
        ASSERT_TRUE(gen.planted.has_value());
        EXPECT_LE(gen.graph.max_degree(), 4);
        std::vector<int> part(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < gen.planted->triangles.size(); ++i) {
          for (Vertex v : gen.planted->triangles[i]) part[v] = static_cast<int>(i);
        }
        const Partition p(part);
        EXPECT_EQ(cut_edges(gen.graph, p), gen.planted->noise_edges);
        EXPECT_EQ(static_cast<int>(gen.planted->noise_edges.size()), noise);
      }
    }
  }
  EXPECT_THROW(generate(planted(7, 0)), InputError);
  EXPECT_THROW(generate(planted(6, 4)), InputError);
  EXPECT_THROW(generate(planted(3, 1)), InputError);
}

TEST(Generate, Deterministic) {
  GenSpec s;
  s.kind = GenKind::random_gnm;
  s.n = 12;
  s.m = 20;
  s.seed = 99;
  EXPECT_EQ(generate(s).graph, generate(s).graph);
  EXPECT_EQ(generate(planted(12, 3, 5)).graph, generate(planted(12, 3, 5)).graph);
  s.seed = 100;
  const Graph other = generate(s).graph;
  EXPECT_EQ(other.num_edges(), 20);
}

TEST(Generate, GridAndOthers) {
  GenSpec s;
  s.kind = GenKind::grid;
  s.rows = 3;
  s.cols = 3;
  const Graph grid = generate(s).graph;
  EXPECT_EQ(grid.num_vertices(), 9);
  EXPECT_EQ(grid.num_edges(), 12);
  EXPECT_LE(grid.max_degree(), 4);

  s = {};
  s.kind = GenKind::random_regular;
  s.n = 10;
  s.d = 3;
  const Graph reg = generate(s).graph;
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(reg.degree(v), 3);
  s.n = 5;
  EXPECT_THROW(generate(s), InputError);

  s = {};
  s.kind = GenKind::disjoint_cliques;
  s.n = 3;
  s.d = 4;
  const Graph cliques = generate(s).graph;
  EXPECT_EQ(cliques.num_edges(), 18);
  EXPECT_EQ(components(cliques).size(), 3u);

  s = {};
  s.kind = GenKind::random_gnm;
  s.n = 4;
  s.m = 7;
  EXPECT_THROW(generate(s), InputError);
  EXPECT_EQ(parse_gen_kind("planted-triangles"), GenKind::planted_triangles);
  EXPECT_THROW(parse_gen_kind("torus"), InputError);
}
