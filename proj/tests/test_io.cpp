#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "sepkit/io.hpp"

using namespace sepkit;
using namespace testing_graphs;

TEST(ParseGr, Triangle) {
  const Graph g = parse_gr("c a comment\np tw 3 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(g, complete(3));
}

TEST(ParseGr, ParallelEdges) {
  const Graph g = parse_gr("p tw 2 2\n1 2\n1 2\n");
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(ParseGr, Errors) {
  EXPECT_THROW(parse_gr("p tw 2 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_gr("p tw 2 1\n1 3\n"), InputError);
  EXPECT_THROW(parse_gr("p tw 2 1\n0 1\n"), InputError);
  EXPECT_THROW(parse_gr("p tw 3 3\n1 2\n"), InputError);
  EXPECT_THROW(parse_gr("p td 3 0\n"), InputError);
  EXPECT_THROW(parse_gr("1 2\n"), InputError);
  EXPECT_THROW(parse_gr(""), InputError);
  EXPECT_THROW(parse_gr("p tw 2 1\n1 x\n"), InputError);
  EXPECT_THROW(parse_gr("p tw 2 1\n1 2 3\n"), InputError);
  EXPECT_THROW(parse_gr("p tw -2 0\n"), InputError);
}

TEST(ParseGr, RoundTripIsBitStable) {
  std::mt19937_64 rng(173);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
    if (g.num_edges() > 0 && trial % 4 == 0) g.add_edge(g.edge(0).v, g.edge(0).u);
    const std::string text = emit_gr(g);
    const Graph back = parse_gr(text);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(back.num_edges(), g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(back.edge(e).u, g.edge(e).u);
      EXPECT_EQ(back.edge(e).v, g.edge(e).v);
    }
    EXPECT_EQ(emit_gr(back), text);
  }
}

TEST(ParseTd, PathDecomposition) {
  const Graph g = path(3);
  const TreeDecomposition td = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", g);
  EXPECT_EQ(td.width(), 1);
  EXPECT_EQ(td.num_nodes(), 2);
}

TEST(ParseTd, Errors) {
  const Graph g = path(3);
  // vertex 3 is missing
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2\n1 2\n", g), DecompositionError);
  // cycle in the tree
  EXPECT_THROW(parse_td("s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 2\n1 2\n2 3\n3 1\n", g), DecompositionError);
  EXPECT_THROW(parse_td("s td 2 2 4\nb 1 1 2\nb 2 2 3\n1 2\n", g), InputError);
  EXPECT_THROW(parse_td("s td 2 3 3\nb 1 1 2\nb 2 2 3\n1 2\n", g), InputError);
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2\n", g), InputError);
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\n", g), InputError);
  EXPECT_THROW(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 5\n", g), InputError);
  EXPECT_THROW(parse_td("b 1 1 2\n", g), InputError);
}

TEST(ParseTd, RoundTripIsBitStable) {
  std::mt19937_64 rng(179);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    const TreeDecomposition td = exact_treewidth(g).decomposition;
    const std::string text = emit_td(td, g);
    const TreeDecomposition back = parse_td(text, g);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_EQ(emit_td(back, g), text);
  }
}

TEST(Terminals, Parse) {
  EXPECT_EQ(parse_terminals("c r\n3\n1\n", path(3)), (VertexSet{0, 2}));
  EXPECT_THROW(parse_terminals("4\n", path(3)), InputError);
  EXPECT_THROW(parse_terminals("1 2\n", path(3)), InputError);
}

TEST(LabelingJson, RoundTrip) {
  LabelingInstance inst(path(3), 2);
  inst.set_cost(0, 1, forbidden);
  inst.set_cost(2, 0, 4);
  const auto j = labeling_to_json(inst);
  const LabelingInstance back = parse_labeling_json(j.dump());
  EXPECT_EQ(back.graph(), inst.graph());
  for (Vertex v = 0; v < 3; ++v) {
    for (Label l = 0; l < 2; ++l) EXPECT_EQ(back.cost(v, l), inst.cost(v, l));
  }
  EXPECT_THROW(parse_labeling_json("{"), InputError);
  EXPECT_THROW(parse_labeling_json(R"({"vertices":1,"labels":1,"edges":[],"costs":[[-1]]})"), InputError);
  EXPECT_THROW(parse_labeling_json(R"({"vertices":2,"labels":1,"edges":[[0,0]],"costs":[[0],[0]]})"), InputError);
}
