#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "sepkit/tree_decomposition.hpp"

using namespace sepkit;
using namespace testing_graphs;

namespace {

// Path decomposition of P_n: bags {i, i+1}.
TreeDecomposition path_decomposition(int n) {
  TreeDecomposition td;
  for (int i = 0; i + 1 < n; ++i) td.bags.push_back({i, i + 1});
  for (int i = 0; i + 2 < n; ++i) td.tree_edges.emplace_back(i, i + 1);
  return td;
}

int max_terminals_after(const Graph& g, const VertexSet& r, const VertexSet& x) {
  return max_terminals_per_component(g, r, {}, x);
}

}  // namespace

TEST(Validate, AcceptsPathDecomposition) {
  EXPECT_TRUE(validate(path(4), path_decomposition(4)).ok());
  EXPECT_EQ(path_decomposition(4).width(), 1);
}

TEST(Validate, ReportsViolations) {
  const Graph g = path(4);
  TreeDecomposition td = path_decomposition(4);
  td.bags[1] = {1};
  EXPECT_EQ(validate(g, td).violation, Violation::edge_not_covered);

  td = path_decomposition(4);
  td.bags[2] = {3};
  EXPECT_EQ(validate(g, td).violation, Violation::edge_not_covered);

  td = path_decomposition(4);
  td.bags = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  td.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
  // vertex 0 occurs in bags 0 and 3, which are not adjacent
  EXPECT_EQ(validate(g, td).violation, Violation::disconnected_occurrences);

  td = path_decomposition(4);
  td.tree_edges.emplace_back(0, 2);
  EXPECT_EQ(validate(g, td).violation, Violation::malformed_tree);

  td = path_decomposition(4);
  td.bags[0] = {1, 2};
  EXPECT_EQ(validate(g, td).violation, Violation::missing_vertex);

  td = path_decomposition(4);
  td.bags[0] = {0, 9};
  EXPECT_EQ(validate(g, td).violation, Violation::vertex_out_of_range);
  EXPECT_THROW(require_valid(g, td), DecompositionError);
}

TEST(ExactTreewidth, KnownValues) {
  EXPECT_EQ(exact_treewidth(Graph(1)).width, 0);
  EXPECT_EQ(exact_treewidth(path(6)).width, 1);
  EXPECT_EQ(exact_treewidth(star(5)).width, 1);
  EXPECT_EQ(exact_treewidth(cycle(7)).width, 2);
  EXPECT_EQ(exact_treewidth(complete(5)).width, 4);
  EXPECT_EQ(exact_treewidth(grid(3, 3)).width, 3);
  EXPECT_EQ(exact_treewidth(grid(4, 4)).width, 4);
  EXPECT_THROW(exact_treewidth(path(25), 20), LimitError);
}

TEST(ExactTreewidth, WitnessIsValidAndTight) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.35, rng);
    const auto res = exact_treewidth(g);
    EXPECT_TRUE(validate(g, res.decomposition).ok()) << validate(g, res.decomposition).detail;
    EXPECT_EQ(res.decomposition.width(), res.width);
  }
}

TEST(NiceDecomposition, StructureAndValidity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    const auto res = exact_treewidth(g);
    const NiceTreeDecomposition nice = make_nice(g, res.decomposition);
    std::string why;
    EXPECT_TRUE(is_nice(nice, &why)) << why;
    EXPECT_TRUE(validate(g, nice.td).ok());
    EXPECT_EQ(nice.td.width(), res.width);
    EXPECT_TRUE(nice.td.bags[nice.td.root].empty());
  }
}

TEST(FineSeparator, SmallTerminalSetNeedsNothing) {
  const Graph g = path(5);
  EXPECT_TRUE(fine_separator(g, path_decomposition(5), VertexSet{0, 4}, 2).empty());
  EXPECT_THROW(fine_separator(g, path_decomposition(5), VertexSet{0}, 0), InputError);
}

TEST(FineSeparator, PathSplitsIntoPieces) {
  const Graph g = path(10);
  VertexSet r(10);
  for (int i = 0; i < 10; ++i) r[i] = i;
  const auto trace = fine_separator_trace(g, path_decomposition(10), r, 3);
  EXPECT_LE(static_cast<int>(trace.separator.size()), 2 * (10 / 3));
  EXPECT_LE(max_terminals_after(g, r, trace.separator), 3);
  EXPECT_LE(trace.iterations, 10 / 3);
}

TEST(FineSeparator, PostconditionsOnRandomInstances) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = random_graph(n, 0.3, rng);
    const auto res = exact_treewidth(g);
    VertexSet r = random_subset(n, 0.6, rng);
    const int delta = 1 + static_cast<int>(rng() % 3);
    const auto trace = fine_separator_trace(g, res.decomposition, r, delta);
    const int t = res.width + 1;
    EXPECT_LE(static_cast<int>(trace.separator.size()), t * (static_cast<int>(r.size()) / delta));
    EXPECT_LE(trace.iterations, static_cast<int>(r.size()) / delta);
    EXPECT_LE(max_terminals_after(g, r, trace.separator), delta);
  }
}
