#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "sepkit/edge_separator.hpp"
#include "sepkit/oracles.hpp"

using namespace sepkit;
using namespace testing_graphs;

namespace {

bool connected(const Graph& g, const VertexSet& c) {
  if (c.empty()) return false;
  return components(induced_subgraph(g, c).graph).size() == 1;
}

// Minimum cut after carving C, over every C with C n R = rprime.
int exhaustive_move(const LocalSearchState& state, const VertexSet& rprime) {
  const Graph& g = state.instance.graph;
  const auto terminal = state.instance.terminal_mask();
  VertexSet free;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!terminal[v]) free.push_back(v);
  }
  int best = -1;
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    VertexSet c = rprime;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) c.push_back(free[i]);
    }
    const int value = carved_objective(g, state.partition, normalized(c));
    if (best < 0 || value < best) best = value;
  }
  return best;
}

}  // namespace

TEST(DegreeReduce, StarLosesEveryEdge) {
  const auto red = degree_reduce(SeparatorInstance::all_terminals(star(10), 2), Rational(1));
  EXPECT_EQ(red.deleted.size(), 10u);
  EXPECT_EQ(red.reduced.num_edges(), 0);
}

TEST(DegreeReduce, LowDegreeUntouched) {
  EXPECT_TRUE(degree_reduce(SeparatorInstance::all_terminals(cycle(6), 1), Rational(1)).deleted.empty());
  EXPECT_THROW(degree_reduce(SeparatorInstance::all_terminals(cycle(6), 1), Rational(0)), InputError);
}

TEST(DegreeReduce, ThresholdIsExact) {
  // 2k/eps = 2*1/(2/3) = 3: degree 3 stays, degree 4 goes.
  EXPECT_TRUE(degree_reduce(SeparatorInstance::all_terminals(star(3), 1), Rational(2, 3)).deleted.empty());
  EXPECT_EQ(degree_reduce(SeparatorInstance::all_terminals(star(4), 1), Rational(2, 3)).deleted.size(), 4u);
}

TEST(DegreeReduce, MaxDegreeBound) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(12, 0.5, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    const Rational eps(1 + static_cast<int>(rng() % 4), 2);
    const auto red = degree_reduce(SeparatorInstance::all_terminals(g, k), eps);
    EXPECT_LE(Rational(red.reduced.max_degree()), Rational(2 * k) / eps);
    EXPECT_EQ(red.reduced.num_edges() + static_cast<int>(red.deleted.size()), g.num_edges());
  }
}

TEST(ConnectedSets, Counts) {
  auto count = [](const Graph& g, int k) {
    int c = 0;
    for_each_connected_set(g, k, [&](const VertexSet&) {
      ++c;
      return false;
    });
    return c;
  };
  EXPECT_EQ(count(path(4), 2), 7);
  EXPECT_EQ(count(complete(4), 4), 15);
  EXPECT_EQ(count(star(3), 2), 7);
  EXPECT_EQ(count(Graph(3), 3), 3);
}

TEST(ConnectedSets, MatchSubsetEnumeration) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, 0.35, rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::set<VertexSet> seen;
    int visits = 0;
    for_each_connected_set(g, k, [&](const VertexSet& c) {
      seen.insert(c);
      ++visits;
      return false;
    });
    EXPECT_EQ(visits, static_cast<int>(seen.size())) << "duplicate visit";
    std::set<VertexSet> expect;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      VertexSet c;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) c.push_back(v);
      }
      if (static_cast<int>(c.size()) <= k && connected(g, c)) expect.insert(c);
    }
    EXPECT_EQ(seen, expect);
  }
}

TEST(CarveDelta, MatchesRecomputation) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(8, 0.4, rng);
    std::vector<int> assign(8);
    for (int& a : assign) a = static_cast<int>(rng() % 3);
    const Partition p(assign);
    const VertexSet c = normalized(random_subset(8, 0.4, rng));
    if (c.empty()) continue;
    EXPECT_EQ(cut_size(g, p) + carve_delta(g, p, c), carved_objective(g, p, c));
  }
}

TEST(LocalSearchKes, SmallExamples) {
  EXPECT_EQ(local_search_kes(SeparatorInstance::all_terminals(complete(3), 1), Rational(1, 4)).objective, 3);
  const auto p4 = local_search_kes(SeparatorInstance::all_terminals(path(4), 2), Rational(1, 4));
  EXPECT_EQ(p4.objective, 1);
  EXPECT_EQ(p4.cut, (EdgeSet{1}));
  EXPECT_EQ(local_search_kes(SeparatorInstance::all_terminals(complete(4), 2), Rational(1, 4)).objective, 4);
}

TEST(LocalSearchKes, LocallyOptimalAndWithinTwice) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.4, rng);
    const int k = 2 + static_cast<int>(rng() % 2);
    const auto inst = SeparatorInstance::all_terminals(g, k);
    const auto res = local_search_kes(inst, Rational(1, 4));
    for (const VertexSet& part : res.partition.parts()) EXPECT_LE(static_cast<int>(part.size()), k);
    EXPECT_EQ(res.objective, cut_size(g, res.partition));
    EXPECT_LE(res.objective, 2 * brute_kes(inst).objective);
    if (!res.degree_deleted.empty()) continue;
    const auto in_cut = edge_mask(g.num_edges(), res.cut);
    for_each_connected_set(g, k, [&](const VertexSet& c) {
      int outside = 0, inside = 0;
      for (EdgeId e : boundary(g, c)) outside += !in_cut[e];
      for (EdgeId e : internal_edges(g, c)) inside += in_cut[e];
      EXPECT_GE(outside, inside);
      return false;
    });
  }
}

TEST(BestLocalMove, PathExample) {
  // r1 - a - r2, all singletons (cut 2), R' = {r1}.
  const LocalSearchState state(SeparatorInstance(path(3), {0, 2}, 1));
  EXPECT_EQ(state.objective, 2);
  const LocalMove move = best_local_move(state, VertexSet{0});
  EXPECT_EQ(move.part, (VertexSet{0, 1}));
  EXPECT_EQ(move.objective, 1);
}

TEST(BestLocalMove, ReproposingAPartKeepsObjective) {
  LocalSearchState state(SeparatorInstance(path(3), {0, 2}, 1));
  state.apply(best_local_move(state, VertexSet{0}));
  EXPECT_EQ(best_local_move(state, VertexSet{0}).objective, state.objective);
  EXPECT_THROW(state.apply(best_local_move(state, VertexSet{0})), InternalError);
}

TEST(BestLocalMove, IsolatedTerminal) {
  Graph g(3);
  g.add_edge(1, 2);
  const LocalSearchState state(SeparatorInstance(g, {0, 1}, 1));
  EXPECT_EQ(best_local_move(state, VertexSet{0}).objective, state.objective);
}

TEST(BestLocalMove, RejectsBadSubsets) {
  const LocalSearchState state(SeparatorInstance(path(3), {0, 2}, 1));
  EXPECT_THROW(best_local_move(state, VertexSet{}), InputError);
  EXPECT_THROW(best_local_move(state, VertexSet{1}), InputError);
}

TEST(BestLocalMove, MatchesExhaustiveMinimum) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.4, rng);
    VertexSet r = random_subset(n, 0.5, rng);
    if (r.size() < 2) r = {0, n - 1};
    LocalSearchState state(SeparatorInstance(g, r, 2));
    // a few random carvings to get a non-trivial blue set
    for (int step = 0; step < 2; ++step) {
      const VertexSet c = normalized(random_subset(n, 0.4, rng));
      if (!c.empty()) state.partition.carve(c);
    }
    state.objective = cut_size(g, state.partition);
    const VertexSet rprime{r[rng() % r.size()]};
    const LocalMove move = best_local_move(state, rprime);
    EXPECT_EQ(move.objective, exhaustive_move(state, rprime));
    EXPECT_EQ(move.objective, carved_objective(g, state.partition, move.part));
  }
}

TEST(LocalSearchKses, TrivialCases) {
  const auto one = local_search_kses(SeparatorInstance(path(4), {2}, 1));
  EXPECT_TRUE(one.cut.empty());
  EXPECT_EQ(one.partition.num_parts(), 1);
  EXPECT_EQ(local_search_kses(SeparatorInstance::all_terminals(complete(3), 1)).objective, 3);
}

TEST(LocalSearchKses, WithinTwiceOptimum) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.4, rng);
    VertexSet r = random_subset(n, 0.5, rng);
    if (r.empty()) r = {0};
    const SeparatorInstance inst(g, r, 1 + static_cast<int>(rng() % 3));
    const auto res = local_search_kses(inst);
    EXPECT_LE(max_terminals_per_component(g, inst.terminals, res.cut), inst.k);
    EXPECT_LE(res.objective, 2 * brute_kes(inst).objective);
  }
}
