#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/flow.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

namespace detail {

// Candidate generation for important cuts. Every important cut with source
// set A contains R, the s-component of the furthest minimum (A,t)-cut, so
// branch on one boundary edge uv of R: either uv is cut (delete it, budget
// drops by one) or v joins the source set. Leaves are reached when A and t
// are disconnected; the s-component there is a candidate.
class ImportantCutSearch {
 public:
  ImportantCutSearch(const Graph& g, Vertex s, Vertex t) : g_(g), s_(s), t_(t) {}

  std::vector<VertexSet> run(int p) {
    std::vector<char> in_a(static_cast<std::size_t>(g_.num_vertices()), 0);
    in_a[s_] = 1;
    std::vector<char> deleted(static_cast<std::size_t>(g_.num_edges()), 0);
    recurse(in_a, deleted, p);
    return {candidates_.begin(), candidates_.end()};
  }

 private:
  void recurse(const std::vector<char>& in_a, std::vector<char>& deleted, int budget) {
    if (budget < 0) return;
    if (!visited_.insert(std::string(in_a.begin(), in_a.end()) + '|' + std::string(deleted.begin(), deleted.end())).second) {
      return;
    }
    const int n = g_.num_vertices();
    const int super = n;
    FlowNetwork net(n + 1, super, t_);
    Capacity big = 1;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (deleted[e]) continue;
      net.add_undirected(g_.edge(e).u, g_.edge(e).v, 1);
      ++big;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (in_a[v]) net.add_arc(super, v, big);
    }
    const MinCut cut = min_st_cut(net);
    if (cut.value > budget) return;

    std::vector<char> side(static_cast<std::size_t>(n), 0);
    for (int v : cut.maximal_source_side) {
      if (v < n) side[v] = 1;
    }
    // s-component of the maximal side.
    std::vector<char> far(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{s_};
    far[s_] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g_.incident(v)) {
        if (deleted[inc.edge] || far[inc.neighbor] || !side[inc.neighbor]) continue;
        far[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }

    if (cut.value == 0) {
      VertexSet x;
      for (Vertex v = 0; v < n; ++v) {
        if (far[v]) x.push_back(v);
      }
      candidates_.insert(std::move(x));
      return;
    }

    EdgeId pick = -1;
    for (EdgeId e = 0; e < g_.num_edges() && pick < 0; ++e) {
      if (!deleted[e] && far[g_.edge(e).u] != far[g_.edge(e).v]) pick = e;
    }
    if (pick < 0) throw InternalError("important cuts: no boundary edge at positive cut value");
    const Vertex outside = far[g_.edge(pick).u] ? g_.edge(pick).v : g_.edge(pick).u;

    deleted[pick] = 1;
    recurse(far, deleted, budget - 1);
    deleted[pick] = 0;

    if (outside != t_) {
      std::vector<char> grown = far;
      grown[outside] = 1;
      recurse(grown, deleted, budget);
    }
  }

  const Graph& g_;
  Vertex s_;
  Vertex t_;
  std::set<VertexSet> candidates_;
  std::set<std::string> visited_;
};

}  // namespace detail

// All important s-t cuts with boundary at most p, sorted. An important cut
// is a vertex set X with s in X, t outside, G[X] connected and no connected
// s-t cut X' strictly containing X with |d(X')| <= |d(X)|. Parallel edges
// count with multiplicity.
inline std::vector<VertexSet> enumerate_important_cuts(const Graph& g, Vertex s, Vertex t, int p) {
  if (!g.contains(s) || !g.contains(t)) throw InputError("important cuts: terminal out of range");
  if (s == t) throw InputError("important cuts need s != t");
  if (p < 0) return {};
  std::vector<VertexSet> candidates = detail::ImportantCutSearch(g, s, t).run(p);

  // Every non-important candidate is dominated by an important cut of no
  // larger boundary, and those are all candidates, so filtering against the
  // candidate family is exact.
  std::vector<int> size(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) size[i] = boundary_size(g, candidates[i]);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (size[i] > p) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = j != i && size[j] <= size[i] && candidates[j].size() > candidates[i].size() &&
                  std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(), candidates[i].end());
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  return out;
}

struct CoverParams {
  int k = 1;
  int M = 1;  // boundary bound on covered components
  int p = 1;  // important-cut budget (k-1)(M+1)+M

  static CoverParams make(int k, int M) {
    if (k < 1) throw InputError("cover: k must be at least 1");
    if (M < 1) throw InputError("cover: M must be at least 1");
    return {k, M, (k - 1) * (M + 1) + M};
  }
};

struct Cover {
  std::vector<VertexSet> sets;
  std::vector<Vertex> source;  // terminal whose family produced sets[i]
  CoverParams params;
};

// For each terminal s: add a sink t joined to every other terminal by M+1
// parallel edges and collect the important s-t cuts of boundary <= p. Every
// connected C with 1 <= |C n R| <= k and |d(C)| <= M then lies inside some
// cover set C' with |d(C')| <= |d(C)|.
inline Cover build_cover(const SeparatorInstance& inst, int M) {
  if (inst.terminals.empty()) throw InputError("cover: terminal set must be nonempty");
  Cover cover;
  cover.params = CoverParams::make(inst.k, M);
  const auto terminal = inst.terminal_mask();
  std::set<VertexSet> seen;
  for (Vertex s : inst.terminals) {
    Graph h = inst.graph;
    const Vertex t = h.add_vertex();
    for (Vertex v : inst.terminals) {
      if (v == s) continue;
      for (int i = 0; i <= M; ++i) h.add_edge(v, t);
    }
    for (VertexSet& c : enumerate_important_cuts(h, s, t, cover.params.p)) {
      int r = 0;
      for (Vertex v : c) r += terminal[v];
      if (r < 1 || r > inst.k) continue;
      if (!seen.insert(c).second) continue;
      cover.sets.push_back(std::move(c));
      cover.source.push_back(s);
    }
  }
  return cover;
}

}  // namespace sepkit
