#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/flow.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/rational.hpp"

namespace sepkit {

struct DegreeReduction {
  EdgeSet deleted;                     // ids in the input graph
  Graph reduced;                       // input minus `deleted`, renumbered
  std::vector<EdgeId> reduced_to_original;
};

// Deletes every edge incident to a vertex of degree > 2k/eps (degrees taken
// in the input graph). The result has maximum degree <= 2k/eps.
inline DegreeReduction degree_reduce(const SeparatorInstance& inst, Rational epsilon) {
  if (epsilon.num <= 0) throw InputError("epsilon must be positive");
  const Graph& g = inst.graph;
  // deg(v) > 2k/eps  <=>  deg(v) * eps.num > 2k * eps.den
  auto heavy = [&](Vertex v) { return static_cast<std::int64_t>(g.degree(v)) * epsilon.num > 2LL * inst.k * epsilon.den; };
  DegreeReduction out;
  out.reduced = Graph(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (heavy(ed.u) || heavy(ed.v)) {
      out.deleted.push_back(e);
    } else {
      out.reduced.add_edge(ed.u, ed.v);
      out.reduced_to_original.push_back(e);
    }
  }
  return out;
}

// Visits every vertex set C with |C| <= max_size and G[C] connected exactly
// once: sets are grown from their smallest vertex using exclusive
// neighbourhoods. Stops early when visit returns true; returns whether it did.
inline bool for_each_connected_set(const Graph& g, int max_size, const std::function<bool(const VertexSet&)>& visit) {
  const int n = g.num_vertices();
  if (max_size < 1) return false;
  VertexSet current;
  // touched[v] counts members of `current` that are v or adjacent to v.
  std::vector<int> touched(static_cast<std::size_t>(n), 0);
  auto mark = [&](Vertex v, int delta) {
    touched[v] += delta;
    for (const Incidence& inc : g.incident(v)) touched[inc.neighbor] += delta;
  };

  std::function<bool(Vertex, std::vector<Vertex>)> grow = [&](Vertex root, std::vector<Vertex> ext) {
    VertexSet sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (visit(sorted)) return true;
    if (static_cast<int>(current.size()) == max_size) return false;
    while (!ext.empty()) {
      const Vertex w = ext.front();
      ext.erase(ext.begin());
      std::vector<Vertex> next = ext;
      for (const Incidence& inc : g.incident(w)) {
        const Vertex u = inc.neighbor;
        if (u > root && touched[u] == 0 && std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
      }
      std::sort(next.begin(), next.end());
      current.push_back(w);
      mark(w, 1);
      const bool stop = grow(root, std::move(next));
      mark(w, -1);
      current.pop_back();
      if (stop) return true;
    }
    return false;
  };

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> ext;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor > v) ext.push_back(inc.neighbor);
    }
    ext = normalized(std::move(ext));
    current = {v};
    mark(v, 1);
    const bool stop = grow(v, std::move(ext));
    mark(v, -1);
    if (stop) return true;
  }
  return false;
}

// Change in cut size if c becomes its own part: edges of the boundary not
// yet cut become cut, cut edges inside c are restored.
inline int carve_delta(const Graph& g, const Partition& p, std::span<const Vertex> c) {
  const auto in = vertex_mask(g.num_vertices(), c);
  int newly_cut = 0, restored = 0;
  for (Vertex v : c) {
    for (const Incidence& inc : g.incident(v)) {
      const bool cut = p.part(v) != p.part(inc.neighbor);
      if (!in[inc.neighbor]) {
        newly_cut += !cut;
      } else if (v < inc.neighbor) {
        restored += cut;
      }
    }
  }
  return newly_cut - restored;
}

// A connected set of at most k vertices whose carving would shrink the cut,
// if one exists. Empty optional certifies local optimality.
inline std::optional<VertexSet> improving_connected_set(const Graph& g, const Partition& p, int k) {
  std::optional<VertexSet> found;
  for_each_connected_set(g, k, [&](const VertexSet& c) {
    if (carve_delta(g, p, c) < 0) found = c;
    return found.has_value();
  });
  return found;
}

struct LocalMove {
  VertexSet part;      // the carved set C
  int objective = 0;   // cut size after the move
};

struct LocalSearchState {
  SeparatorInstance instance;
  Partition partition;
  int objective = 0;
  std::vector<LocalMove> moves;

  explicit LocalSearchState(SeparatorInstance inst)
      : instance(std::move(inst)),
        partition(Partition::singletons(instance.graph.num_vertices())),
        objective(instance.graph.num_edges()) {}

  LocalSearchState(SeparatorInstance inst, Partition p) : instance(std::move(inst)), partition(std::move(p)) {
    objective = cut_size(instance.graph, partition);
  }

  void apply(const LocalMove& move) {
    if (move.objective >= objective) throw InternalError("local move does not improve the objective");
    partition.carve(move.part);
    objective = cut_size(instance.graph, partition);
    if (objective != move.objective) throw InternalError("local move objective mismatch");
    moves.push_back(move);
  }
};

struct EdgeSeparatorResult {
  EdgeSet cut;
  Partition partition;
  int objective = 0;
  int moves = 0;
  EdgeSet degree_deleted;  // subset of cut removed by degree reduction
};

// k-Edge Separator (every vertex a terminal): degree reduction, then
// first-improvement local search over connected parts of size <= k.
inline EdgeSeparatorResult local_search_kes(const SeparatorInstance& inst, Rational epsilon) {
  const DegreeReduction red = degree_reduce(inst, epsilon);
  const Graph& h = red.reduced;
  Partition p = Partition::singletons(h.num_vertices());
  int moves = 0;
  while (auto c = improving_connected_set(h, p, inst.k)) {
    p.carve(*c);
    ++moves;
  }
  EdgeSeparatorResult out;
  out.partition = std::move(p);
  out.cut = cut_edges(inst.graph, out.partition);
  out.objective = static_cast<int>(out.cut.size());
  out.moves = moves;
  out.degree_deleted = red.deleted;
  return out;
}

// Best part C with C n R = rprime, minimising the cut of the partition after
// carving C. Terminals in rprime merge into the source, the remaining
// terminals into the sink; currently cut ("blue") edges between two free
// vertices get a private node joined to source and both endpoints, blue
// edges at the sink side also gain a source edge. The min cut of this
// network plus the constant terms is the new objective.
//
// rprime == R is accepted as well; the sink is then isolated.
inline LocalMove best_local_move(const LocalSearchState& state, std::span<const Vertex> rprime) {
  const Graph& g = state.instance.graph;
  const int n = g.num_vertices();
  const VertexSet inside = normalized(VertexSet(rprime.begin(), rprime.end()));
  if (inside.empty()) throw InputError("best_local_move: rprime must be nonempty");
  enum Role : char { free_vertex, source_side, sink_side };
  std::vector<char> role(static_cast<std::size_t>(n), free_vertex);
  for (Vertex v : state.instance.terminals) role[v] = sink_side;
  for (Vertex v : inside) {
    if (!g.contains(v) || role[v] != sink_side) throw InputError("best_local_move: rprime must be a subset of R");
    role[v] = source_side;
  }

  constexpr int s = 0, t = 1;
  std::vector<int> node(static_cast<std::size_t>(n), -1);
  int next = 2;
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == free_vertex) node[v] = next++;
    if (role[v] == source_side) node[v] = s;
    if (role[v] == sink_side) node[v] = t;
  }
  FlowNetwork net(next, s, t);
  int constant = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool blue = state.partition.part(ed.u) != state.partition.part(ed.v);
    const int a = node[ed.u], b = node[ed.v];
    if (a == s && b == s) continue;
    if ((a == s && b == t) || (a == t && b == s)) {
      ++constant;
      continue;
    }
    if (a == t && b == t) {
      constant += blue;
      continue;
    }
    if (!blue || a == s || b == s) {
      net.add_undirected(a, b, 1);
      continue;
    }
    if (a == t || b == t) {
      const int u = a == t ? b : a;
      net.add_undirected(u, t, 1);
      net.add_undirected(s, u, 1);
      continue;
    }
    const int te = net.add_node();
    net.add_undirected(s, te, 1);
    net.add_undirected(a, te, 1);
    net.add_undirected(b, te, 1);
  }
  const MinCut cut = min_st_cut(net);
  const auto reached = vertex_mask(net.num_nodes(), cut.source_side);
  LocalMove move;
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == source_side || (role[v] == free_vertex && reached[node[v]])) move.part.push_back(v);
  }
  move.objective = static_cast<int>(cut.value) + constant;
  return move;
}

// Cut size after carving c out of p.
inline int carved_objective(const Graph& g, const Partition& p, std::span<const Vertex> c) {
  Partition q = p;
  q.carve(c);
  return cut_size(g, q);
}

// k-Subset Edge Separator local search: each round takes the best move over
// all nonempty R' of at most k terminals and applies it if it strictly
// improves. Starts from singletons.
inline EdgeSeparatorResult local_search_kses(const SeparatorInstance& inst) {
  if (inst.terminals.empty()) throw InputError("local_search_kses: terminal set must be nonempty");
  const int r = static_cast<int>(inst.terminals.size());
  if (r <= inst.k) {
    // Nothing to separate: the empty cut is optimal.
    EdgeSeparatorResult out;
    std::vector<int> assign(static_cast<std::size_t>(inst.graph.num_vertices()));
    const auto comps = components(inst.graph);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (Vertex v : comps[i]) assign[v] = static_cast<int>(i);
    }
    out.partition = Partition(std::move(assign));
    return out;
  }
  LocalSearchState state(inst);
  const int max_size = std::min(inst.k, r);
  for (;;) {
    std::optional<LocalMove> best;
    auto consider = [&](const std::vector<int>& pick) {
      VertexSet rprime;
      for (int i : pick) rprime.push_back(inst.terminals[i]);
      LocalMove move = best_local_move(state, rprime);
      if (move.objective < (best ? best->objective : state.objective)) best = std::move(move);
      return best && best->objective == 0;
    };
    bool stop = false;
    for (int size = 1; size <= max_size && !stop; ++size) {
      std::vector<int> pick(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) pick[i] = i;
      for (;;) {
        if ((stop = consider(pick))) break;
        int i = size - 1;
        while (i >= 0 && pick[i] == r - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    if (!best) break;
    state.apply(*best);
  }
  EdgeSeparatorResult out;
  out.partition = state.partition;
  out.cut = cut_edges(inst.graph, out.partition);
  out.objective = state.objective;
  out.moves = static_cast<int>(state.moves.size());
  return out;
}

}  // namespace sepkit
