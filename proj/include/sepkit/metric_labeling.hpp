#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/flow.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/important_cuts.hpp"
#include "sepkit/labeling.hpp"
#include "sepkit/rational.hpp"

namespace sepkit {

struct UmlResult {
  Labeling labeling;
  std::int64_t objective = 0;
  int moves = 0;
};

// One expansion move: every vertex either keeps its label (source side) or
// switches to `alpha` (sink side). The Potts term on each edge is submodular
// in this binary choice, so a single min cut finds the best move.
inline Labeling expansion_move(const LabelingInstance& inst, const Labeling& current, Label alpha) {
  const int n = inst.num_vertices();
  const Graph& g = inst.graph();
  Capacity infinite = 1 + g.num_edges();
  for (Vertex v = 0; v < n; ++v) {
    for (Label l = 0; l < inst.num_labels(); ++l) {
      if (auto c = inst.cost(v, l)) infinite += *c;
    }
  }
  const int s = n, t = n + 1;
  FlowNetwork net(n + 2, s, t);
  // Linear coefficient of x_v (x_v = 1 means switch); folded into
  // terminal arcs after all edges are seen.
  std::vector<Capacity> linear(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    const LabelCost keep = inst.cost(v, current[v]);
    const LabelCost swap = inst.cost(v, alpha);
    if (!keep) throw InputError("expansion_move: current labeling is infeasible");
    if (*keep > 0) net.add_arc(v, t, *keep);
    net.add_arc(s, v, swap ? *swap : infinite);
  }
  for (const Edge& e : g.edges()) {
    const Label a = current[e.u], b = current[e.v];
    const Capacity keep_keep = a != b, keep_swap = a != alpha, swap_keep = alpha != b;
    // E = A + (C-A) x_u + (D-C) x_v + (B+C-A-D)(1-x_u) x_v with D = 0.
    linear[e.u] += swap_keep - keep_keep;
    linear[e.v] += -swap_keep;
    const Capacity pair = keep_swap + swap_keep - keep_keep;
    if (pair > 0) net.add_arc(e.u, e.v, pair);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (linear[v] > 0) net.add_arc(s, v, linear[v]);
    if (linear[v] < 0) net.add_arc(v, t, -linear[v]);
  }
  const MinCut cut = min_st_cut(net);
  const auto keep = vertex_mask(n + 2, cut.source_side);
  Labeling next = current;
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) next[v] = alpha;
  }
  return next;
}

inline Labeling cheapest_labeling(const LabelingInstance& inst) {
  Labeling out(static_cast<std::size_t>(inst.num_vertices()), -1);
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    for (Label l = 0; l < inst.num_labels(); ++l) {
      const LabelCost c = inst.cost(v, l);
      if (c && (out[v] < 0 || *c < *inst.cost(v, out[v]))) out[v] = l;
    }
  }
  return out;
}

// Expansion-move local search for Uniform Metric Labeling. Sweeps labels in
// index order, accepting strictly improving moves, until a full sweep
// changes nothing. A local optimum for expansion moves is within factor 2
// of the optimum under the uniform metric.
inline UmlResult solve_uml_2approx(const LabelingInstance& inst, std::optional<Labeling> initial = std::nullopt) {
  inst.require_feasible();
  UmlResult out;
  out.labeling = initial ? std::move(*initial) : cheapest_labeling(inst);
  const auto start = labeling_cost(inst, out.labeling);
  if (!start) throw InputError("solve_uml_2approx: initial labeling uses a forbidden label");
  out.objective = *start;
  for (bool changed = true; changed;) {
    changed = false;
    for (Label alpha = 0; alpha < inst.num_labels(); ++alpha) {
      Labeling next = expansion_move(inst, out.labeling, alpha);
      const auto cost = labeling_cost(inst, next);
      if (cost && *cost < out.objective) {
        out.labeling = std::move(next);
        out.objective = *cost;
        ++out.moves;
        changed = true;
      }
    }
  }
  return out;
}

// Labels are the cover sets followed by a bottom label. A vertex may take a
// cover set only if it belongs to it, and bottom only if it is not a
// terminal; all allowed assignments cost 0.
inline LabelingInstance kses_labeling_instance(const SeparatorInstance& inst, const Cover& cover) {
  const int labels = static_cast<int>(cover.sets.size()) + 1;
  LabelingInstance out(inst.graph, labels);
  const Label bottom = labels - 1;
  const auto terminal = inst.terminal_mask();
  for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
    for (Label l = 0; l < labels; ++l) out.set_cost(v, l, forbidden);
    out.set_cost(v, bottom, terminal[v] ? forbidden : LabelCost{0});
  }
  for (Label l = 0; l + 1 < labels; ++l) {
    for (Vertex v : cover.sets[l]) out.set_cost(v, l, 0);
    std::string name = "{";
    for (std::size_t i = 0; i < cover.sets[l].size(); ++i) name += (i ? "," : "") + std::to_string(cover.sets[l][i]);
    out.label_names.push_back(name + "}");
  }
  out.label_names.push_back("bottom");
  return out;
}

inline void require_feasible_separator(const SeparatorInstance& inst, const EdgeSet& solution) {
  for (EdgeId e : solution) {
    if (!inst.graph.contains_edge(e)) throw InputError("solution edge id out of range");
  }
  if (max_terminals_per_component(inst.graph, inst.terminals, solution) > inst.k) {
    throw InputError("solution leaves a component with more than k terminals");
  }
}

// Makes a feasible solution eps-canonical: any terminal-bearing component
// whose boundary exceeds 2k deg(G)/eps has all edges at its terminals
// deleted as well. Repeats until no component violates the bound.
inline EdgeSet canonicalize(const SeparatorInstance& inst, const EdgeSet& solution, Rational epsilon) {
  if (epsilon.num <= 0) throw InputError("epsilon must be positive");
  require_feasible_separator(inst, solution);
  const Graph& g = inst.graph;
  const auto terminal = inst.terminal_mask();
  const std::int64_t bound_num = 2LL * inst.k * g.max_degree() * epsilon.den;
  EdgeSet out = normalized(solution);
  for (bool changed = true; changed;) {
    changed = false;
    EdgeSet extra;
    for (const VertexSet& c : components(g, out)) {
      VertexSet r;
      for (Vertex v : c) {
        if (terminal[v]) r.push_back(v);
      }
      if (r.empty()) continue;
      if (static_cast<std::int64_t>(boundary_size(g, c)) * epsilon.num <= bound_num) continue;
      for (EdgeId e : incident_edges(g, r)) extra.push_back(e);
    }
    if (extra.empty()) break;
    const std::size_t before = out.size();
    out.insert(out.end(), extra.begin(), extra.end());
    out = normalized(std::move(out));
    changed = out.size() != before;
  }
  return out;
}

struct KsesUmlResult {
  EdgeSet cut;
  int M = 0;
  int cover_size = 0;
  UmlResult labeling;
};

// Cover bound used by the labeling pipeline: ceil(2k deg(G)/eps), raised to
// at least deg(G) (and 1) so every terminal's own cover family is nonempty.
inline int uml_cover_bound(const SeparatorInstance& inst, Rational epsilon) {
  const int d = inst.graph.max_degree();
  const int raw = static_cast<int>((Rational(2LL * inst.k * d) / epsilon).ceil());
  return std::max({1, d, raw});
}

// k-Subset Edge Separator through Uniform Metric Labeling over an
// important-cut cover; returns the bichromatic edges of the labeling.
inline KsesUmlResult kses_via_uml(const SeparatorInstance& inst, Rational epsilon) {
  if (epsilon.num <= 0) throw InputError("epsilon must be positive");
  if (inst.terminals.empty()) throw InputError("kses_via_uml: terminal set must be nonempty");
  KsesUmlResult out;
  out.M = uml_cover_bound(inst, epsilon);
  if (static_cast<int>(inst.terminals.size()) <= inst.k) {
    // Nothing to separate: the empty cut is optimal.
    out.labeling.labeling.assign(static_cast<std::size_t>(inst.graph.num_vertices()), 0);
    return out;
  }
  const Cover cover = build_cover(inst, out.M);
  out.cover_size = static_cast<int>(cover.sets.size());
  const LabelingInstance labeling = kses_labeling_instance(inst, cover);

  const Label bottom = static_cast<Label>(cover.sets.size());
  Labeling initial(static_cast<std::size_t>(inst.graph.num_vertices()), bottom);
  for (Vertex r : inst.terminals) {
    for (Label l = 0; l < bottom && initial[r] == bottom; ++l) {
      if (std::binary_search(cover.sets[l].begin(), cover.sets[l].end(), r)) initial[r] = l;
    }
    if (initial[r] == bottom) throw InternalError("kses_via_uml: terminal " + std::to_string(r) + " not covered");
  }
  out.labeling = solve_uml_2approx(labeling, initial);
  out.cut = bichromatic_edges(inst.graph, out.labeling.labeling);
  if (max_terminals_per_component(inst.graph, inst.terminals, out.cut) > inst.k) {
    throw InternalError("kses_via_uml produced an infeasible separator");
  }
  return out;
}

}  // namespace sepkit
