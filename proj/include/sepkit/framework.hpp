#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepkit/edge_separator.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/metric_labeling.hpp"
#include "sepkit/oracles.hpp"
#include "sepkit/rational.hpp"

namespace sepkit {

// Plug-in for k-Subset Vertex Separator. An implementation promises that
// every component of g - S has at most beta() * k terminals; the framework
// checks this after every call.
class VertexPartitioner {
 public:
  virtual ~VertexPartitioner() = default;
  virtual std::string name() const = 0;
  virtual VertexSet partition(const Graph& g, std::span<const Vertex> terminals, int k) const = 0;
  // Approximation factor on |S|, when the implementation certifies one.
  virtual std::optional<Rational> alpha() const { return std::nullopt; }
  virtual int beta() const { return 1; }
};

// Minimum separator by subset enumeration; (alpha, beta) = (1, 1).
class ExactPartitioner final : public VertexPartitioner {
 public:
  explicit ExactPartitioner(int limit = OracleLimits{}.svs_vertices) : limit_(limit) {}
  std::string name() const override { return "exact"; }
  VertexSet partition(const Graph& g, std::span<const Vertex> terminals, int k) const override {
    return brute_subset_vertex_separator(g, terminals, k, limit_);
  }
  std::optional<Rational> alpha() const override { return Rational(1); }

 private:
  int limit_;
};

// BFS regions holding at most k terminals; a terminal that would overflow
// the current region goes to S instead. No approximation guarantee.
class GreedyPartitioner final : public VertexPartitioner {
 public:
  std::string name() const override { return "greedy"; }
  VertexSet partition(const Graph& g, std::span<const Vertex> terminals, int k) const override {
    const int n = g.num_vertices();
    const auto terminal = vertex_mask(n, terminals);
    std::vector<char> done(static_cast<std::size_t>(n), 0), in_s(static_cast<std::size_t>(n), 0);
    for (Vertex seed = 0; seed < n; ++seed) {
      if (done[seed]) continue;
      int load = 0;
      std::deque<Vertex> queue{seed};
      std::vector<char> queued(static_cast<std::size_t>(n), 0);
      queued[seed] = 1;
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (load + terminal[v] > k) {
          in_s[v] = 1;
          done[v] = 1;
          continue;
        }
        load += terminal[v];
        done[v] = 1;
        for (const Incidence& inc : g.incident(v)) {
          if (!done[inc.neighbor] && !queued[inc.neighbor]) {
            queued[inc.neighbor] = 1;
            queue.push_back(inc.neighbor);
          }
        }
      }
    }
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (in_s[v]) s.push_back(v);
    }
    return s;
  }
};

inline std::unique_ptr<VertexPartitioner> make_partitioner(const std::string& name) {
  if (name == "exact") return std::make_unique<ExactPartitioner>();
  if (name == "greedy") return std::make_unique<GreedyPartitioner>();
  throw InputError("unknown partitioner '" + name + "'");
}

enum class KsesBackend { local_search, metric_labeling };

inline KsesBackend parse_backend(const std::string& name) {
  if (name == "local") return KsesBackend::local_search;
  if (name == "uml") return KsesBackend::metric_labeling;
  throw InputError("unknown k-SES backend '" + name + "'");
}

struct FrameworkConfig {
  Rational epsilon{1, 4};
  // Required shrink factor per accepted iteration; defaults to 3/4 for
  // vertex deletion and 1 - epsilon for edge deletion.
  std::optional<Rational> improvement;
  // 0 selects ceil(log_{1/factor}(size)) + 2.
  int max_iterations = 0;
  // Replaces the separator budget derived from t and epsilon.
  std::optional<int> k_override;
  int exact_limit = OracleLimits{}.membership_vertices;
};

struct IterationTrace {
  int iteration = 0;
  int candidate_before = 0;
  int separator_size = 0;
  int candidate_after = 0;
  bool accepted = false;
};

template <typename Solution>
struct FrameworkResult {
  Solution solution;
  int iterations = 0;
  int k = 0;
  std::vector<IterationTrace> trace;
};

namespace detail {

inline int iteration_cap(const FrameworkConfig& cfg, Rational factor, int size) {
  if (cfg.max_iterations > 0) return cfg.max_iterations;
  const double ratio = 1.0 / factor.to_double();
  return static_cast<int>(std::ceil(std::log(std::max(2, size)) / std::log(ratio))) + 2;
}

inline void check_config(const FrameworkConfig& cfg, Rational factor) {
  if (cfg.epsilon.num <= 0) throw InputError("epsilon must be positive");
  if (factor.num <= 0 || factor >= Rational(1)) throw InputError("improvement factor must lie in (0, 1)");
  if (cfg.k_override && *cfg.k_override < 1) throw InputError("k override must be positive");
}

// |a| <= factor * |b|
inline bool shrinks(std::size_t a, std::size_t b, Rational factor) {
  return static_cast<std::int64_t>(a) * factor.den <= factor.num * static_cast<std::int64_t>(b);
}

}  // namespace detail

// Iterative vertex deletion: keep a feasible solution R, split the graph
// with a subset vertex separator for terminals R, solve each piece exactly
// (R restricted to the piece is a feasible budget), and keep the union while
// it shrinks by the improvement factor. Returns the smallest solution seen.
inline FrameworkResult<VertexSet> vertex_framework(const Graph& g, const GraphClass& h, const VertexPartitioner& part,
                                                   const FrameworkConfig& cfg = {}) {
  const Rational factor = cfg.improvement.value_or(Rational(3, 4));
  detail::check_config(cfg, factor);
  const int n = g.num_vertices();
  FrameworkResult<VertexSet> out;
  out.k = cfg.k_override.value_or(static_cast<int>((Rational(h.treewidth_bound()) / cfg.epsilon).ceil()));

  VertexSet current(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) current[v] = v;
  out.solution = current;
  const int cap = detail::iteration_cap(cfg, factor, n);

  for (int it = 1; it <= cap && !current.empty(); ++it) {
    const VertexSet s = normalized(part.partition(g, current, out.k));
    const int bound = part.beta() * out.k;
    if (max_terminals_per_component(g, current, {}, s) > bound) {
      throw InternalError("partitioner '" + part.name() + "' left a component with more than " + std::to_string(bound) +
                          " terminals");
    }
    const auto in_current = vertex_mask(n, current);
    VertexSet next = s;
    for (const VertexSet& c : components(g, {}, s)) {
      int budget = 0;
      for (Vertex v : c) budget += in_current[v];
      const InducedSubgraph sub = induced_subgraph(g, c);
      const auto local = exact_vertex_deletion(sub.graph, h, budget, cfg.exact_limit);
      if (!local) throw InternalError("vertex framework: component has no solution within its budget");
      for (Vertex v : *local) next.push_back(sub.to_original[v]);
    }
    next = normalized(std::move(next));
    const bool accepted = next.size() < current.size() && detail::shrinks(next.size(), current.size(), factor);
    out.trace.push_back({it, static_cast<int>(current.size()), static_cast<int>(s.size()), static_cast<int>(next.size()), accepted});
    out.iterations = it;
    if (next.size() < out.solution.size()) out.solution = next;
    if (!accepted) break;
    current = std::move(next);
  }
  return out;
}

// G' with each edge of `subdivided` replaced by a path through a new
// vertex r_e. New vertices are numbered n, n+1, ... in edge-id order.
struct SubdividedGraph {
  Graph graph;
  std::vector<EdgeId> edge_origin;          // G' edge -> G edge
  std::vector<Vertex> subdivision_vertex;   // G edge -> r_e, or -1
  VertexSet terminals;                      // all r_e
};

inline SubdividedGraph subdivide(const Graph& g, std::span<const EdgeId> subdivided) {
  for (EdgeId e : subdivided) {
    if (!g.contains_edge(e)) throw InputError("subdivide: edge id out of range");
  }
  const auto marked = edge_mask(g.num_edges(), subdivided);
  SubdividedGraph out;
  out.graph = Graph(g.num_vertices());
  out.subdivision_vertex.assign(static_cast<std::size_t>(g.num_edges()), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!marked[e]) {
      out.graph.add_edge(ed.u, ed.v);
      out.edge_origin.push_back(e);
      continue;
    }
    const Vertex mid = out.graph.add_vertex();
    out.subdivision_vertex[e] = mid;
    out.terminals.push_back(mid);
    out.graph.add_edge(ed.u, mid);
    out.graph.add_edge(mid, ed.v);
    out.edge_origin.push_back(e);
    out.edge_origin.push_back(e);
  }
  return out;
}

// An original edge is selected when it, or either half of its subdivision,
// is in yprime.
inline EdgeSet project_back(const SubdividedGraph& sg, std::span<const EdgeId> yprime) {
  EdgeSet out;
  for (EdgeId e : yprime) {
    if (!sg.graph.contains_edge(e)) throw InputError("project_back: edge id out of range");
    out.push_back(sg.edge_origin[e]);
  }
  return normalized(std::move(out));
}

// Iterative edge deletion: subdivide the current solution R_E, run a
// k-Subset Edge Separator backend on the subdivision vertices, project the
// cut back, solve each remaining component exactly with budget
// min(k, |R_E n E(C)|), and keep the union while it shrinks by the
// improvement factor.
inline FrameworkResult<EdgeSet> edge_framework(const Graph& g, const GraphClass& h, KsesBackend backend,
                                               const FrameworkConfig& cfg = {}) {
  const Rational factor = cfg.improvement.value_or(Rational(1) - cfg.epsilon);
  detail::check_config(cfg, factor);
  if (!membership(Graph(std::min(g.num_vertices(), 1)), h, cfg.exact_limit)) {
    throw InputError("edge framework: class " + h.str() + " excludes edgeless graphs");
  }
  FrameworkResult<EdgeSet> out;
  const Rational beta = Rational(std::max(1, g.max_degree())) / cfg.epsilon;
  out.k = cfg.k_override.value_or(static_cast<int>((Rational(h.treewidth_bound()) * beta).ceil()));

  EdgeSet current(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) current[e] = e;
  out.solution = current;
  const int cap = detail::iteration_cap(cfg, factor, g.num_edges());

  for (int it = 1; it <= cap && !current.empty(); ++it) {
    const SubdividedGraph sg = subdivide(g, current);
    const SeparatorInstance sub(sg.graph, sg.terminals, out.k);
    const EdgeSet yprime = backend == KsesBackend::local_search ? local_search_kses(sub).cut : kses_via_uml(sub, cfg.epsilon).cut;
    const EdgeSet y = project_back(sg, yprime);

    const auto in_current = edge_mask(g.num_edges(), current);
    const auto in_y = edge_mask(g.num_edges(), y);
    EdgeSet next = y;
    for (const VertexSet& c : components(g, y)) {
      std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
      for (std::size_t i = 0; i < c.size(); ++i) local[c[i]] = static_cast<int>(i);
      Graph piece(static_cast<int>(c.size()));
      std::vector<EdgeId> origin;
      int budget = 0;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_y[e] || local[g.edge(e).u] < 0) continue;
        piece.add_edge(local[g.edge(e).u], local[g.edge(e).v]);
        origin.push_back(e);
        budget += in_current[e];
      }
      if (budget > out.k) throw InternalError("edge framework: component holds more than k candidate edges");
      const auto sol = exact_edge_deletion(piece, h, std::min(out.k, budget), cfg.exact_limit);
      if (!sol) throw InternalError("edge framework: component has no solution within its budget");
      for (EdgeId e : *sol) next.push_back(origin[e]);
    }
    next = normalized(std::move(next));
    const bool accepted = next.size() < current.size() && detail::shrinks(next.size(), current.size(), factor);
    out.trace.push_back({it, static_cast<int>(current.size()), static_cast<int>(y.size()), static_cast<int>(next.size()), accepted});
    out.iterations = it;
    if (next.size() < out.solution.size()) out.solution = next;
    if (!accepted) break;
    current = std::move(next);
  }
  return out;
}

// True iff every component of g minus the vertices belongs to h.
inline bool vertex_solution_feasible(const Graph& g, const GraphClass& h, std::span<const Vertex> removed,
                                     int limit = OracleLimits{}.membership_vertices) {
  for (const VertexSet& c : components(g, {}, removed)) {
    if (!membership(induced_subgraph(g, c).graph, h, limit)) return false;
  }
  return true;
}

inline bool edge_solution_feasible(const Graph& g, const GraphClass& h, std::span<const EdgeId> removed,
                                   int limit = OracleLimits{}.membership_vertices) {
  const Graph rest = without_edges(g, removed);
  for (const VertexSet& c : components(rest)) {
    if (!membership(induced_subgraph(rest, c).graph, h, limit)) return false;
  }
  return true;
}

}  // namespace sepkit
