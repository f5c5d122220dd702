#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/errors.hpp"

namespace sepkit {

using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free id lists. Most operations accept any span and
// normalize on the way in.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  Vertex u;
  Vertex v;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

template <typename T>
std::vector<T> normalized(std::vector<T> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Undirected multigraph on vertices [0, n). Edge ids are dense in [0, m)
// and assigned in insertion order; parallel edges are allowed, self-loops
// are not.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(check_count(n))) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  EdgeId add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(num_vertices()));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    const EdgeId id = num_edges();
    edges_.push_back({u, v});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
  }

  Vertex add_vertex() {
    adjacency_.emplace_back();
    return num_vertices() - 1;
  }

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool contains_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }

  Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
      if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) return false;
    }
    return true;
  }

 private:
  static int check_count(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return n;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Part ids are compacted so that parts are numbered by their smallest
// vertex. Parts need not be connected.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> part_of) : part_of_(std::move(part_of)) { compact(); }

  static Partition singletons(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return Partition(std::move(p));
  }

  static Partition whole(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int num_vertices() const { return static_cast<int>(part_of_.size()); }
  int num_parts() const { return num_parts_; }
  int part(Vertex v) const { return part_of_[v]; }
  const std::vector<int>& assignment() const { return part_of_; }

  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(num_parts_));
    for (Vertex v = 0; v < num_vertices(); ++v) out[part_of_[v]].push_back(v);
    return out;
  }

  // Moves every vertex of c into a fresh part; parts left empty vanish.
  void carve(std::span<const Vertex> c) {
    for (Vertex v : c) part_of_[v] = num_parts_;
    compact();
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  void compact() {
    std::vector<int> remap;
    int next = 0;
    for (int& p : part_of_) {
      if (p < 0) throw InputError("negative part id");
      if (static_cast<std::size_t>(p) >= remap.size()) remap.resize(static_cast<std::size_t>(p) + 1, -1);
      if (remap[p] < 0) remap[p] = next++;
      p = remap[p];
    }
    num_parts_ = next;
  }

  std::vector<int> part_of_;
  int num_parts_ = 0;
};

// A graph, a terminal set R and the per-component terminal budget k.
struct SeparatorInstance {
  Graph graph;
  VertexSet terminals;
  int k = 1;

  SeparatorInstance() = default;

  SeparatorInstance(Graph g, VertexSet r, int k_) : graph(std::move(g)), terminals(normalized(std::move(r))), k(k_) {
    if (k < 1) throw InputError("k must be at least 1");
    for (Vertex v : terminals) {
      if (!graph.contains(v)) throw InputError("terminal " + std::to_string(v) + " out of range");
    }
  }

  // The k-Edge Separator case: every vertex is a terminal.
  static SeparatorInstance all_terminals(Graph g, int k) {
    VertexSet r(static_cast<std::size_t>(g.num_vertices()));
    std::iota(r.begin(), r.end(), 0);
    return SeparatorInstance(std::move(g), std::move(r), k);
  }

  std::vector<char> terminal_mask() const {
    std::vector<char> mask(static_cast<std::size_t>(graph.num_vertices()), 0);
    for (Vertex v : terminals) mask[v] = 1;
    return mask;
  }
};

inline std::vector<char> vertex_mask(int n, std::span<const Vertex> vs) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : vs) mask[v] = 1;
  return mask;
}

inline std::vector<char> edge_mask(int m, std::span<const EdgeId> es) {
  std::vector<char> mask(static_cast<std::size_t>(m), 0);
  for (EdgeId e : es) mask[e] = 1;
  return mask;
}

// Connected components after deleting the given edges and vertices, each
// sorted, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, std::span<const EdgeId> removed_edges = {},
                                         std::span<const Vertex> removed_vertices = {}) {
  for (EdgeId e : removed_edges) {
    if (!g.contains_edge(e)) throw InputError("removed edge id out of range");
  }
  for (Vertex v : removed_vertices) {
    if (!g.contains(v)) throw InputError("removed vertex out of range");
  }
  const auto dead_edge = edge_mask(g.num_edges(), removed_edges);
  auto seen = vertex_mask(g.num_vertices(), removed_vertices);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Incidence& inc : g.incident(v)) {
        if (dead_edge[inc.edge] || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Edges with exactly one endpoint in c, with multiplicity, sorted by id.
inline EdgeSet boundary(const Graph& g, std::span<const Vertex> c) {
  const auto in = vertex_mask(g.num_vertices(), c);
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

inline int boundary_size(const Graph& g, std::span<const Vertex> c) { return static_cast<int>(boundary(g, c).size()); }

// Edges with both endpoints in c.
inline EdgeSet internal_edges(const Graph& g, std::span<const Vertex> c) {
  const auto in = vertex_mask(g.num_vertices(), c);
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in[g.edge(e).u] && in[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

inline EdgeSet cut_edges(const Graph& g, const Partition& p) {
  if (p.num_vertices() != g.num_vertices()) throw InputError("partition does not cover the graph");
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (p.part(g.edge(e).u) != p.part(g.edge(e).v)) out.push_back(e);
  }
  return out;
}

inline int cut_size(const Graph& g, const Partition& p) { return static_cast<int>(cut_edges(g, p).size()); }

// Partition whose parts are the components of g minus the edge set.
inline Partition partition_from_cut(const Graph& g, std::span<const EdgeId> cut) {
  std::vector<int> part(static_cast<std::size_t>(g.num_vertices()), 0);
  int id = 0;
  for (const VertexSet& c : components(g, cut)) {
    for (Vertex v : c) part[v] = id;
    ++id;
  }
  return Partition(std::move(part));
}

// Largest number of terminals in one component of g minus the edge set.
inline int max_terminals_per_component(const Graph& g, std::span<const Vertex> terminals,
                                       std::span<const EdgeId> removed_edges,
                                       std::span<const Vertex> removed_vertices = {}) {
  const auto is_terminal = vertex_mask(g.num_vertices(), terminals);
  int worst = 0;
  for (const VertexSet& c : components(g, removed_edges, removed_vertices)) {
    int count = 0;
    for (Vertex v : c) count += is_terminal[v];
    worst = std::max(worst, count);
  }
  return worst;
}

// g[vertices] with vertices relabelled 0..|vertices|-1 in the given order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
  std::vector<EdgeId> edge_to_original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  InducedSubgraph sub{Graph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}, {}};
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] >= 0 && local[ed.v] >= 0) {
      sub.graph.add_edge(local[ed.u], local[ed.v]);
      sub.edge_to_original.push_back(e);
    }
  }
  return sub;
}

// g with the given edges deleted; vertex ids and relative edge order kept.
inline Graph without_edges(const Graph& g, std::span<const EdgeId> removed) {
  const auto dead = edge_mask(g.num_edges(), removed);
  Graph out(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!dead[e]) out.add_edge(g.edge(e).u, g.edge(e).v);
  }
  return out;
}

// Every edge incident to a vertex in vs, sorted.
inline EdgeSet incident_edges(const Graph& g, std::span<const Vertex> vs) {
  EdgeSet out;
  for (Vertex v : vs) {
    for (const Incidence& inc : g.incident(v)) out.push_back(inc.edge);
  }
  return normalized(std::move(out));
}

}  // namespace sepkit
