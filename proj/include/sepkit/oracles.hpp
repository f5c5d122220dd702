#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/labeling.hpp"
#include "sepkit/tree_decomposition.hpp"

namespace sepkit {

// Hereditary graph classes with bounded treewidth.
struct GraphClass {
  enum class Kind { treewidth_at_most, path_free, component_size_at_most };

  Kind kind = Kind::treewidth_at_most;
  int param = 1;

  static GraphClass treewidth_at_most(int w) { return make(Kind::treewidth_at_most, w); }
  // No simple path on `k` vertices.
  static GraphClass path_free(int k) { return make(Kind::path_free, k); }
  static GraphClass component_size_at_most(int k) { return make(Kind::component_size_at_most, k); }

  // t such that every member has treewidth at most t - 1.
  int treewidth_bound() const {
    switch (kind) {
      case Kind::treewidth_at_most: return param + 1;
      case Kind::path_free: return std::max(1, param - 1);
      case Kind::component_size_at_most: return param;
    }
    return param;
  }

  std::string str() const {
    switch (kind) {
      case Kind::treewidth_at_most: return "tw:" + std::to_string(param);
      case Kind::path_free: return "pathfree:" + std::to_string(param);
      case Kind::component_size_at_most: return "compsize:" + std::to_string(param);
    }
    return "?";
  }

  friend bool operator==(const GraphClass&, const GraphClass&) = default;

 private:
  static GraphClass make(Kind kind, int param) {
    if (kind == Kind::treewidth_at_most ? param < 0 : param < 1) {
      throw InputError("invalid graph class parameter " + std::to_string(param));
    }
    GraphClass h;
    h.kind = kind;
    h.param = param;
    return h;
  }
};

// "tw:<w>", "pathfree:<k>" or "compsize:<k>".
inline GraphClass parse_graph_class(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("graph class must look like tw:<w>, got '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  const std::string value(text.substr(colon + 1));
  int param = 0;
  try {
    std::size_t used = 0;
    param = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InputError("bad graph class parameter '" + value + "'");
  }
  if (name == "tw") return GraphClass::treewidth_at_most(param);
  if (name == "pathfree") return GraphClass::path_free(param);
  if (name == "compsize") return GraphClass::component_size_at_most(param);
  throw InputError("unknown graph class '" + std::string(name) + "'");
}

struct OracleLimits {
  int membership_vertices = 20;
  int kes_vertices = 12;
  int uml_vertices = 8;
  int uml_labels = 4;
  int important_cut_vertices = 10;
  int svs_vertices = 12;
};

namespace detail {

inline bool is_forest(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  for (int i = 0; i < g.num_vertices(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::pair<int, int>> simple;
  for (const Edge& e : g.edges()) simple.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  simple = normalized(std::move(simple));
  for (auto [u, v] : simple) {
    const int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Searches for a simple path on `k` vertices; returns it or an empty vector.
inline std::vector<Vertex> find_path_on(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k <= 0) return {};
  if (k > n) return {};
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::function<bool(Vertex)> extend = [&](Vertex v) {
    path.push_back(v);
    on_path[v] = 1;
    if (static_cast<int>(path.size()) == k) return true;
    for (const Incidence& inc : g.incident(v)) {
      if (!on_path[inc.neighbor] && extend(inc.neighbor)) return true;
    }
    on_path[v] = 0;
    path.pop_back();
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (extend(v)) return path;
  }
  return {};
}

// Calls visit on every size-`size` subset of [0, n) in lexicographic order
// until it returns true.
inline bool for_each_combination(int n, int size, const std::function<bool(const std::vector<int>&)>& visit) {
  if (size < 0 || size > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i;
  for (;;) {
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline Graph without_vertices(const Graph& g, std::span<const Vertex> removed) {
  const auto dead = vertex_mask(g.num_vertices(), removed);
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!dead[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep).graph;
}

}  // namespace detail

inline bool membership(const Graph& g, const GraphClass& h, int limit = OracleLimits{}.membership_vertices) {
  switch (h.kind) {
    case GraphClass::Kind::component_size_at_most: {
      for (const VertexSet& c : components(g)) {
        if (static_cast<int>(c.size()) > h.param) return false;
      }
      return true;
    }
    case GraphClass::Kind::path_free: {
      if (g.num_vertices() > limit) throw LimitError("membership: n exceeds limit " + std::to_string(limit));
      return detail::find_path_on(g, h.param).empty();
    }
    case GraphClass::Kind::treewidth_at_most: {
      if (h.param == 0) return g.num_edges() == 0;
      if (h.param == 1) return detail::is_forest(g);
      for (const VertexSet& c : components(g)) {
        if (static_cast<int>(c.size()) <= h.param + 1) continue;
        if (static_cast<int>(c.size()) > limit) throw LimitError("membership: component exceeds limit " + std::to_string(limit));
        if (exact_treewidth(induced_subgraph(g, c).graph, limit).width > h.param) return false;
      }
      return true;
    }
  }
  return false;
}

// Minimum vertex set whose removal puts g in h, or nullopt if every such
// set is larger than budget. Sizes are tried in increasing order, subsets of
// one size lexicographically; path_free branches on the vertices of a found
// path instead.
inline std::optional<VertexSet> exact_vertex_deletion(const Graph& g, const GraphClass& h, int budget,
                                                      int limit = OracleLimits{}.membership_vertices) {
  if (budget < 0) throw InputError("budget must be non-negative");
  const int n = g.num_vertices();
  if (n > limit) throw LimitError("exact_vertex_deletion: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  budget = std::min(budget, n);

  if (h.kind == GraphClass::Kind::path_free) {
    VertexSet chosen;
    std::function<bool(int)> branch = [&](int left) {
      const Graph rest = detail::without_vertices(g, chosen);
      const std::vector<Vertex> path = detail::find_path_on(rest, h.param);
      if (path.empty()) return true;
      if (left == 0) return false;
      // Map path vertices of `rest` back to ids of g.
      VertexSet alive;
      const auto dead = vertex_mask(n, chosen);
      for (Vertex v = 0; v < n; ++v) {
        if (!dead[v]) alive.push_back(v);
      }
      for (Vertex local : path) {
        chosen.push_back(alive[local]);
        if (branch(left - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    for (int b = 0; b <= budget; ++b) {
      chosen.clear();
      if (branch(b)) return normalized(chosen);
    }
    return std::nullopt;
  }

  std::optional<VertexSet> found;
  for (int size = 0; size <= budget && !found; ++size) {
    detail::for_each_combination(n, size, [&](const std::vector<int>& pick) {
      if (!membership(detail::without_vertices(g, pick), h, limit)) return false;
      found = pick;
      return true;
    });
  }
  return found;
}

// Minimum edge set whose removal puts g in h, or nullopt beyond budget.
inline std::optional<EdgeSet> exact_edge_deletion(const Graph& g, const GraphClass& h, int budget,
                                                  int limit = OracleLimits{}.membership_vertices) {
  if (budget < 0) throw InputError("budget must be non-negative");
  if (g.num_vertices() > limit) {
    throw LimitError("exact_edge_deletion: n=" + std::to_string(g.num_vertices()) + " exceeds limit " + std::to_string(limit));
  }
  const int m = g.num_edges();
  budget = std::min(budget, m);
  std::optional<EdgeSet> found;
  for (int size = 0; size <= budget && !found; ++size) {
    detail::for_each_combination(m, size, [&](const std::vector<int>& pick) {
      if (!membership(without_edges(g, pick), h, limit)) return false;
      found = pick;
      return true;
    });
  }
  return found;
}

struct KesOptimum {
  EdgeSet cut;
  int objective = 0;
  Partition partition;
};

// Exact k-Subset Edge Separator by enumerating set partitions as
// restricted-growth strings, pruning on the terminal budget and on the
// partial cut reaching the incumbent.
inline KesOptimum brute_kes(const SeparatorInstance& inst, int limit = OracleLimits{}.kes_vertices) {
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  if (n > limit) throw LimitError("brute_kes: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  const auto terminal = inst.terminal_mask();

  // earlier[v]: neighbours u < v, with multiplicity.
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));

  std::vector<int> block(static_cast<std::size_t>(n), -1), best_block(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) best_block[v] = v;
  int best = g.num_edges();
  std::vector<int> load;  // terminals per block

  std::function<void(int, int)> assign = [&](int v, int partial) {
    if (partial >= best) return;
    if (v == n) {
      best = partial;
      best_block = block;
      return;
    }
    const int open = static_cast<int>(load.size());
    for (int b = 0; b <= open; ++b) {
      if (b == open) load.push_back(0);
      if (load[b] + terminal[v] <= inst.k) {
        load[b] += terminal[v];
        block[v] = b;
        int added = 0;
        for (Vertex u : earlier[v]) added += block[u] != b;
        assign(v + 1, partial + added);
        load[b] -= terminal[v];
      }
      if (b == open) load.pop_back();
    }
    block[v] = -1;
  };
  if (n > 0) assign(0, 0);

  KesOptimum out;
  out.partition = Partition(best_block);
  out.cut = cut_edges(g, out.partition);
  out.objective = static_cast<int>(out.cut.size());
  return out;
}

struct UmlOptimum {
  Labeling labeling;
  std::int64_t objective = 0;
};

// Exact Uniform Metric Labeling by depth-first enumeration with
// branch-and-bound on the partial objective.
inline UmlOptimum brute_uml(const LabelingInstance& inst, OracleLimits limits = {}) {
  const int n = inst.num_vertices();
  if (n > limits.uml_vertices || inst.num_labels() > limits.uml_labels) {
    throw LimitError("brute_uml: instance exceeds limits (n<=" + std::to_string(limits.uml_vertices) + ", labels<=" +
                     std::to_string(limits.uml_labels) + ")");
  }
  inst.require_feasible();
  const Graph& g = inst.graph();
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));

  Labeling current(static_cast<std::size_t>(n), -1);
  UmlOptimum best;
  bool have = false;
  std::function<void(int, std::int64_t)> assign = [&](int v, std::int64_t partial) {
    if (have && partial >= best.objective) return;
    if (v == n) {
      best = {current, partial};
      have = true;
      return;
    }
    for (Label l = 0; l < inst.num_labels(); ++l) {
      const LabelCost c = inst.cost(v, l);
      if (!c) continue;
      current[v] = l;
      std::int64_t added = *c;
      for (Vertex u : earlier[v]) added += current[u] != l;
      assign(v + 1, partial + added);
    }
    current[v] = -1;
  };
  assign(0, 0);
  if (!have) throw InfeasibleError("no feasible labeling");
  return best;
}

// Important s-t cuts by definition: X with s in X, t not in X, G[X]
// connected, |d(X)| <= p, and no connected s-t cut X' strictly containing X
// with |d(X')| <= |d(X)|. Exhaustive over all subsets.
inline std::vector<VertexSet> brute_important_cuts(const Graph& g, Vertex s, Vertex t, int p,
                                                   int limit = OracleLimits{}.important_cut_vertices) {
  const int n = g.num_vertices();
  if (!g.contains(s) || !g.contains(t)) throw InputError("terminal out of range");
  if (s == t) throw InputError("important cuts need s != t");
  if (n > limit || n > 20) throw LimitError("brute_important_cuts: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  auto connected = [&](std::uint32_t x) {
    std::uint32_t reach = 1u << s, frontier = reach;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj[v] & x & ~reach;
      reach |= fresh;
      frontier |= fresh;
    }
    return reach == x;
  };
  auto boundary_of = [&](std::uint32_t x) {
    int b = 0;
    for (const Edge& e : g.edges()) b += ((x >> e.u) & 1u) != ((x >> e.v) & 1u);
    return b;
  };

  // Enumerate s-t cuts as masks over V; `free` are the vertices other than s, t.
  const std::uint32_t free = ((n == 32 ? ~0u : (1u << n) - 1)) & ~(1u << s) & ~(1u << t);
  std::vector<std::pair<std::uint32_t, int>> conn;  // connected s-t cuts with their boundary
  for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
    const std::uint32_t x = sub | (1u << s);
    if (connected(x)) conn.emplace_back(x, boundary_of(x));
    if (sub == 0) break;
  }
  std::vector<VertexSet> out;
  for (auto [x, bx] : conn) {
    if (bx > p) continue;
    const bool dominated = std::any_of(conn.begin(), conn.end(), [&](const auto& other) {
      return other.first != x && (other.first & x) == x && other.second <= bx;
    });
    if (dominated) continue;
    VertexSet set;
    for (int v = 0; v < n; ++v) {
      if (x >> v & 1u) set.push_back(v);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Brute-force k-Subset Vertex Separator: a minimum S such that every
// component of g - S has at most k terminals (terminals may be deleted).
inline VertexSet brute_subset_vertex_separator(const Graph& g, std::span<const Vertex> terminals, int k,
                                               int limit = OracleLimits{}.svs_vertices) {
  const int n = g.num_vertices();
  if (n > limit) throw LimitError("subset vertex separator: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  std::optional<VertexSet> found;
  for (int size = 0; size <= n && !found; ++size) {
    detail::for_each_combination(n, size, [&](const std::vector<int>& pick) {
      if (max_terminals_per_component(g, terminals, {}, pick) > k) return false;
      found = pick;
      return true;
    });
  }
  return *found;
}

}  // namespace sepkit
