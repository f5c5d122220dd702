#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int root = 0;

  int num_nodes() const { return static_cast<int>(bags.size()); }

  // Largest bag size minus one; -1 when there are no bags.
  int width() const {
    int w = -1;
    for (const VertexSet& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }
};

enum class NodeKind { start, join, introduce, forget };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::start: return "start";
    case NodeKind::join: return "join";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
  }
  return "?";
}

struct NiceTreeDecomposition {
  TreeDecomposition td;
  std::vector<NodeKind> kind;
  std::vector<std::vector<int>> children;
};

enum class Violation {
  none,
  malformed_tree,       // tree edges do not form a tree, or root out of range
  vertex_out_of_range,  // a bag names a vertex outside the graph
  missing_vertex,       // union of bags is not V(G)
  edge_not_covered,     // some edge has no bag containing both endpoints
  disconnected_occurrences,  // bags containing a vertex do not form a subtree
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::malformed_tree: return "malformed tree";
    case Violation::vertex_out_of_range: return "vertex out of range";
    case Violation::missing_vertex: return "vertex not covered by any bag";
    case Violation::edge_not_covered: return "edge not covered by any bag";
    case Violation::disconnected_occurrences: return "bags containing a vertex are disconnected";
  }
  return "?";
}

struct ValidationReport {
  Violation violation = Violation::none;
  std::string detail;

  bool ok() const { return violation == Violation::none; }
  explicit operator bool() const { return ok(); }
};

namespace detail {

struct RootedTree {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> preorder;  // root first, parents before children
};

// Empty optional-like: preorder is empty when the edges are not a tree.
inline RootedTree root_tree(int nodes, std::span<const std::pair<int, int>> edges, int root) {
  RootedTree t;
  if (nodes == 0) return t;
  if (root < 0 || root >= nodes || static_cast<int>(edges.size()) != nodes - 1) return t;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return t;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  t.parent.assign(static_cast<std::size_t>(nodes), -2);
  t.children.assign(static_cast<std::size_t>(nodes), {});
  t.parent[root] = -1;
  t.preorder.push_back(root);
  for (std::size_t i = 0; i < t.preorder.size(); ++i) {
    const int x = t.preorder[i];
    for (int y : adj[x]) {
      if (t.parent[y] != -2) continue;
      t.parent[y] = x;
      t.children[x].push_back(y);
      t.preorder.push_back(y);
    }
  }
  if (static_cast<int>(t.preorder.size()) != nodes) t.preorder.clear();
  return t;
}

}  // namespace detail

inline ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  const int nodes = td.num_nodes();
  if (nodes == 0) {
    if (g.num_vertices() == 0 && td.tree_edges.empty()) return {};
    if (!td.tree_edges.empty()) return {Violation::malformed_tree, "tree edges without bags"};
    return {Violation::missing_vertex, "no bags but the graph has vertices"};
  }
  const auto tree = detail::root_tree(nodes, td.tree_edges, td.root);
  if (tree.preorder.empty()) {
    return {Violation::malformed_tree, "tree edges do not form a tree rooted at node " + std::to_string(td.root)};
  }

  const int n = g.num_vertices();
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (!g.contains(v)) {
        return {Violation::vertex_out_of_range, "bag " + std::to_string(x) + " names vertex " + std::to_string(v)};
      }
      if (!holders[v].empty() && holders[v].back() == x) continue;
      holders[v].push_back(x);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) return {Violation::missing_vertex, "vertex " + std::to_string(v) + " is in no bag"};
  }

  std::vector<std::vector<char>> in_bag(static_cast<std::size_t>(nodes), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) in_bag[x][v] = 1;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool covered = std::any_of(holders[ed.u].begin(), holders[ed.u].end(), [&](int x) { return in_bag[x][ed.v]; });
    if (!covered) {
      return {Violation::edge_not_covered,
              "edge (" + std::to_string(ed.u) + "," + std::to_string(ed.v) + ") is in no bag"};
    }
  }

  // The holders of v induce a subtree iff exactly one of them has a parent
  // outside the holder set.
  for (Vertex v = 0; v < n; ++v) {
    int tops = 0;
    for (int x : holders[v]) {
      const int p = tree.parent[x];
      if (p < 0 || !in_bag[p][v]) ++tops;
    }
    if (tops != 1) {
      return {Violation::disconnected_occurrences, "bags containing vertex " + std::to_string(v) + " are disconnected"};
    }
  }
  return {};
}

inline void require_valid(const Graph& g, const TreeDecomposition& td) {
  const ValidationReport r = validate(g, td);
  if (!r) throw DecompositionError(std::string("invalid tree decomposition: ") + to_string(r.violation) + ": " + r.detail);
}

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over vertex subsets: TW(S) is the
// best width of eliminating S first, TW(S) = min_v max(TW(S-v), |Q(S-v, v)|)
// where Q(S, v) are the vertices outside S+v adjacent to v's component in
// G[S+v]. The witness is the elimination decomposition of the argmin order.
inline TreewidthResult exact_treewidth(const Graph& g, int limit = 20) {
  const int n = g.num_vertices();
  if (n > limit || n > 26) {
    throw LimitError("exact_treewidth: n=" + std::to_string(n) + " exceeds limit " + std::to_string(std::min(limit, 26)));
  }
  TreewidthResult result;
  if (n == 0) return result;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }

  auto q_size = [&](std::uint32_t s, int v) {
    const std::uint32_t inside = s | (1u << v);
    std::uint32_t reach = 1u << v, frontier = reach, nbrs = 0;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t a = adj[x];
      nbrs |= a & ~inside;
      const std::uint32_t fresh = a & inside & ~reach;
      reach |= fresh;
      frontier |= fresh;
    }
    return std::popcount(nbrs);
  };

  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n + 1;
    int arg = -1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t prev = s & ~(1u << v);
      if (tw[prev] >= best) continue;
      const int cost = std::max<int>(tw[prev], q_size(prev, v));
      if (cost < best) {
        best = cost;
        arg = v;
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
    choice[s] = static_cast<std::int8_t>(arg);
  }
  result.width = tw[full];

  std::vector<int> order;
  for (std::uint32_t s = full; s; s &= ~(1u << choice[s])) order.push_back(choice[s]);
  std::reverse(order.begin(), order.end());

  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::uint32_t> filled = adj;
  TreeDecomposition& td = result.decomposition;
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::uint32_t later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (filled[v] >> order[j] & 1u) later |= 1u << order[j];
    }
    VertexSet bag{v};
    int parent = -1;
    for (std::uint32_t rest = later; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      bag.push_back(w);
      filled[w] |= later & ~(1u << w);
      if (parent < 0 || position[w] < position[parent]) parent = w;
    }
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    if (parent >= 0) {
      td.tree_edges.emplace_back(position[parent], i);
    } else {
      roots.push_back(i);
    }
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) td.tree_edges.emplace_back(roots[i], roots[i + 1]);
  td.root = roots.back();
  return result;
}

// Converts a valid decomposition into a nice one of the same width rooted
// at an empty bag. Each original node becomes a forget chain followed by an
// introduce chain towards its parent's bag; siblings are merged by joins.
inline NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  require_valid(g, td);
  NiceTreeDecomposition nice;
  auto new_node = [&](VertexSet bag, NodeKind kind, std::vector<int> kids) {
    nice.td.bags.push_back(std::move(bag));
    nice.kind.push_back(kind);
    const int id = static_cast<int>(nice.kind.size()) - 1;
    for (int c : kids) nice.td.tree_edges.emplace_back(id, c);
    nice.children.push_back(std::move(kids));
    return id;
  };
  // Walks from node `from` (bag `have`) to bag `want`: forgets first so the
  // chain never exceeds the larger of the two bags.
  auto morph = [&](int from, VertexSet have, const VertexSet& want) {
    std::vector<Vertex> drop, add;
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(drop));
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(add));
    int cur = from;
    for (Vertex v : drop) {
      have.erase(std::find(have.begin(), have.end(), v));
      cur = new_node(have, NodeKind::forget, {cur});
    }
    for (Vertex v : add) {
      if (cur < 0) {
        have = {v};
        cur = new_node(have, NodeKind::start, {});
        continue;
      }
      have.insert(std::upper_bound(have.begin(), have.end(), v), v);
      cur = new_node(have, NodeKind::introduce, {cur});
    }
    return cur;
  };

  if (td.num_nodes() == 0) return nice;
  const auto tree = detail::root_tree(td.num_nodes(), td.tree_edges, td.root);
  std::vector<VertexSet> bags = td.bags;
  for (auto& b : bags) b = normalized(std::move(b));
  // -1 marks a subtree without vertices.
  std::vector<int> built(static_cast<std::size_t>(td.num_nodes()), -1);
  for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
    const int x = *it;
    std::vector<int> branches;
    for (int c : tree.children[x]) {
      if (built[c] < 0) continue;
      branches.push_back(morph(built[c], bags[c], bags[x]));
    }
    if (branches.empty()) {
      built[x] = morph(-1, {}, bags[x]);
      continue;
    }
    int cur = branches[0];
    for (std::size_t i = 1; i < branches.size(); ++i) cur = new_node(bags[x], NodeKind::join, {cur, branches[i]});
    built[x] = cur;
  }
  const int top = built[td.root];
  if (top < 0) return nice;
  const int root = morph(top, bags[td.root], {});
  nice.td.root = root;
  return nice;
}

// Checks the structural rules of a nice decomposition; on failure writes a
// reason into *why when given.
inline bool is_nice(const NiceTreeDecomposition& nice, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const int nodes = nice.td.num_nodes();
  if (nodes == 0) return true;
  if (!nice.td.bags[nice.td.root].empty()) return fail("root bag is not empty");
  for (int x = 0; x < nodes; ++x) {
    const VertexSet& bag = nice.td.bags[x];
    const auto& kids = nice.children[x];
    switch (nice.kind[x]) {
      case NodeKind::start:
        if (!kids.empty() || bag.size() != 1) return fail("bad start node " + std::to_string(x));
        break;
      case NodeKind::join:
        if (kids.size() != 2 || nice.td.bags[kids[0]] != bag || nice.td.bags[kids[1]] != bag) {
          return fail("bad join node " + std::to_string(x));
        }
        break;
      case NodeKind::introduce:
      case NodeKind::forget: {
        if (kids.size() != 1) return fail("bad unary node " + std::to_string(x));
        const VertexSet& big = nice.kind[x] == NodeKind::introduce ? bag : nice.td.bags[kids[0]];
        const VertexSet& small = nice.kind[x] == NodeKind::introduce ? nice.td.bags[kids[0]] : bag;
        if (big.size() != small.size() + 1 || !std::includes(big.begin(), big.end(), small.begin(), small.end())) {
          return fail(std::string("bad ") + to_string(nice.kind[x]) + " node " + std::to_string(x));
        }
        break;
      }
    }
  }
  return true;
}

struct FineSeparator {
  VertexSet separator;
  int iterations = 0;
  std::vector<int> cut_nodes;  // bag chosen in each iteration
};

// Repeatedly picks the deepest bag whose subtree introduces more than delta
// unhandled terminals, adds the bag to the separator and detaches that
// subtree. A vertex is introduced in subtree(B) iff every bag holding it
// lies in subtree(B), i.e. its topmost bag does.
inline FineSeparator fine_separator_trace(const Graph& g, const TreeDecomposition& td, std::span<const Vertex> terminals,
                                          int delta) {
  if (delta < 1) throw InputError("fine_separator: delta must be positive");
  require_valid(g, td);
  const VertexSet r = normalized(VertexSet(terminals.begin(), terminals.end()));
  for (Vertex v : r) {
    if (!g.contains(v)) throw InputError("terminal out of range");
  }
  FineSeparator out;
  if (static_cast<int>(r.size()) <= delta) return out;

  const int nodes = td.num_nodes();
  const auto tree = detail::root_tree(nodes, td.tree_edges, td.root);
  std::vector<int> depth(static_cast<std::size_t>(nodes), 0);
  for (int x : tree.preorder) {
    if (tree.parent[x] >= 0) depth[x] = depth[tree.parent[x]] + 1;
  }
  std::vector<int> top(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int x : tree.preorder) {
    for (Vertex v : td.bags[x]) {
      if (top[v] < 0) top[v] = x;
    }
  }

  std::vector<char> handled(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> detached(static_cast<std::size_t>(nodes), 0);
  std::vector<char> in_x(static_cast<std::size_t>(g.num_vertices()), 0);
  for (;;) {
    std::vector<int> count(static_cast<std::size_t>(nodes), 0);
    for (Vertex v : r) {
      if (!handled[v] && !detached[top[v]]) ++count[top[v]];
    }
    std::vector<char> heavy_below(static_cast<std::size_t>(nodes), 0);
    int chosen = -1;
    for (auto it = tree.preorder.rbegin(); it != tree.preorder.rend(); ++it) {
      const int x = *it;
      if (detached[x]) continue;
      for (int c : tree.children[x]) {
        if (detached[c]) continue;
        count[x] += count[c];
        heavy_below[x] |= heavy_below[c] | (count[c] > delta);
      }
      if (count[x] > delta && !heavy_below[x]) {
        if (chosen < 0 || depth[x] > depth[chosen] || (depth[x] == depth[chosen] && x < chosen)) chosen = x;
      }
    }
    if (chosen < 0) break;
    ++out.iterations;
    out.cut_nodes.push_back(chosen);
    for (Vertex v : td.bags[chosen]) {
      in_x[v] = 1;
      handled[v] = 1;
    }
    std::vector<int> stack{chosen};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      detached[x] = 1;
      for (int c : tree.children[x]) {
        if (!detached[c]) stack.push_back(c);
      }
    }
    for (Vertex v : r) {
      if (detached[top[v]]) handled[v] = 1;
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_x[v]) out.separator.push_back(v);
  }
  return out;
}

inline VertexSet fine_separator(const Graph& g, const TreeDecomposition& td, std::span<const Vertex> terminals, int delta) {
  return fine_separator_trace(g, td, terminals, delta).separator;
}

}  // namespace sepkit
