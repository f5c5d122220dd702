#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

using Capacity = std::int64_t;

// Directed network with integer capacities. Arcs are stored in residual
// pairs: arc 2i is the forward arc, 2i+1 its reverse.
class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, int source, int sink) : out_(static_cast<std::size_t>(num_nodes)), source_(source), sink_(sink) {
    check_node(source);
    check_node(sink);
  }

  int num_nodes() const { return static_cast<int>(out_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int add_node() {
    out_.emplace_back();
    return num_nodes() - 1;
  }

  void add_arc(int from, int to, Capacity cap) { add_pair(from, to, cap, 0); }

  // Both directions share one residual pair, each with capacity cap.
  void add_undirected(int u, int v, Capacity cap) { add_pair(u, v, cap, cap); }

 private:
  friend struct MinCutSolver;

  struct Arc {
    int head;
    Capacity cap;
  };

  void check_node(int v) const {
    if (v < 0 || v >= num_nodes()) throw InputError("flow node " + std::to_string(v) + " out of range");
  }

  void add_pair(int u, int v, Capacity forward, Capacity backward) {
    check_node(u);
    check_node(v);
    if (forward < 0 || backward < 0) throw InputError("negative capacity");
    out_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, forward});
    out_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, backward});
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  int source_;
  int sink_;
};

struct MinCut {
  Capacity value = 0;
  // Nodes reachable from the source in the final residual network: the
  // unique inclusion-minimal source side of a minimum cut.
  VertexSet source_side;
  // Complement of the nodes that can still reach the sink: the unique
  // inclusion-maximal source side of a minimum cut.
  VertexSet maximal_source_side;
};

struct MinCutSolver {
  // Edmonds-Karp: shortest augmenting paths by BFS.
  static MinCut solve(const FlowNetwork& net) {
    if (net.source_ == net.sink_) throw InputError("min cut requires distinct source and sink");
    std::vector<FlowNetwork::Arc> arcs = net.arcs_;
    const int n = net.num_nodes();
    MinCut result;
    std::vector<int> via(static_cast<std::size_t>(n));
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{net.source_};
      via[net.source_] = -2;
      while (!queue.empty() && via[net.sink_] == -1) {
        const int v = queue.front();
        queue.pop_front();
        for (int a : net.out_[v]) {
          const int w = arcs[a].head;
          if (arcs[a].cap > 0 && via[w] == -1) {
            via[w] = a;
            queue.push_back(w);
          }
        }
      }
      if (via[net.sink_] == -1) break;
      Capacity bottleneck = std::numeric_limits<Capacity>::max();
      for (int v = net.sink_; v != net.source_; v = arcs[via[v] ^ 1].head) bottleneck = std::min(bottleneck, arcs[via[v]].cap);
      for (int v = net.sink_; v != net.source_; v = arcs[via[v] ^ 1].head) {
        arcs[via[v]].cap -= bottleneck;
        arcs[via[v] ^ 1].cap += bottleneck;
      }
      result.value += bottleneck;
    }

    for (int v = 0; v < n; ++v) {
      if (via[v] != -1) result.source_side.push_back(v);
    }

    // Reverse search from the sink: u reaches the sink if some arc u->w has
    // residual capacity and w reaches the sink.
    std::vector<char> reaches(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{net.sink_};
    reaches[net.sink_] = 1;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      for (int a : net.out_[w]) {
        // a is w->u; its partner a^1 is u->w.
        const int u = arcs[a].head;
        if (!reaches[u] && arcs[a ^ 1].cap > 0) {
          reaches[u] = 1;
          queue.push_back(u);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!reaches[v]) result.maximal_source_side.push_back(v);
    }
    return result;
  }
};

inline MinCut min_st_cut(const FlowNetwork& net) { return MinCutSolver::solve(net); }

}  // namespace sepkit
