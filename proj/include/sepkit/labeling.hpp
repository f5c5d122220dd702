#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

// Assignment cost; std::nullopt marks a forbidden (vertex, label) pair.
using LabelCost = std::optional<std::int64_t>;
inline constexpr std::nullopt_t forbidden = std::nullopt;

using Label = int;

// Uniform Metric Labeling: pay cost(v, label(v)) per vertex plus one per
// edge whose endpoints get different labels.
class LabelingInstance {
 public:
  LabelingInstance() = default;

  LabelingInstance(Graph g, int num_labels)
      : graph_(std::move(g)),
        num_labels_(num_labels),
        cost_(static_cast<std::size_t>(graph_.num_vertices()) * static_cast<std::size_t>(num_labels), std::int64_t{0}) {
    if (num_labels < 1) throw InputError("labeling instance needs at least one label");
  }

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_labels() const { return num_labels_; }

  LabelCost cost(Vertex v, Label l) const { return cost_[index(v, l)]; }

  void set_cost(Vertex v, Label l, LabelCost c) {
    if (c && *c < 0) throw InputError("negative labeling cost");
    cost_[index(v, l)] = c;
  }

  bool allowed(Vertex v, Label l) const { return cost_[index(v, l)].has_value(); }

  // Optional human-readable label names (cover sets, "bottom").
  std::vector<std::string> label_names;

  // Throws InfeasibleError if some vertex has every label forbidden.
  void require_feasible() const {
    for (Vertex v = 0; v < num_vertices(); ++v) {
      bool any = false;
      for (Label l = 0; l < num_labels_ && !any; ++l) any = allowed(v, l);
      if (!any) throw InfeasibleError("vertex " + std::to_string(v) + " has every label forbidden");
    }
  }

 private:
  std::size_t index(Vertex v, Label l) const {
    if (!graph_.contains(v) || l < 0 || l >= num_labels_) throw InputError("labeling index out of range");
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(num_labels_) + static_cast<std::size_t>(l);
  }

  Graph graph_;
  int num_labels_ = 0;
  std::vector<LabelCost> cost_;
};

using Labeling = std::vector<Label>;

// Objective of a labeling, or nullopt if it uses a forbidden label.
inline std::optional<std::int64_t> labeling_cost(const LabelingInstance& inst, const Labeling& labeling) {
  if (static_cast<int>(labeling.size()) != inst.num_vertices()) throw InputError("labeling size mismatch");
  std::int64_t total = 0;
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    const LabelCost c = inst.cost(v, labeling[v]);
    if (!c) return std::nullopt;
    total += *c;
  }
  for (const Edge& e : inst.graph().edges()) total += labeling[e.u] != labeling[e.v] ? 1 : 0;
  return total;
}

inline EdgeSet bichromatic_edges(const Graph& g, const Labeling& labeling) {
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (labeling[g.edge(e).u] != labeling[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

}  // namespace sepkit
