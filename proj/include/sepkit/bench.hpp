#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepkit/edge_separator.hpp"
#include "sepkit/framework.hpp"
#include "sepkit/generate.hpp"
#include "sepkit/metric_labeling.hpp"
#include "sepkit/oracles.hpp"

namespace sepkit {

struct BenchRow {
  std::string instance;
  std::string algorithm;
  int n = 0;
  int m = 0;
  std::string params;
  int objective = 0;
  std::optional<int> optimum;
  double bound = 0;  // advertised worst-case ratio
  bool feasible = true;
  double ms = 0;

  // objective / optimum, with 0/0 read as 1 and x/0 as infinity.
  std::optional<double> ratio() const {
    if (!optimum) return std::nullopt;
    if (*optimum == 0) return objective == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    return static_cast<double>(objective) / *optimum;
  }
  bool within_bound() const {
    const auto r = ratio();
    return feasible && (!r || *r <= bound + 1e-9);
  }
};

inline nlohmann::json to_json(const BenchRow& row) {
  nlohmann::json j{{"instance", row.instance}, {"algorithm", row.algorithm}, {"n", row.n},       {"m", row.m},
                   {"params", row.params},     {"objective", row.objective}, {"bound", row.bound}, {"feasible", row.feasible},
                   {"wall_ms", row.ms}};
  j["oracle_optimum"] = row.optimum ? nlohmann::json(*row.optimum) : nlohmann::json(nullptr);
  const auto r = row.ratio();
  j["ratio"] = r && std::isfinite(*r) ? nlohmann::json(*r) : nlohmann::json(nullptr);
  j["within_bound"] = row.within_bound();
  return j;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,algorithm,n,m,params,objective,optimum,ratio,bound,feasible,within_bound,wall_ms\n";
  for (const BenchRow& r : rows) {
    const auto ratio = r.ratio();
    out << r.instance << ',' << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.params << ',' << r.objective << ','
        << (r.optimum ? std::to_string(*r.optimum) : "") << ',';
    if (ratio) {
      if (std::isfinite(*ratio)) {
        out << *ratio;
      } else {
        out << "inf";
      }
    }
    out << ',' << r.bound << ',' << (r.feasible ? 1 : 0) << ',' << (r.within_bound() ? 1 : 0) << ',' << r.ms << '\n';
  }
  return out.str();
}

// Smallest exact vertex deletion; the full vertex set always works.
inline int optimum_vertex_deletion(const Graph& g, const GraphClass& h) {
  const auto sol = exact_vertex_deletion(g, h, g.num_vertices());
  if (!sol) throw InternalError("no vertex deletion solution");
  return static_cast<int>(sol->size());
}

inline int optimum_edge_deletion(const Graph& g, const GraphClass& h) {
  const auto sol = exact_edge_deletion(g, h, g.num_edges());
  if (!sol) throw InputError("class " + h.str() + " admits no edge deletion solution");
  return static_cast<int>(sol->size());
}

struct BenchConfig {
  std::uint64_t seed = 20240601;
  int instances = 12;  // per family
  int max_n = 10;
};

namespace detail {

inline BenchRow make_row(std::string instance, std::string algorithm, const Graph& g, std::string params, double bound) {
  BenchRow r;
  r.instance = std::move(instance);
  r.algorithm = std::move(algorithm);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.params = std::move(params);
  r.bound = bound;
  return r;
}

template <typename F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// Pinned suite: bounded-degree random graphs and planted triangles, each
// solved by the approximation algorithms and by the matching exact oracle.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg = {}) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(cfg.seed);
  const GraphClass forest = GraphClass::treewidth_at_most(1);
  const Rational eps_half(1, 2);

  for (int i = 0; i < cfg.instances; ++i) {
    const int n = 6 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_n - 5));
    const Graph g = random_bounded_degree(n, 4, 0.5, rng);
    const std::string id = "rand" + std::to_string(i);
    auto row = [&](std::string algo, std::string params, double bound) {
      return detail::make_row(id, std::move(algo), g, std::move(params), bound);
    };

    for (int k : {2, 3}) {
      const auto inst = SeparatorInstance::all_terminals(g, k);
      BenchRow r = row("kes-local", "k=" + std::to_string(k), 2.0);
      EdgeSeparatorResult res;
      r.ms = detail::timed([&] { res = local_search_kes(inst, Rational(1, 4)); });
      r.objective = res.objective;
      r.feasible = max_terminals_per_component(g, inst.terminals, res.cut) <= k;
      r.optimum = brute_kes(inst).objective;
      rows.push_back(r);
    }

    {
      BenchRow r = row("vdel-exact", "class=tw:1", 2.0);
      const ExactPartitioner part;
      FrameworkResult<VertexSet> res;
      r.ms = detail::timed([&] { res = vertex_framework(g, forest, part); });
      r.objective = static_cast<int>(res.solution.size());
      r.feasible = vertex_solution_feasible(g, forest, res.solution);
      r.optimum = optimum_vertex_deletion(g, forest);
      rows.push_back(r);
    }
    for (auto [name, backend] : {std::pair{"edel-local", KsesBackend::local_search}, std::pair{"edel-uml", KsesBackend::metric_labeling}}) {
      BenchRow r = row(name, "class=tw:1", 2.0);
      FrameworkResult<EdgeSet> res;
      r.ms = detail::timed([&] { res = edge_framework(g, forest, backend); });
      r.objective = static_cast<int>(res.solution.size());
      r.feasible = edge_solution_feasible(g, forest, res.solution);
      r.optimum = optimum_edge_deletion(g, forest);
      rows.push_back(r);
    }
  }

  // Subset separators on small graphs with a random terminal set.
  for (int i = 0; i < cfg.instances; ++i) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = random_bounded_degree(n, 4, 0.5, rng);
    VertexSet r;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) r.push_back(v);
    }
    if (r.size() < 2) r = {0, n - 1};
    const int k = 1 + static_cast<int>(rng() % 2);
    const SeparatorInstance inst(g, r, k);
    const int opt = brute_kes(inst).objective;
    const std::string params = "k=" + std::to_string(k) + ";|R|=" + std::to_string(r.size());
    {
      BenchRow row = detail::make_row("sub" + std::to_string(i), "kses-local", g, params, 2.0);
      EdgeSeparatorResult res;
      row.ms = detail::timed([&] { res = local_search_kses(inst); });
      row.objective = res.objective;
      row.feasible = max_terminals_per_component(g, r, res.cut) <= k;
      row.optimum = opt;
      rows.push_back(row);
    }
    {
      BenchRow row = detail::make_row("sub" + std::to_string(i), "kses-uml", g, params + ";eps=1/2", 2.0 * (1.0 + eps_half.to_double()));
      KsesUmlResult res;
      row.ms = detail::timed([&] { res = kses_via_uml(inst, eps_half); });
      row.objective = static_cast<int>(res.cut.size());
      row.feasible = max_terminals_per_component(g, r, res.cut) <= k;
      row.optimum = opt;
      rows.push_back(row);
    }
  }

  for (int i = 0; i < cfg.instances; ++i) {
    GenSpec spec;
    spec.kind = GenKind::planted_triangles;
    spec.n = 3 * (2 + i % 3);
    spec.noise = std::min(i % 4, spec.n / 2);
    spec.seed = cfg.seed + static_cast<std::uint64_t>(i);
    const Graph g = generate(spec).graph;
    const auto inst = SeparatorInstance::all_terminals(g, 3);
    BenchRow row = detail::make_row("planted" + std::to_string(i), "kes-local", g, "k=3;noise=" + std::to_string(spec.noise), 2.0);
    EdgeSeparatorResult res;
    row.ms = detail::timed([&] { res = local_search_kes(inst, Rational(1, 4)); });
    row.objective = res.objective;
    row.feasible = max_terminals_per_component(g, inst.terminals, res.cut) <= 3;
    row.optimum = brute_kes(inst).objective;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sepkit
