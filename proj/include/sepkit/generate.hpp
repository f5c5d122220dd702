#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

enum class GenKind { planted_triangles, grid, random_gnm, random_regular, disjoint_cliques };

inline const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::planted_triangles: return "planted-triangles";
    case GenKind::grid: return "grid";
    case GenKind::random_gnm: return "random-gnm";
    case GenKind::random_regular: return "random-regular";
    case GenKind::disjoint_cliques: return "disjoint-cliques";
  }
  return "?";
}

inline GenKind parse_gen_kind(const std::string& s) {
  for (GenKind k : {GenKind::planted_triangles, GenKind::grid, GenKind::random_gnm, GenKind::random_regular,
                    GenKind::disjoint_cliques}) {
    if (s == to_string(k)) return k;
  }
  throw InputError("unknown generator kind '" + s + "'");
}

// Parameters by kind:
//   planted-triangles  n (multiple of 3), noise
//   grid               rows, cols
//   random-gnm         n, m
//   random-regular     n, d
//   disjoint-cliques   n cliques of size d
struct GenSpec {
  GenKind kind = GenKind::random_gnm;
  int n = 0;
  int m = 0;
  int d = 0;
  int rows = 0;
  int cols = 0;
  int noise = 0;
  std::uint64_t seed = 1;
};

struct PlantedInfo {
  std::vector<VertexSet> triangles;
  EdgeSet noise_edges;
};

struct Generated {
  Graph graph;
  std::optional<PlantedInfo> planted;
};

namespace detail {

inline Generated planted_triangles(const GenSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n;
  if (n < 3 || n % 3 != 0) throw InputError("planted-triangles: n must be a positive multiple of 3");
  // Order triangles and their vertices at random, then pair position i with
  // i + n/2. Those lie at least 3 apart, hence in different triangles, and
  // the pairs form a matching, so every degree stays <= 3.
  const int half = n / 2;
  if (spec.noise < 0 || spec.noise > (n >= 6 ? half : 0)) {
    throw InputError("planted-triangles: noise must lie in [0, " + std::to_string(n >= 6 ? half : 0) + "]");
  }
  Generated out{Graph(n), PlantedInfo{}};
  std::vector<int> order(static_cast<std::size_t>(n / 3));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> line;
  for (int tri = 0; tri < n / 3; ++tri) {
    const Vertex a = 3 * tri;
    out.graph.add_edge(a, a + 1);
    out.graph.add_edge(a + 1, a + 2);
    out.graph.add_edge(a, a + 2);
    out.planted->triangles.push_back({a, a + 1, a + 2});
  }
  for (int tri : order) {
    std::vector<Vertex> members{3 * tri, 3 * tri + 1, 3 * tri + 2};
    std::shuffle(members.begin(), members.end(), rng);
    line.insert(line.end(), members.begin(), members.end());
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < half; ++i) pairs.emplace_back(line[i], line[i + half]);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (int i = 0; i < spec.noise; ++i) out.planted->noise_edges.push_back(out.graph.add_edge(pairs[i].first, pairs[i].second));
  return out;
}

inline Generated grid(const GenSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) throw InputError("grid: rows and cols must be positive");
  Generated out{Graph(spec.rows * spec.cols), std::nullopt};
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      const Vertex v = r * spec.cols + c;
      if (c + 1 < spec.cols) out.graph.add_edge(v, v + 1);
      if (r + 1 < spec.rows) out.graph.add_edge(v, v + spec.cols);
    }
  }
  return out;
}

inline Generated random_gnm(const GenSpec& spec, std::mt19937_64& rng) {
  const std::int64_t pairs = static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2;
  if (spec.n < 0 || spec.m < 0 || spec.m > pairs) throw InputError("random-gnm: need 0 <= m <= n(n-1)/2");
  std::vector<Edge> all;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(spec.m));
  std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return {Graph(spec.n, all), std::nullopt};
}

// Pairing model, restarted until the result is simple.
inline Generated random_regular(const GenSpec& spec, std::mt19937_64& rng) {
  const int n = spec.n, d = spec.d;
  if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0) throw InputError("random-regular: need 0 <= d < n and n*d even");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      Edge e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
      simple = e.u != e.v && std::none_of(edges.begin(), edges.end(), [&](const Edge& f) { return f.u == e.u && f.v == e.v; });
      edges.push_back(e);
    }
    if (simple) {
      std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
      return {Graph(n, edges), std::nullopt};
    }
  }
  throw LimitError("random-regular: no simple pairing found");
}

inline Generated disjoint_cliques(const GenSpec& spec) {
  if (spec.n < 1 || spec.d < 1) throw InputError("disjoint-cliques: need n >= 1 cliques of size d >= 1");
  Generated out{Graph(spec.n * spec.d), std::nullopt};
  for (int c = 0; c < spec.n; ++c) {
    for (int i = 0; i < spec.d; ++i) {
      for (int j = i + 1; j < spec.d; ++j) out.graph.add_edge(c * spec.d + i, c * spec.d + j);
    }
  }
  return out;
}

}  // namespace detail

inline Generated generate(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  switch (spec.kind) {
    case GenKind::planted_triangles: return detail::planted_triangles(spec, rng);
    case GenKind::grid: return detail::grid(spec);
    case GenKind::random_gnm: return detail::random_gnm(spec, rng);
    case GenKind::random_regular: return detail::random_regular(spec, rng);
    case GenKind::disjoint_cliques: return detail::disjoint_cliques(spec);
  }
  throw InputError("unknown generator kind");
}

// Simple graph on n vertices: each pair is tried once in random order and
// kept with probability p unless an endpoint already has max_degree edges.
inline Graph random_bounded_degree(int n, int max_degree, double p, std::mt19937_64& rng) {
  if (n < 0 || max_degree < 0) throw InputError("random_bounded_degree: bad parameters");
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution keep(p);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> chosen;
  for (const Edge& e : all) {
    if (deg[e.u] >= max_degree || deg[e.v] >= max_degree || !keep(rng)) continue;
    ++deg[e.u];
    ++deg[e.v];
    chosen.push_back(e);
  }
  std::sort(chosen.begin(), chosen.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return Graph(n, chosen);
}

}  // namespace sepkit
