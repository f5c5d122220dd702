#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/labeling.hpp"
#include "sepkit/tree_decomposition.hpp"

namespace sepkit {

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

inline long long to_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  return v;
}

// Calls visit(line_no, tokens) for every non-blank line that is not a
// comment ("c ...").
template <typename Visit>
void for_each_line(std::string_view text, Visit visit) {
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    visit(line_no, tok);
  }
}

}  // namespace detail

// PACE graph format: "p tw n m", then m lines "u v", 1-indexed.
inline Graph parse_gr(std::string_view text) {
  bool header = false;
  long long m = 0;
  Graph g(0);
  detail::for_each_line(text, [&](int line_no, const std::vector<std::string>& tok) {
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw") throw InputError(at + "expected header 'p tw <n> <m>'");
      const long long n = detail::to_int(tok[2], line_no);
      m = detail::to_int(tok[3], line_no);
      if (n < 0 || m < 0 || n > 100000000) throw InputError(at + "bad vertex or edge count");
      g = Graph(static_cast<int>(n));
      header = true;
      return;
    }
    if (tok.size() != 2) throw InputError(at + "expected an edge 'u v'");
    const long long u = detail::to_int(tok[0], line_no), v = detail::to_int(tok[1], line_no);
    if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices()) throw InputError(at + "vertex out of range");
    if (u == v) throw InputError(at + "self-loop");
    g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  });
  if (!header) throw InputError("missing header 'p tw <n> <m>'");
  if (g.num_edges() != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(g.num_edges()));
  }
  return g;
}

inline std::string emit_gr(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

// PACE decomposition format: "s td <bags> <max bag size> <n>", bag lines
// "b <id> <v...>", then tree edges "<id> <id>". Validated against g.
inline TreeDecomposition parse_td(std::string_view text, const Graph& g) {
  bool header = false;
  long long bags = 0, max_bag = 0;
  TreeDecomposition td;
  std::vector<char> seen;
  detail::for_each_line(text, [&](int line_no, const std::vector<std::string>& tok) {
    const std::string at = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") throw InputError(at + "expected header 's td <bags> <width+1> <n>'");
      bags = detail::to_int(tok[2], line_no);
      max_bag = detail::to_int(tok[3], line_no);
      const long long n = detail::to_int(tok[4], line_no);
      if (bags < 0 || bags > 100000000 || max_bag < 0) throw InputError(at + "bad bag counts");
      if (n != g.num_vertices()) throw InputError(at + "decomposition is for " + std::to_string(n) + " vertices, graph has " + std::to_string(g.num_vertices()));
      td.bags.resize(static_cast<std::size_t>(bags));
      seen.assign(static_cast<std::size_t>(bags), 0);
      header = true;
      return;
    }
    if (tok[0] == "b") {
      if (tok.size() < 2) throw InputError(at + "bag line needs an id");
      const long long id = detail::to_int(tok[1], line_no);
      if (id < 1 || id > bags) throw InputError(at + "bag id out of range");
      if (seen[id - 1]) throw InputError(at + "duplicate bag " + std::to_string(id));
      seen[id - 1] = 1;
      VertexSet bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const long long v = detail::to_int(tok[i], line_no);
        if (v < 1 || v > g.num_vertices()) throw InputError(at + "vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      const std::size_t size = bag.size();
      bag = normalized(std::move(bag));
      if (bag.size() != size) throw InputError(at + "repeated vertex in bag");
      td.bags[id - 1] = std::move(bag);
      return;
    }
    if (tok.size() != 2) throw InputError(at + "expected a tree edge '<id> <id>'");
    const long long a = detail::to_int(tok[0], line_no), b = detail::to_int(tok[1], line_no);
    if (a < 1 || b < 1 || a > bags || b > bags) throw InputError(at + "tree edge endpoint out of range");
    td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  });
  if (!header) throw InputError("missing header 's td <bags> <width+1> <n>'");
  for (long long i = 0; i < bags; ++i) {
    if (!seen[i]) throw InputError("bag " + std::to_string(i + 1) + " is never listed");
  }
  if (static_cast<long long>(td.width()) + 1 != max_bag) {
    throw InputError("header announces maximum bag size " + std::to_string(max_bag) + ", found " + std::to_string(td.width() + 1));
  }
  require_valid(g, td);
  return td;
}

inline std::string emit_td(const TreeDecomposition& td, const Graph& g) {
  std::string out = "s td " + std::to_string(td.num_nodes()) + " " + std::to_string(td.width() + 1) + " " +
                    std::to_string(g.num_vertices()) + "\n";
  for (int x = 0; x < td.num_nodes(); ++x) {
    out += "b " + std::to_string(x + 1);
    for (Vertex v : td.bags[x]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (auto [a, b] : td.tree_edges) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

// One 1-indexed vertex per line; comments allowed.
inline VertexSet parse_terminals(std::string_view text, const Graph& g) {
  VertexSet out;
  detail::for_each_line(text, [&](int line_no, const std::vector<std::string>& tok) {
    if (tok.size() != 1) throw InputError("line " + std::to_string(line_no) + ": expected one vertex per line");
    const long long v = detail::to_int(tok[0], line_no);
    if (v < 1 || v > g.num_vertices()) throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
    out.push_back(static_cast<Vertex>(v - 1));
  });
  return normalized(std::move(out));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// {"vertices": n, "labels": L, "edges": [[u, v], ...],
//  "costs": [[c or null, ...] per vertex]}, all 0-indexed; null = forbidden.
inline LabelingInstance parse_labeling_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const int n = j.at("vertices").get<int>();
    const int labels = j.at("labels").get<int>();
    if (n < 0 || labels < 1) throw InputError("labeling: need vertices >= 0 and labels >= 1");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("labeling: edges must be [u, v] pairs");
      const int u = e[0].get<int>(), v = e[1].get<int>();
      if (!g.contains(u) || !g.contains(v)) throw InputError("labeling: edge endpoint out of range");
      if (u == v) throw InputError("labeling: self-loop");
      g.add_edge(u, v);
    }
    LabelingInstance inst(std::move(g), labels);
    const auto& costs = j.at("costs");
    if (!costs.is_array() || static_cast<int>(costs.size()) != n) throw InputError("labeling: need one cost row per vertex");
    for (int v = 0; v < n; ++v) {
      if (!costs[v].is_array() || static_cast<int>(costs[v].size()) != labels) throw InputError("labeling: cost row has wrong length");
      for (int l = 0; l < labels; ++l) {
        const auto& c = costs[v][l];
        if (c.is_null()) {
          inst.set_cost(v, l, forbidden);
        } else {
          const auto value = c.get<std::int64_t>();
          if (value < 0) throw InputError("labeling: costs must be non-negative");
          inst.set_cost(v, l, value);
        }
      }
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("labeling: ") + e.what());
  }
}

inline nlohmann::json labeling_to_json(const LabelingInstance& inst) {
  nlohmann::json j;
  j["vertices"] = inst.num_vertices();
  j["labels"] = inst.num_labels();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : inst.graph().edges()) j["edges"].push_back({e.u, e.v});
  j["costs"] = nlohmann::json::array();
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    nlohmann::json row = nlohmann::json::array();
    for (Label l = 0; l < inst.num_labels(); ++l) {
      const LabelCost c = inst.cost(v, l);
      row.push_back(c ? nlohmann::json(*c) : nlohmann::json(nullptr));
    }
    j["costs"].push_back(row);
  }
  return j;
}

}  // namespace sepkit
