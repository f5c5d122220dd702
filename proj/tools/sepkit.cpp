// sepkit command line: runs the separator and deletion algorithms on PACE
// inputs and prints one JSON object per result line.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepkit/sepkit.hpp"

using namespace sepkit;
using nlohmann::json;

namespace {

constexpr int exit_input = 2;
constexpr int exit_infeasible = 3;
constexpr int exit_oracle = 4;

struct Options {
  std::string graph;
  std::string td;
  std::string terminals;
  int k = 1;
  std::string epsilon = "0.25";
  std::uint64_t seed = 1;
  std::string json_path;
  std::string csv_path;
  bool oracle = false;

  std::string method = "local";
  std::string graph_class = "tw:1";
  std::string partitioner = "exact";
  std::string backend = "local";
  std::optional<int> k_override;
  int s = 0, t = 0, p = 0;
  std::optional<int> cover_m;
  int delta = 1;
  std::string problem = "kes";
  std::string labeling;

  GenSpec gen;
  std::string gen_kind = "random-gnm";
  std::string out_path;
  std::string planted_path;
  int instances = 12;
};

// Every RunResult line goes to stdout and, with --json, to a file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  void emit(const json& j) {
    const std::string line = j.dump();
    std::cout << line << '\n';
    if (file_.is_open()) file_ << line << '\n';
  }

 private:
  std::ofstream file_;
};

OracleLimits oracle_limits() {
  OracleLimits limits;
  if (const char* env = std::getenv("SEPKIT_ORACLE_LIMIT")) {
    int v = 0;
    try {
      v = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("SEPKIT_ORACLE_LIMIT must be an integer");
    }
    limits.membership_vertices = limits.kes_vertices = limits.uml_vertices = limits.important_cut_vertices =
        limits.svs_vertices = v;
  }
  return limits;
}

void require_size(int n, int limit, const std::string& what) {
  if (n > limit) {
    throw LimitError(what + " oracle: n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit) +
                     " (set SEPKIT_ORACLE_LIMIT to raise it)");
  }
}

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw InputError("--graph is required");
  return parse_gr(read_file(o.graph));
}

VertexSet load_terminals(const Options& o, const Graph& g) {
  if (o.terminals.empty()) {
    VertexSet all(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    return all;
  }
  return parse_terminals(read_file(o.terminals), g);
}

json one_based(const std::vector<int>& ids) {
  json out = json::array();
  for (int x : ids) out.push_back(x + 1);
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json run_result(const Options& o, const std::string& algorithm, json params, int objective, json solution, int iterations,
                double ms) {
  return json{{"instance", o.graph},      {"algorithm", algorithm}, {"params", std::move(params)},
              {"objective", objective},   {"solution", std::move(solution)}, {"iterations", iterations},
              {"wall_ms", ms}};
}

// Adds oracle_optimum and ratio; returns false when the ratio exceeds bound.
bool attach_oracle(json& result, int objective, int optimum, std::optional<double> bound) {
  result["oracle_optimum"] = optimum;
  double ratio = 1.0;
  if (optimum > 0) ratio = static_cast<double>(objective) / optimum;
  const bool ok = optimum > 0 || objective == 0;
  result["ratio"] = ok ? json(ratio) : json(nullptr);
  if (bound) result["bound"] = *bound;
  return ok && (!bound || ratio <= *bound + 1e-9);
}

int cmd_kes(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  const Rational eps = parse_rational(o.epsilon);
  const auto inst = SeparatorInstance::all_terminals(g, o.k);
  const auto start = std::chrono::steady_clock::now();
  const EdgeSeparatorResult res = local_search_kes(inst, eps);
  json out = run_result(o, "kes-local", {{"k", o.k}, {"epsilon", eps.str()}}, res.objective, one_based(res.cut), res.moves,
                        elapsed_ms(start));
  bool ok = true;
  if (o.oracle) {
    const OracleLimits limits = oracle_limits();
    require_size(g.num_vertices(), limits.kes_vertices, "k-edge separator");
    ok = attach_oracle(out, res.objective, brute_kes(inst, limits.kes_vertices).objective, 2.0 + eps.to_double());
  }
  sink.emit(out);
  return ok ? 0 : exit_oracle;
}

int cmd_kses(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  const SeparatorInstance inst(g, load_terminals(o, g), o.k);
  const Rational eps = parse_rational(o.epsilon);
  const auto start = std::chrono::steady_clock::now();
  EdgeSet cut;
  int iterations = 0;
  double bound = 2.0;
  json params{{"k", o.k}, {"terminals", inst.terminals.size()}, {"method", o.method}};
  if (o.method == "local") {
    const auto res = local_search_kses(inst);
    cut = res.cut;
    iterations = res.moves;
  } else if (o.method == "uml") {
    const auto res = kses_via_uml(inst, eps);
    cut = res.cut;
    iterations = res.labeling.moves;
    bound = 2.0 * (1.0 + eps.to_double());
    params["epsilon"] = eps.str();
    params["M"] = res.M;
    params["cover_size"] = res.cover_size;
  } else {
    throw InputError("--method must be local or uml");
  }
  json out = run_result(o, "kses-" + o.method, params, static_cast<int>(cut.size()), one_based(cut), iterations,
                        elapsed_ms(start));
  bool ok = true;
  if (o.oracle) {
    const OracleLimits limits = oracle_limits();
    require_size(g.num_vertices(), limits.kes_vertices, "k-subset edge separator");
    ok = attach_oracle(out, static_cast<int>(cut.size()), brute_kes(inst, limits.kes_vertices).objective, bound);
  }
  sink.emit(out);
  return ok ? 0 : exit_oracle;
}

FrameworkConfig framework_config(const Options& o) {
  FrameworkConfig cfg;
  cfg.epsilon = parse_rational(o.epsilon);
  cfg.k_override = o.k_override;
  return cfg;
}

json trace_json(const std::vector<IterationTrace>& trace) {
  json out = json::array();
  for (const IterationTrace& it : trace) {
    out.push_back({{"iteration", it.iteration},
                   {"candidate_before", it.candidate_before},
                   {"separator", it.separator_size},
                   {"candidate_after", it.candidate_after},
                   {"accepted", it.accepted}});
  }
  return out;
}

int cmd_vdel(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  const GraphClass h = parse_graph_class(o.graph_class);
  const auto part = make_partitioner(o.partitioner);
  const FrameworkConfig cfg = framework_config(o);
  const auto start = std::chrono::steady_clock::now();
  const auto res = vertex_framework(g, h, *part, cfg);
  const int objective = static_cast<int>(res.solution.size());
  json out = run_result(o, "vdel-" + part->name(),
                        {{"class", h.str()}, {"epsilon", cfg.epsilon.str()}, {"k", res.k}, {"partitioner", part->name()}},
                        objective, one_based(res.solution), res.iterations, elapsed_ms(start));
  out["trace"] = trace_json(res.trace);
  if (!vertex_solution_feasible(g, h, res.solution)) throw InternalError("vertex framework returned an infeasible solution");
  bool ok = true;
  if (o.oracle) {
    const OracleLimits limits = oracle_limits();
    require_size(g.num_vertices(), limits.membership_vertices, "vertex deletion");
    const auto opt = exact_vertex_deletion(g, h, g.num_vertices(), limits.membership_vertices);
    std::optional<double> bound;
    if (auto alpha = part->alpha()) bound = 2.0 * alpha->to_double();
    ok = attach_oracle(out, objective, static_cast<int>(opt->size()), bound);
  }
  sink.emit(out);
  return ok ? 0 : exit_oracle;
}

int cmd_edel(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  const GraphClass h = parse_graph_class(o.graph_class);
  const KsesBackend backend = parse_backend(o.backend);
  const FrameworkConfig cfg = framework_config(o);
  const auto start = std::chrono::steady_clock::now();
  const auto res = edge_framework(g, h, backend, cfg);
  const int objective = static_cast<int>(res.solution.size());
  json out = run_result(o, "edel-" + o.backend, {{"class", h.str()}, {"epsilon", cfg.epsilon.str()}, {"k", res.k}},
                        objective, one_based(res.solution), res.iterations, elapsed_ms(start));
  out["trace"] = trace_json(res.trace);
  if (!edge_solution_feasible(g, h, res.solution)) throw InternalError("edge framework returned an infeasible solution");
  bool ok = true;
  if (o.oracle) {
    const OracleLimits limits = oracle_limits();
    require_size(g.num_vertices(), limits.membership_vertices, "edge deletion");
    const auto opt = exact_edge_deletion(g, h, g.num_edges(), limits.membership_vertices);
    if (!opt) throw InputError("class " + h.str() + " admits no edge deletion solution");
    ok = attach_oracle(out, objective, static_cast<int>(opt->size()), 3.0 + cfg.epsilon.to_double());
  }
  sink.emit(out);
  return ok ? 0 : exit_oracle;
}

int cmd_cuts(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  if (!g.contains(o.s - 1) || !g.contains(o.t - 1)) throw InputError("--s and --t must be vertices of the graph");
  const auto start = std::chrono::steady_clock::now();
  const auto cuts = enumerate_important_cuts(g, o.s - 1, o.t - 1, o.p);
  json sets = json::array();
  for (const VertexSet& c : cuts) sets.push_back(one_based(c));
  json out = run_result(o, "important-cuts", {{"s", o.s}, {"t", o.t}, {"p", o.p}}, static_cast<int>(cuts.size()), sets, 0,
                        elapsed_ms(start));
  bool ok = true;
  if (o.oracle) {
    const OracleLimits limits = oracle_limits();
    require_size(g.num_vertices(), limits.important_cut_vertices, "important cut");
    ok = brute_important_cuts(g, o.s - 1, o.t - 1, o.p, limits.important_cut_vertices) == cuts;
    out["oracle_agrees"] = ok;
  }
  sink.emit(out);
  return ok ? 0 : exit_oracle;
}

int cmd_cover(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  const SeparatorInstance inst(g, load_terminals(o, g), o.k);
  const int M = o.cover_m.value_or(uml_cover_bound(inst, parse_rational(o.epsilon)));
  const auto start = std::chrono::steady_clock::now();
  const Cover cover = build_cover(inst, M);
  json sets = json::array();
  for (const VertexSet& c : cover.sets) sets.push_back(one_based(c));
  json out = run_result(o, "cover", {{"k", o.k}, {"M", M}, {"p", cover.params.p}}, static_cast<int>(cover.sets.size()), sets,
                        0, elapsed_ms(start));
  out["source"] = one_based(cover.source);
  sink.emit(out);
  return 0;
}

int cmd_sep(const Options& o, Sink& sink) {
  const Graph g = load_graph(o);
  if (o.td.empty()) throw InputError("--td is required");
  const TreeDecomposition td = parse_td(read_file(o.td), g);
  const VertexSet r = load_terminals(o, g);
  const auto start = std::chrono::steady_clock::now();
  const FineSeparator sep = fine_separator_trace(g, td, r, o.delta);
  json out = run_result(o, "fine-separator", {{"delta", o.delta}, {"width", td.width()}, {"terminals", r.size()}},
                        static_cast<int>(sep.separator.size()), one_based(sep.separator), sep.iterations, elapsed_ms(start));
  out["max_terminals_per_component"] = max_terminals_per_component(g, r, {}, sep.separator);
  sink.emit(out);
  return 0;
}

int cmd_typseq(const Options& o, Sink& sink) {
  const auto start = std::chrono::steady_clock::now();
  const auto list = enumerate_typical(o.k);
  json seqs = json::array();
  for (const IntSequence& s : list) seqs.push_back(s);
  sink.emit({{"algorithm", "typical-sequences"},
             {"params", {{"k", o.k}}},
             {"count", list.size()},
             {"sequences", seqs},
             {"wall_ms", elapsed_ms(start)}});
  return 0;
}

int cmd_gen(Options o) {
  o.gen.kind = parse_gen_kind(o.gen_kind);
  o.gen.seed = o.seed;
  const Generated gen = generate(o.gen);
  const std::string text = emit_gr(gen.graph);
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(o.out_path) << text;
  }
  if (!o.planted_path.empty()) {
    if (!gen.planted) throw InputError("--planted needs kind planted-triangles");
    json triangles = json::array();
    for (const VertexSet& t : gen.planted->triangles) triangles.push_back(one_based(t));
    std::ofstream(o.planted_path) << json{{"triangles", triangles}, {"noise_edges", one_based(gen.planted->noise_edges)}}.dump()
                                  << '\n';
  }
  return 0;
}

int cmd_oracle(const Options& o, Sink& sink) {
  const OracleLimits limits = oracle_limits();
  const auto start = std::chrono::steady_clock::now();
  if (o.problem == "uml") {
    if (o.labeling.empty()) throw InputError("--labeling is required for uml");
    const LabelingInstance inst = parse_labeling_json(read_file(o.labeling));
    const UmlOptimum opt = brute_uml(inst, limits);
    sink.emit({{"instance", o.labeling},
               {"algorithm", "oracle-uml"},
               {"objective", opt.objective},
               {"solution", opt.labeling},
               {"wall_ms", elapsed_ms(start)}});
    return 0;
  }
  const Graph g = load_graph(o);
  if (o.problem == "kes" || o.problem == "kses") {
    const SeparatorInstance inst = o.problem == "kes" ? SeparatorInstance::all_terminals(g, o.k)
                                                      : SeparatorInstance(g, load_terminals(o, g), o.k);
    const KesOptimum opt = brute_kes(inst, limits.kes_vertices);
    sink.emit(run_result(o, "oracle-" + o.problem, {{"k", o.k}}, opt.objective, one_based(opt.cut), 0, elapsed_ms(start)));
    return 0;
  }
  if (o.problem == "vdel" || o.problem == "edel") {
    const GraphClass h = parse_graph_class(o.graph_class);
    require_size(g.num_vertices(), limits.membership_vertices, o.problem);
    std::optional<std::vector<int>> sol;
    if (o.problem == "vdel") {
      sol = exact_vertex_deletion(g, h, g.num_vertices(), limits.membership_vertices);
    } else {
      sol = exact_edge_deletion(g, h, g.num_edges(), limits.membership_vertices);
    }
    if (!sol) throw InputError("class " + h.str() + " admits no solution");
    sink.emit(run_result(o, "oracle-" + o.problem, {{"class", h.str()}}, static_cast<int>(sol->size()), one_based(*sol), 0,
                         elapsed_ms(start)));
    return 0;
  }
  if (o.problem == "cuts") {
    const auto cuts = brute_important_cuts(g, o.s - 1, o.t - 1, o.p, limits.important_cut_vertices);
    json sets = json::array();
    for (const VertexSet& c : cuts) sets.push_back(one_based(c));
    sink.emit(run_result(o, "oracle-cuts", {{"s", o.s}, {"t", o.t}, {"p", o.p}}, static_cast<int>(cuts.size()), sets, 0,
                         elapsed_ms(start)));
    return 0;
  }
  if (o.problem == "svs") {
    const VertexSet s = brute_subset_vertex_separator(g, load_terminals(o, g), o.k, limits.svs_vertices);
    sink.emit(run_result(o, "oracle-svs", {{"k", o.k}}, static_cast<int>(s.size()), one_based(s), 0, elapsed_ms(start)));
    return 0;
  }
  throw InputError("--problem must be one of kes, kses, vdel, edel, cuts, svs, uml");
}

int cmd_bench(const Options& o, Sink& sink) {
  BenchConfig cfg;
  cfg.seed = o.seed == 1 ? cfg.seed : o.seed;
  cfg.instances = o.instances;
  const auto rows = run_bench(cfg);
  bool ok = true;
  for (const BenchRow& row : rows) {
    sink.emit(to_json(row));
    ok &= row.within_bound();
  }
  if (!o.csv_path.empty()) {
    std::ofstream csv(o.csv_path);
    if (!csv) throw InputError("cannot write '" + o.csv_path + "'");
    csv << bench_csv(rows);
  }
  return ok ? 0 : exit_oracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for graph separators and bounded-treewidth deletion"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_graph = true) {
    if (needs_graph) sub->add_option("--graph", o.graph, "PACE .gr input");
    sub->add_option("-k", o.k, "terminal budget per component");
    sub->add_option("--epsilon", o.epsilon, "epsilon as decimal or fraction");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--json", o.json_path, "also write JSON lines here");
    sub->add_flag("--oracle", o.oracle, "cross-check against the exact oracle");
  };

  auto* kes = app.add_subcommand("kes", "k-Edge Separator by local search");
  common(kes);
  auto* kses = app.add_subcommand("kses", "k-Subset Edge Separator");
  common(kses);
  kses->add_option("--terminals", o.terminals, "terminal file, one 1-indexed vertex per line");
  kses->add_option("--method", o.method, "local or uml")->check(CLI::IsMember({"local", "uml"}));

  auto* vdel = app.add_subcommand("vdel", "vertex deletion to a bounded-treewidth class");
  common(vdel);
  vdel->add_option("--class", o.graph_class, "tw:<w>, pathfree:<k> or compsize:<k>");
  vdel->add_option("--partitioner", o.partitioner, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
  vdel->add_option("--k-override", o.k_override, "separator budget instead of ceil(t/eps)");

  auto* edel = app.add_subcommand("edel", "edge deletion to a bounded-treewidth class");
  common(edel);
  edel->add_option("--class", o.graph_class, "tw:<w>, pathfree:<k> or compsize:<k>");
  edel->add_option("--backend", o.backend, "local or uml")->check(CLI::IsMember({"local", "uml"}));
  edel->add_option("--k-override", o.k_override, "separator budget instead of ceil(t deg/eps)");

  auto* cuts = app.add_subcommand("cuts", "important s-t cuts");
  common(cuts);
  cuts->add_option("--s", o.s, "source (1-indexed)")->required();
  cuts->add_option("--t", o.t, "sink (1-indexed)")->required();
  cuts->add_option("--p", o.p, "boundary budget")->required();

  auto* cover = app.add_subcommand("cover", "important-cut cover of bounded-boundary parts");
  common(cover);
  cover->add_option("--terminals", o.terminals, "terminal file");
  cover->add_option("--M", o.cover_m, "boundary bound (default from k, deg, eps)");

  auto* sep = app.add_subcommand("sep", "fine separator from a tree decomposition");
  common(sep);
  sep->add_option("--td", o.td, "PACE .td decomposition")->required();
  sep->add_option("--terminals", o.terminals, "terminal file");
  sep->add_option("--delta", o.delta, "terminals allowed per component");

  auto* typseq = app.add_subcommand("typseq", "typical sequences over {0..k}");
  common(typseq, false);

  auto* gen = app.add_subcommand("gen", "generate an instance as PACE .gr");
  gen->add_option("--kind", o.gen_kind, "planted-triangles, grid, random-gnm, random-regular, disjoint-cliques");
  gen->add_option("--n", o.gen.n, "vertices (or cliques)");
  gen->add_option("--m", o.gen.m, "edges");
  gen->add_option("--d", o.gen.d, "degree (or clique size)");
  gen->add_option("--rows", o.gen.rows, "grid rows");
  gen->add_option("--cols", o.gen.cols, "grid columns");
  gen->add_option("--noise", o.gen.noise, "planted noise edges");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out_path, "output .gr (default stdout)");
  gen->add_option("--planted", o.planted_path, "sidecar JSON with the planted triangles");

  auto* oracle = app.add_subcommand("oracle", "exact brute-force solvers");
  common(oracle);
  oracle->add_option("--problem", o.problem, "kes, kses, vdel, edel, cuts, svs or uml");
  oracle->add_option("--terminals", o.terminals, "terminal file");
  oracle->add_option("--class", o.graph_class, "graph class for vdel/edel");
  oracle->add_option("--s", o.s, "source for cuts");
  oracle->add_option("--t", o.t, "sink for cuts");
  oracle->add_option("--p", o.p, "budget for cuts");
  oracle->add_option("--labeling", o.labeling, "labeling instance JSON for uml");

  auto* bench = app.add_subcommand("bench", "pinned benchmark suite with ratio table");
  bench->add_option("--seed", o.seed, "suite seed");
  bench->add_option("--instances", o.instances, "instances per family");
  bench->add_option("--json", o.json_path, "also write JSON lines here");
  bench->add_option("--csv", o.csv_path, "CSV summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*gen) return cmd_gen(o);
    Sink sink(o.json_path);
    if (*kes) return cmd_kes(o, sink);
    if (*kses) return cmd_kses(o, sink);
    if (*vdel) return cmd_vdel(o, sink);
    if (*edel) return cmd_edel(o, sink);
    if (*cuts) return cmd_cuts(o, sink);
    if (*cover) return cmd_cover(o, sink);
    if (*sep) return cmd_sep(o, sink);
    if (*typseq) return cmd_typseq(o, sink);
    if (*oracle) return cmd_oracle(o, sink);
    if (*bench) return cmd_bench(o, sink);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return exit_infeasible;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return exit_input;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return exit_input;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
