// hegtool: command-line workbench for half-edge graphs, graph maps, Segal
// checks, 2D-TQFT evaluation, cyclic orders and graded-graph enumeration.
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "heg/canonical.hpp"
#include "heg/cyclic.hpp"
#include "heg/errors.hpp"
#include "heg/frobenius.hpp"
#include "heg/graded.hpp"
#include "heg/hom.hpp"
#include "heg/instances.hpp"
#include "heg/io.hpp"
#include "heg/presheaf.hpp"

using namespace heg;

namespace {

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Deterministic tabular output in TSV or JSON.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  void print(const std::string& format) const {
    if (format == "json") {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj;
        for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        out.push_back(obj);
      }
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (size_t i = 0; i < header.size(); ++i)
      std::cout << header[i] << (i + 1 < header.size() ? '\t' : '\n');
    for (const auto& row : rows)
      for (size_t i = 0; i < row.size(); ++i)
        std::cout << row[i] << (i + 1 < row.size() ? '\t' : '\n');
  }
};

std::vector<Graph> corpus_graphs(int max_vertices, int max_edges) {
  std::vector<Graph> corpus = {make_edge_graph()};
  for (int legs = 0; legs <= max_edges; ++legs)
    for (const Graph& g :
         enumerate_graphs(max_vertices, max_edges - legs, legs))
      corpus.push_back(g);
  return corpus;
}

SetPresheaf parse_presheaf_spec(const std::string& spec) {
  if (spec == "terminal") return make_terminal_presheaf();
  if (spec == "orientation") return make_orientation_presheaf();
  if (spec.rfind("grading:", 0) == 0)
    return make_grading_presheaf(std::stoi(spec.substr(8)));
  if (spec.rfind("monoid:", 0) == 0) {
    nlohmann::json doc = nlohmann::json::parse(read_file(spec.substr(7)));
    MonoidTable table;
    table.size = doc.at("size").get<int>();
    table.op = doc.at("op").get<std::vector<std::vector<int>>>();
    table.unit = doc.at("unit").get<int>();
    return make_monoid_presheaf(table);
  }
  if (spec.rfind("linear:", 0) == 0) {
    nlohmann::json doc = nlohmann::json::parse(read_file(spec.substr(7)));
    std::vector<LinearColour> colours;
    for (const auto& c : doc.at("colours"))
      colours.push_back({c.at("dim").get<int>(),
                         c.at("form").get<std::vector<std::vector<int>>>()});
    return make_linear_presheaf(doc.at("p").get<long>(), colours);
  }
  throw DomainError("PARSE", "unknown presheaf spec '" + spec + "'");
}

// Reads a map file together with the named source/target graphs.
struct LoadedMap {
  ParsedGraph source;
  ParsedGraph target;
  GraphMap map;
};

LoadedMap load_map(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line, source_path, target_path;
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head, value;
    ls >> head >> value;
    if (head == "source") source_path = (dir / value).string();
    if (head == "target") target_path = (dir / value).string();
  }
  if (source_path.empty() || target_path.empty())
    throw DomainError("PARSE", path + ": missing source/target declaration");
  LoadedMap out{parse_graph_file(source_path), parse_graph_file(target_path),
                {make_edge_graph(), make_edge_graph(), {}, {}}};
  out.map = parse_map_text(text, out.source, out.target, path);
  return out;
}

std::vector<std::string> map_row(const GraphMap& m) {
  return {join_ints(m.vertex_map), join_ints(m.arc_map)};
}

int run(int argc, char** argv) {
  CLI::App app{"combinatorial workbench for half-edge graphs and 2D TQFTs"};
  app.require_subcommand(1);

  std::string format = "tsv";
  long seed = 12345;
  int threads = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", seed, "seed for randomized regression modes");
  app.add_option("--threads", threads,
                 "worker threads (results are identical for any value)");

  // ---- graphs ----
  auto* graphs = app.add_subcommand("graphs", "graph kernel");
  int max_vertices = 2, max_edges = 2, legs = 0;
  auto* g_enum = graphs->add_subcommand("enumerate", "isomorphism classes");
  g_enum->add_option("--max-vertices", max_vertices)->required();
  g_enum->add_option("--max-edges", max_edges)->required();
  g_enum->add_option("--legs", legs);

  std::string graph_path, graph_path2;
  auto* g_canon = graphs->add_subcommand("canon", "canonical encoding");
  g_canon->add_option("--graph", graph_path)->required();
  auto* g_iso = graphs->add_subcommand("iso", "isomorphism test");
  g_iso->add_option("--first", graph_path)->required();
  g_iso->add_option("--second", graph_path2)->required();

  // ---- maps ----
  auto* maps = app.add_subcommand("maps", "graph-map calculus");
  std::string map_path, map_path2;
  auto* m_validate = maps->add_subcommand("validate", "validate and classify");
  m_validate->add_option("--map", map_path)->required();
  auto* m_classify = maps->add_subcommand("classify", "classify a valid map");
  m_classify->add_option("--map", map_path)->required();
  auto* m_compose = maps->add_subcommand("compose", "second after first");
  m_compose->add_option("--first", map_path)->required();
  m_compose->add_option("--second", map_path2)->required();
  auto* m_factorize = maps->add_subcommand("factorize", "inert-active");
  m_factorize->add_option("--map", map_path)->required();
  std::string filter = "all";
  auto* m_hom = maps->add_subcommand("hom", "enumerate maps");
  m_hom->add_option("--source", graph_path)->required();
  m_hom->add_option("--target", graph_path2)->required();
  m_hom->add_option("--filter", filter)
      ->check(CLI::IsMember({"all", "inert", "active", "quasi", "iso"}));

  // ---- segal ----
  auto* segal = app.add_subcommand("segal", "Segal-condition checks");
  std::string presheaf_spec = "terminal";
  size_t bound = 100000;
  auto* s_check = segal->add_subcommand("check", "one graph");
  s_check->add_option("--presheaf", presheaf_spec)->required();
  s_check->add_option("--graph", graph_path)->required();
  s_check->add_option("--bound", bound);
  auto* s_sweep = segal->add_subcommand("sweep", "a graph corpus");
  s_sweep->add_option("--presheaf", presheaf_spec)->required();
  s_sweep->add_option("--max-vertices", max_vertices)->required();
  s_sweep->add_option("--max-edges", max_edges)->required();
  s_sweep->add_option("--bound", bound);

  // ---- tqft ----
  auto* tqft = app.add_subcommand("tqft", "Frobenius-algebra TQFT");
  std::string algebra_path, inputs, labels_arg;
  int genus = 0, tq_legs = 0, tq_max_edges = 3;
  auto* t_load = tqft->add_subcommand("load", "validate an algebra");
  t_load->add_option("--algebra", algebra_path)->required();
  auto* t_eval = tqft->add_subcommand("eval", "surface invariant");
  t_eval->add_option("--algebra", algebra_path)->required();
  t_eval->add_option("--genus", genus);
  t_eval->add_option("--legs", tq_legs);
  t_eval->add_option("--inputs", inputs, "comma list of basis indices");
  t_eval->add_option("--graph", graph_path, "graded dual graph file");
  auto* t_inv = tqft->add_subcommand("invariance", "gluing invariance");
  t_inv->add_option("--algebra", algebra_path)->required();
  t_inv->add_option("--genus", genus)->required();
  t_inv->add_option("--legs", tq_legs);
  t_inv->add_option("--max-edges", tq_max_edges);

  // ---- cyclic ----
  auto* cyclic = app.add_subcommand("cyclic", "cyclic orders");
  int n = 3;
  std::string order_path, fibered_path;
  auto* c_orders = cyclic->add_subcommand("orders", "canonical forms");
  c_orders->add_option("--n", n)->required();
  auto* c_induce = cyclic->add_subcommand("induce", "fiber blow-up");
  c_induce->add_option("--order", order_path)->required();
  c_induce->add_option("--map", fibered_path)->required();

  // ---- genus ----
  auto* genus_cmd = app.add_subcommand("genus", "graded graphs");
  int total = 0;
  bool stable = false;
  int label_max = 2;
  auto* ge_enum = genus_cmd->add_subcommand("enumerate", "graded classes");
  ge_enum->add_option("--total", total)->required();
  ge_enum->add_option("--legs", legs);
  ge_enum->add_flag("--stable", stable);
  auto* max_edges_opt = ge_enum->add_option("--max-edges", max_edges);
  auto* ge_push = genus_cmd->add_subcommand("push", "grading pushforward");
  ge_push->add_option("--map", map_path)->required();
  ge_push->add_option("--labels", labels_arg, "name=value comma list");
  auto* ge_cons = genus_cmd->add_subcommand("conserve", "conservation sweep");
  ge_cons->add_option("--max-vertices", max_vertices);
  ge_cons->add_option("--max-edges", max_edges);
  ge_cons->add_option("--label-max", label_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Table table;

  if (g_enum->parsed()) {
    table.header = {"index", "vertices", "internal_edges", "legs", "betti",
                    "canonical"};
    int i = 0;
    for (const Graph& g : enumerate_graphs(max_vertices, max_edges, legs))
      table.add({std::to_string(i++), std::to_string(g.vertex_count()),
                 std::to_string(g.internal_edge_count()),
                 std::to_string(g.leg_count()),
                 std::to_string(g.betti_number()),
                 hex_encode(canonical_encoding(g))});
  } else if (g_canon->parsed()) {
    const Graph g = parse_graph_file(graph_path).graph;
    const auto pred = structural_predicates(g);
    table.header = {"vertices", "internal_edges", "legs",
                    "betti",    "tree",           "linear", "canonical"};
    table.add({std::to_string(g.vertex_count()),
               std::to_string(g.internal_edge_count()),
               std::to_string(g.leg_count()), std::to_string(g.betti_number()),
               pred.is_tree ? "true" : "false",
               pred.is_linear ? "true" : "false",
               hex_encode(canonical_encoding(g))});
  } else if (g_iso->parsed()) {
    const Graph a = parse_graph_file(graph_path).graph;
    const Graph b = parse_graph_file(graph_path2).graph;
    table.header = {"isomorphic"};
    table.add({is_isomorphic(a, b) ? "true" : "false"});
  } else if (m_validate->parsed() || m_classify->parsed()) {
    const GraphMap m = load_map(map_path).map;
    const MapClass c = classify(m);
    table.header = {"valid", "inert", "active", "quasi_collapse",
                    "isomorphism"};
    table.add({"true", c.inert ? "true" : "false", c.active ? "true" : "false",
               c.quasi_collapse ? "true" : "false",
               is_isomorphism_map(m) ? "true" : "false"});
  } else if (m_compose->parsed()) {
    const GraphMap f = load_map(map_path).map;
    const GraphMap g = load_map(map_path2).map;
    const GraphMap h = compose(g, f);
    table.header = {"vertex_map", "arc_map"};
    table.add(map_row(h));
  } else if (m_factorize->parsed()) {
    const GraphMap m = load_map(map_path).map;
    const auto [inert, active] = factorize(m);
    table.header = {"part", "vertex_map", "arc_map", "graph"};
    table.add({"inert", join_ints(inert.vertex_map), join_ints(inert.arc_map),
               hex_encode(canonical_encoding(inert.target))});
    table.add({"active", join_ints(active.vertex_map),
               join_ints(active.arc_map),
               hex_encode(canonical_encoding(active.target))});
  } else if (m_hom->parsed()) {
    const Graph src = parse_graph_file(graph_path).graph;
    const Graph dst = parse_graph_file(graph_path2).graph;
    MapFilter mf = MapFilter::All;
    if (filter == "inert") mf = MapFilter::Inert;
    if (filter == "active") mf = MapFilter::Active;
    if (filter == "quasi") mf = MapFilter::QuasiCollapse;
    if (filter == "iso") mf = MapFilter::Isomorphism;
    table.header = {"index", "vertex_map", "arc_map"};
    int i = 0;
    for (const GraphMap& m : enumerate_maps(src, dst, mf))
      table.add({std::to_string(i++), join_ints(m.vertex_map),
                 join_ints(m.arc_map)});
  } else if (s_check->parsed() || s_sweep->parsed()) {
    const SetPresheaf P = parse_presheaf_spec(presheaf_spec);
    std::vector<Graph> targets;
    if (s_check->parsed())
      targets.push_back(parse_graph_file(graph_path).graph);
    else
      targets = corpus_graphs(max_vertices, max_edges);
    table.header = {"graph", "lhs", "pullback", "status"};
    for (const Graph& g : targets) {
      std::vector<std::string> row = {hex_encode(canonical_encoding(g))};
      try {
        const SegalReport r = segal_check(P, g, bound);
        row.push_back(std::to_string(r.lhs_size));
        row.push_back(std::to_string(r.pullback_size));
        row.push_back(r.is_bijection ? "bijection" : "FAIL");
      } catch (const DomainError& e) {
        if (std::string(e.what()).find("BOUND_EXCEEDED") == std::string::npos)
          throw;
        row.insert(row.end(), {"-", "-", "skipped"});
      }
      table.add(row);
    }
  } else if (t_load->parsed()) {
    const FrobeniusAlgebra A =
        FrobeniusAlgebra::load(parse_algebra_file(algebra_path));
    table.header = {"field", "dim", "valid"};
    table.add({A.field().spec(), std::to_string(A.dim()), "true"});
  } else if (t_eval->parsed()) {
    const FrobeniusAlgebra A =
        FrobeniusAlgebra::load(parse_algebra_file(algebra_path));
    std::vector<Vec> basis_inputs;
    if (!inputs.empty()) {
      std::istringstream in(inputs);
      std::string tok;
      while (std::getline(in, tok, ','))
        basis_inputs.push_back(A.basis(std::stoi(tok)));
    }
    Rational value;
    if (!graph_path.empty()) {
      const GradedGraph gg = parse_graph_file(graph_path).graded();
      value = evaluate_graph(A, gg, basis_inputs);
    } else if (basis_inputs.empty()) {
      value = A.evaluate_closed(genus);
    } else {
      value = evaluate_graph(A, {make_corolla(static_cast<int>(
                                     basis_inputs.size())),
                                 {genus}},
                             basis_inputs);
    }
    table.header = {"value"};
    table.add({A.field().to_string(value)});
  } else if (t_inv->parsed()) {
    const FrobeniusAlgebra A =
        FrobeniusAlgebra::load(parse_algebra_file(algebra_path));
    const InvarianceReport r =
        invariance_check(A, genus, tq_legs, tq_max_edges);
    table.header = {"graphs_checked", "ok", "detail"};
    table.add({std::to_string(r.graphs_checked), r.ok ? "true" : "false",
               r.first_discrepancy});
  } else if (c_orders->parsed()) {
    table.header = {"index", "cycle"};
    int i = 0;
    for (const CyclicOrder& c : enumerate_cyclic_orders(n))
      table.add({std::to_string(i++), c.to_string()});
  } else if (c_induce->parsed()) {
    // order file: one line of space-separated elements of the cycle
    std::istringstream oin(read_file(order_path));
    std::vector<int> cycle;
    int x;
    while (oin >> x) cycle.push_back(x);
    const CyclicOrder c = CyclicOrder::from_cycle(cycle);
    // map file: `domain <size>` then `fiber <a> <b...>` lines
    FiberedOrderMap f;
    f.fiber_order.assign(cycle.size(), {});
    std::istringstream min(read_file(fibered_path));
    std::string line;
    while (std::getline(min, line)) {
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      if (head == "domain") {
        ls >> f.domain_size;
      } else if (head == "fiber") {
        int a;
        ls >> a;
        if (a < 0 || a >= static_cast<int>(f.fiber_order.size()))
          throw DomainError("PARSE", fibered_path + ": fiber out of range");
        int b;
        while (ls >> b) f.fiber_order[a].push_back(b);
      } else if (!head.empty() && head[0] != '#') {
        throw DomainError("PARSE", fibered_path + ": bad directive");
      }
    }
    table.header = {"cycle"};
    table.add({induce_cyclic_order(c, f).to_string()});
  } else if (ge_enum->parsed()) {
    std::optional<int> edge_bound;
    if (*max_edges_opt) edge_bound = max_edges;
    table.header = {"index", "vertices", "internal_edges", "labels", "total",
                    "stable", "canonical"};
    int i = 0;
    for (const GradedGraph& gg :
         enumerate_graded_graphs(total, legs, stable, edge_bound))
      table.add({std::to_string(i++),
                 std::to_string(gg.graph.vertex_count()),
                 std::to_string(gg.graph.internal_edge_count()),
                 join_ints(gg.labels), std::to_string(total_genus(gg)),
                 is_stable(gg) ? "true" : "false",
                 hex_encode(
                     canonical_encoding_labelled(gg.graph, gg.labels))});
  } else if (ge_push->parsed()) {
    const LoadedMap lm = load_map(map_path);
    std::vector<int> labels = lm.source.labels;
    if (!labels_arg.empty()) {
      std::istringstream in(labels_arg);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw DomainError("PARSE", "bad --labels entry '" + tok + "'");
        const std::string name = tok.substr(0, eq);
        const auto& names = lm.source.vertex_names;
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw DomainError("PARSE", "unknown vertex '" + name + "'");
        labels[it - names.begin()] = std::stoi(tok.substr(eq + 1));
      }
    }
    const GradedGraph pushed = pushforward(lm.map, {lm.source.graph, labels});
    table.header = {"labels", "total"};
    table.add({join_ints(pushed.labels),
               std::to_string(total_genus(pushed))});
  } else if (ge_cons->parsed()) {
    const ConservationReport r =
        conservation_sweep(max_vertices, max_edges, label_max);
    table.header = {"maps_checked", "active_maps", "ok", "detail"};
    table.add({std::to_string(r.maps_checked),
               std::to_string(r.active_maps), r.ok ? "true" : "false",
               r.first_violation});
  }

  table.print(format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
