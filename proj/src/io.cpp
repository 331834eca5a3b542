#include "heg/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "heg/errors.hpp"

namespace heg {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& filename, int line,
                             const std::string& message) {
  throw DomainError("PARSE",
                    filename + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = tokenize(raw);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("PARSE", "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ParsedGraph parse_graph_text(const std::string& text,
                             const std::string& filename) {
  const auto lines = logical_lines(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"graph"})
    parse_fail(filename, lines.empty() ? 1 : lines[0].number,
               "expected a `graph` header");

  ParsedGraph out;
  std::map<std::string, int> index;
  std::vector<int> incidence;
  std::vector<std::pair<int, int>> labels;  // (vertex, value)

  auto vertex_of = [&](const std::string& name, int line) {
    if (name == "inf") return kInf;
    auto it = index.find(name);
    if (it == index.end())
      parse_fail(filename, line, "unknown vertex '" + name + "'");
    return it->second;
  };

  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2)
        parse_fail(filename, number, "expected `vertex <name>`");
      if (tokens[1] == "inf" || tokens[1] == "vertex" ||
          index.count(tokens[1]))
        parse_fail(filename, number, "bad vertex name '" + tokens[1] + "'");
      index[tokens[1]] = static_cast<int>(out.vertex_names.size());
      out.vertex_names.push_back(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3)
        parse_fail(filename, number, "expected `edge <end1> <end2>`");
      incidence.push_back(vertex_of(tokens[1], number));
      incidence.push_back(vertex_of(tokens[2], number));
    } else if (tokens[0] == "label") {
      if (tokens.size() != 3)
        parse_fail(filename, number, "expected `label <vertex> <n>`");
      int value = 0;
      try {
        value = std::stoi(tokens[2]);
      } catch (const std::exception&) {
        parse_fail(filename, number, "bad label '" + tokens[2] + "'");
      }
      if (value < 0) parse_fail(filename, number, "negative label");
      labels.emplace_back(vertex_of(tokens[1], number), value);
    } else {
      parse_fail(filename, number, "unknown directive '" + tokens[0] + "'");
    }
  }

  out.graph = Graph::make(static_cast<int>(out.vertex_names.size()),
                          std::move(incidence));
  out.labels.assign(out.graph.vertex_count(), 0);
  for (auto [v, value] : labels) out.labels[v] = value;
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
  return parse_graph_text(read_file(path), path);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "vertex v" << v << "\n";
  auto end_name = [&](int arc) {
    const int v = g.incidence(arc);
    return v == kInf ? std::string("inf") : "v" + std::to_string(v);
  };
  for (int e = 0; e < g.edge_count(); ++e)
    out << "edge " << end_name(2 * e) << " " << end_name(2 * e + 1) << "\n";
  return out.str();
}

std::string serialize_graded(const GradedGraph& gg) {
  std::string out = serialize_graph(gg.graph);
  for (int v = 0; v < gg.graph.vertex_count(); ++v)
    if (gg.labels[v] != 0)
      out += "label v" + std::to_string(v) + " " +
             std::to_string(gg.labels[v]) + "\n";
  return out;
}

GraphMap parse_map_text(const std::string& text, const ParsedGraph& source,
                        const ParsedGraph& target,
                        const std::string& filename) {
  const auto lines = logical_lines(text);
  GraphMap m{source.graph, target.graph,
             std::vector<int>(source.graph.vertex_count(), kInf),
             std::vector<int>(target.graph.arc_count(), -1)};
  std::vector<bool> v_set(source.graph.vertex_count(), false);

  auto lookup = [&](const ParsedGraph& g, const std::string& name, int line) {
    if (name == "inf") return kInf;
    for (size_t i = 0; i < g.vertex_names.size(); ++i)
      if (g.vertex_names[i] == name) return static_cast<int>(i);
    parse_fail(filename, line, "unknown vertex '" + name + "'");
  };

  for (const auto& [number, tokens] : lines) {
    if (tokens[0] == "map" || tokens[0] == "source" || tokens[0] == "target")
      continue;  // handled by the file-level wrapper
    if (tokens[0] == "v") {
      if (tokens.size() != 4 || tokens[2] != "->")
        parse_fail(filename, number, "expected `v <src> -> <dst>`");
      const int src = lookup(source, tokens[1], number);
      const int dst = lookup(target, tokens[3], number);
      if (src == kInf) {
        if (dst != kInf)
          parse_fail(filename, number, "inf must map to inf");
        continue;
      }
      if (v_set[src]) parse_fail(filename, number, "duplicate vertex image");
      v_set[src] = true;
      m.vertex_map[src] = dst;
    } else if (tokens[0] == "arc") {
      if (tokens.size() != 4 || tokens[2] != "->")
        parse_fail(filename, number, "expected `arc <dst> -> <src>`");
      int dst_arc = -1, src_arc = -1;
      try {
        dst_arc = std::stoi(tokens[1]);
        src_arc = std::stoi(tokens[3]);
      } catch (const std::exception&) {
        parse_fail(filename, number, "bad arc index");
      }
      if (dst_arc < 0 || dst_arc >= target.graph.arc_count() ||
          src_arc < 0 || src_arc >= source.graph.arc_count())
        parse_fail(filename, number, "arc index out of range");
      if (m.arc_map[dst_arc] != -1)
        parse_fail(filename, number, "duplicate arc image");
      m.arc_map[dst_arc] = src_arc;
    } else {
      parse_fail(filename, number, "unknown directive '" + tokens[0] + "'");
    }
  }

  for (int v = 0; v < source.graph.vertex_count(); ++v)
    if (!v_set[v])
      parse_fail(filename, lines.empty() ? 1 : lines.back().number,
                 "missing image for vertex '" + source.vertex_names[v] + "'");
  for (int a = 0; a < target.graph.arc_count(); ++a)
    if (m.arc_map[a] == -1)
      parse_fail(filename, lines.empty() ? 1 : lines.back().number,
                 "missing image for arc " + std::to_string(a));

  validate_map(m);
  return m;
}

GraphMap parse_map_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto lines = logical_lines(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"map"})
    parse_fail(path, lines.empty() ? 1 : lines[0].number,
               "expected a `map` header");

  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::string source_path, target_path;
  for (const auto& [number, tokens] : lines) {
    if (tokens[0] == "source" || tokens[0] == "target") {
      if (tokens.size() != 2)
        parse_fail(path, number, "expected a file path");
      ((tokens[0] == "source") ? source_path : target_path) =
          (dir / tokens[1]).string();
    }
  }
  if (source_path.empty() || target_path.empty())
    parse_fail(path, lines[0].number, "missing source/target declaration");

  return parse_map_text(text, parse_graph_file(source_path),
                        parse_graph_file(target_path), path);
}

std::string serialize_map(const GraphMap& m, const std::string& source_path,
                          const std::string& target_path) {
  std::ostringstream out;
  out << "map\nsource " << source_path << "\ntarget " << target_path << "\n";
  for (int v = 0; v < m.source.vertex_count(); ++v) {
    out << "v v" << v << " -> ";
    if (m.vertex_map[v] == kInf)
      out << "inf\n";
    else
      out << "v" << m.vertex_map[v] << "\n";
  }
  for (int a = 0; a < m.target.arc_count(); ++a)
    out << "arc " << a << " -> " << m.arc_map[a] << "\n";
  return out.str();
}

AlgebraSpec parse_algebra_text(const std::string& text,
                               const std::string& filename) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError("PARSE", filename + ": " + e.what());
  }
  try {
    AlgebraSpec spec;
    spec.field = Field::parse_spec(doc.at("field").get<std::string>());
    spec.dim = doc.at("dim").get<int>();
    auto scalar = [&](const json& j) {
      if (j.is_string()) return spec.field.parse(j.get<std::string>());
      return spec.field.from_int(j.get<long>());
    };
    for (const json& row : doc.at("mul")) {
      spec.mul.emplace_back();
      for (const json& cell : row) {
        spec.mul.back().emplace_back();
        for (const json& x : cell) spec.mul.back().back().push_back(scalar(x));
      }
    }
    for (const json& x : doc.at("unit")) spec.unit.push_back(scalar(x));
    for (const json& x : doc.at("trace")) spec.trace.push_back(scalar(x));
    return spec;
  } catch (const json::exception& e) {
    throw DomainError("PARSE", filename + ": " + e.what());
  }
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  return parse_algebra_text(read_file(path), path);
}

std::string serialize_algebra(const AlgebraSpec& spec) {
  const Field& F = spec.field;
  json doc;
  doc["field"] = F.spec();
  doc["dim"] = spec.dim;
  json mul = json::array();
  for (const auto& row : spec.mul) {
    json jrow = json::array();
    for (const auto& cell : row) {
      json jcell = json::array();
      for (const Rational& x : cell) jcell.push_back(F.to_string(x));
      jrow.push_back(jcell);
    }
    mul.push_back(jrow);
  }
  doc["mul"] = mul;
  json unit = json::array(), trace = json::array();
  for (const Rational& x : spec.unit) unit.push_back(F.to_string(x));
  for (const Rational& x : spec.trace) trace.push_back(F.to_string(x));
  doc["unit"] = unit;
  doc["trace"] = trace;
  return doc.dump(2) + "\n";
}

}  // namespace heg
