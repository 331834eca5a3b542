#pragma once

#include <string>
#include <vector>

#include "heg/frobenius.hpp"
#include "heg/graded.hpp"
#include "heg/graph.hpp"
#include "heg/graph_map.hpp"

namespace heg {

// Line-based graph text format ('#' comments):
//   graph
//   vertex <name>            (declaration order fixes indices)
//   edge <end1> <end2>       (vertex names or `inf`)
//   label <vertex> <n>       (graded graphs only, default 0)
// Parse errors throw DomainError PARSE with file:line locations.
struct ParsedGraph {
  Graph graph = make_edge_graph();
  std::vector<int> labels;  // one per vertex (zero when absent)
  std::vector<std::string> vertex_names;

  GradedGraph graded() const { return {graph, labels}; }
};

ParsedGraph parse_graph_text(const std::string& text,
                             const std::string& filename = "<input>");
ParsedGraph parse_graph_file(const std::string& path);

std::string serialize_graph(const Graph& g);
std::string serialize_graded(const GradedGraph& gg);

// Map text format:
//   map
//   source <path>            (graph file, relative to the map file)
//   target <path>
//   v <name|inf> -> <name|inf>
//   arc <dst-arc-index> -> <src-arc-index>
// The parsed map is validated.
GraphMap parse_map_file(const std::string& path);
GraphMap parse_map_text(const std::string& text, const ParsedGraph& source,
                        const ParsedGraph& target,
                        const std::string& filename = "<input>");

// Serializes the vertex and arc assignments with the given graph paths.
std::string serialize_map(const GraphMap& m, const std::string& source_path,
                          const std::string& target_path);

// Algebra JSON: {"field":"Q"|"F:<p>","dim":n,"mul":nxnxn,"unit":[..],
// "trace":[..]}; scalars are numbers or exact strings like "1/2".
AlgebraSpec parse_algebra_text(const std::string& text,
                               const std::string& filename = "<input>");
AlgebraSpec parse_algebra_file(const std::string& path);
std::string serialize_algebra(const AlgebraSpec& spec);

std::string read_file(const std::string& path);  // PARSE on failure

}  // namespace heg
