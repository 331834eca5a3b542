#pragma once

#include <optional>
#include <string>
#include <vector>

namespace heg {

// Incidence target for an arc whose end is open (the basepoint at infinity).
inline constexpr int kInf = -1;

enum class EdgeKind {
  Internal,  // both arcs end at vertices
  Leg,       // exactly one arc ends at a vertex
  Free,      // both arcs open; only the edge graph has one
};

// A connected half-edge graph. Vertices are 0..vertex_count-1, arcs are
// 0..2m-1 with the involution pairing arc 2i with 2i+1 structurally.
// Immutable after construction; construction validates connectedness.
class Graph {
public:
  // Throws DomainError with code EMPTY, BAD_INDEX or DISCONNECTED.
  static Graph make(int vertex_count, std::vector<int> incidence);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return arc_count() / 2; }

  // Vertex index or kInf.
  int incidence(int arc) const { return incidence_[arc]; }
  static int dagger(int arc) { return arc ^ 1; }

  EdgeKind edge_kind(int edge) const;
  int internal_edge_count() const;
  int leg_count() const;
  bool is_loop(int edge) const;

  // Arcs incident to v, ascending.
  std::vector<int> arcs_at(int vertex) const;
  int valence(int vertex) const;

  // #internal edges - #vertices + 1, and 0 for the vertexless edge graph.
  int betti_number() const;

  bool is_tree() const { return betti_number() == 0; }
  bool is_linear() const;

  bool operator==(const Graph& other) const = default;

private:
  Graph(int vertex_count, std::vector<int> incidence)
      : vertex_count_(vertex_count), incidence_(std::move(incidence)) {}

  int vertex_count_ = 0;
  std::vector<int> incidence_;
};

// The elementary graphs and the two-vertex fixture.
Graph make_edge_graph();
Graph make_corolla(int legs);
Graph make_linear(int vertices);
Graph make_loops(int loops);
Graph make_theta();

// One selected "out" arc per edge. out_low[e] == true selects arc 2e.
struct Orientation {
  std::vector<bool> out_low;

  int out_arc(int edge) const { return 2 * edge + (out_low[edge] ? 0 : 1); }
};

struct StructuralPredicates {
  bool is_tree = false;
  bool is_linear = false;
  std::optional<bool> is_directed_acyclic;
};

// is_directed_acyclic is computed only when an orientation is supplied: the
// digraph has an arrow along each internal edge from the tail vertex (the
// out arc's dagger end) to the head vertex.
StructuralPredicates structural_predicates(const Graph& g,
                                           const Orientation* o = nullptr);

}  // namespace heg
