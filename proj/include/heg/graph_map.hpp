#pragma once

#include <optional>
#include <vector>

#include "heg/graph.hpp"

namespace heg {

// A morphism of half-edge graphs: a pointed vertex map together with a
// contravariant arc map (each target arc names the source arc it
// subdivides). Construct candidates freely; validate_map checks the five
// conditions of the combinatorial definition.
struct GraphMap {
  Graph source;
  Graph target;
  // size source.vertex_count(), values in [0, target.vertex_count()) or kInf
  std::vector<int> vertex_map;
  // size target.arc_count(), values are source arc indices
  std::vector<int> arc_map;

  int map_vertex(int v) const { return v == kInf ? kInf : vertex_map[v]; }

  bool operator==(const GraphMap& other) const = default;
};

struct MapClass {
  bool inert = false;
  bool active = false;
  bool quasi_collapse = false;
};

// Throws DomainError with code DAGGER_VIOLATION, BAD_PATH,
// FIBER_DISCONNECTED, ORPHAN_TARGET_VERTEX or BAD_INDEX.
const GraphMap& validate_map(const GraphMap& m);
bool is_valid_map(const GraphMap& m);

GraphMap identity_map(const Graph& g);

// compose(g, f) = g after f. Throws MISMATCH when f's target differs from
// g's source.
GraphMap compose(const GraphMap& g, const GraphMap& f);

MapClass classify(const GraphMap& m);
bool is_isomorphism_map(const GraphMap& m);

// The canonical inert map onto the corolla at v. Corolla legs are ordered
// by the incident arc index; a loop at v contributes two legs.
GraphMap rho_vertex(const Graph& g, int v);

// The inert map onto the edge graph restricting to {a, a-dagger}; edge arc
// 0 is sent to a.
GraphMap rho_arc(const Graph& g, int a);

// The arc swap automorphism of the edge graph.
GraphMap edge_swap();

// Orders `arcs` (a subset of target arcs, as a set) into a bivalent path
// in `g` from v_start to v_end; returns std::nullopt when impossible. The
// empty set orders iff v_start == v_end.
std::optional<std::vector<int>> order_as_bivalent_path(
    const Graph& g, const std::vector<int>& arcs, int v_start, int v_end);

// The subdivision path over source arc a, oriented from
// vertex_map(t(a-dagger)) to vertex_map(t(a)). Only valid on validated maps.
std::vector<int> subdivision_path(const GraphMap& m, int source_arc);

// Vertices and collapsed internal edges sitting over target vertex w.
struct FiberGraph {
  std::vector<int> vertices;        // source vertices mapping to w
  std::vector<int> collapsed_edges; // source edge indices collapsed inside
  int betti_number() const;         // E - V + 1, or 0 when empty
};
FiberGraph fiber_over(const GraphMap& m, int target_vertex);

}  // namespace heg
