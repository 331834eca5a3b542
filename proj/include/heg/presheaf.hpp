#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "heg/graph.hpp"
#include "heg/graph_map.hpp"

namespace heg {

// A set-valued functor on the graph category, with elements encoded as
// opaque canonical strings. `elements` lists the value set (throwing
// BOUND_EXCEEDED past the limit, so infinite sets can expose bounded
// descriptions); `act` pushes an element of the source value set forward
// along a valid map. Functoriality is a checkable property, not an
// assumption.
struct SetPresheaf {
  std::string name;
  std::function<std::vector<std::string>(const Graph&, size_t limit)> elements;
  std::function<std::string(const GraphMap&, const std::string&)> act;
};

struct SegalReport {
  Graph graph = make_edge_graph();
  size_t lhs_size = 0;
  size_t pullback_size = 0;
  bool is_bijection = false;
  std::string witness;  // element of the symmetric difference, if any
};

// Checks the Segal comparison on g: the map from P(g) into the explicit
// pullback of corolla values over edge values (tuples agreeing along every
// arc through the restriction maps, the second arc of each edge compared
// through the dagger swap). Each edge reads its value with the lower arc
// first unless edge_flips overrides the choice; is_bijection never depends
// on that choice. Throws BOUND_EXCEEDED when a value set or the search
// exceeds the bound.
SegalReport segal_check(const SetPresheaf& P, const Graph& g, size_t bound,
                        const std::vector<bool>* edge_flips = nullptr);

struct SweepReport {
  int pairs_checked = 0;
  int skipped = 0;  // value sets or actions out of bounds
  bool ok = true;
  std::string first_failure;
};

// Verifies act(id) = id and act(g o f) = act(g) o act(f) over all
// composable pairs among the corpus graphs (<= max_vertices vertices and
// <= max_edges edges, legs up to 2, plus the edge graph).
SweepReport functoriality_sweep(const SetPresheaf& P, int max_vertices,
                                int max_edges, size_t element_limit = 4096);

}  // namespace heg
