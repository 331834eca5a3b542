#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heg/graph.hpp"
#include "heg/graph_map.hpp"

namespace heg {

enum class MapFilter { All, Inert, Active, QuasiCollapse, Isomorphism };

// Brute-force hom-set: every valid map src -> dst, in lexicographic order
// of (vertex_map, arc_map). Throws TOO_LARGE beyond desk-scale bounds.
std::vector<GraphMap> enumerate_maps(const Graph& src, const Graph& dst,
                                     MapFilter filter = MapFilter::All);

// Inert-active factorization m = active o inert. The optional edge order
// (a permutation of the source edges) permutes the construction order of
// the middle graph; the middle graph's isomorphism class never depends
// on it.
std::pair<GraphMap, GraphMap> factorize(
    const GraphMap& m, const std::vector<int>* edge_order = nullptr);

}  // namespace heg
