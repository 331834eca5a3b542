#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heg/graph.hpp"
#include "heg/graph_map.hpp"

namespace heg {

// A graph with natural-number vertex labels; the glued surface's genus is
// the label sum plus the first Betti number.
struct GradedGraph {
  Graph graph;
  std::vector<int> labels;

  bool operator==(const GradedGraph&) const = default;
};

int total_genus(const GradedGraph& gg);

// true iff every label is <= g.
bool genus_bound(const GradedGraph& gg, int g);

// Getzler-Kapranov stability: 2 l(v) - 2 + valence(v) > 0 at every vertex.
bool is_stable(const GradedGraph& gg);

// Label at a target vertex = Betti number of its fiber plus the label sum
// over the fiber.
GradedGraph pushforward(const GraphMap& f, const GradedGraph& gg);

// Isomorphism classes (label-preserving) with the given total genus and
// leg count. With stable_only the search is self-bounding; otherwise
// max_edges is required (error UNBOUNDED).
std::vector<GradedGraph> enumerate_graded_graphs(
    int total, int legs, bool stable_only,
    std::optional<int> max_edges = std::nullopt);

struct ConservationReport {
  int maps_checked = 0;
  int active_maps = 0;
  bool ok = true;
  std::string first_violation;
};

// Sweeps all maps between corpus graphs (<= max_vertices vertices,
// <= max_edges edges) and all labellings with entries <= label_max,
// checking the genus ledger:
//   total(src) = total(push) + deleted labels + betti deficit,
// with the deficit nonnegative and zero exactly when nothing is deleted
// or cut; active maps preserve total genus on the nose.
ConservationReport conservation_sweep(int max_vertices, int max_edges,
                                      int label_max);

}  // namespace heg
