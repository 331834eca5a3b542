#pragma once

#include <string>
#include <vector>

#include "heg/graph.hpp"

namespace heg {

// Canonical key for the isomorphism class of g: the lexicographic minimum,
// over vertex orderings compatible with the degree signature, of a fixed
// serialization of the edge multiset. Two graphs get equal keys iff they
// are isomorphic.
std::string canonical_encoding(const Graph& g);

// Same, for a graph with natural-number vertex labels (label-preserving
// isomorphism classes).
std::string canonical_encoding_labelled(const Graph& g,
                                        const std::vector<int>& labels);

bool is_isomorphic(const Graph& a, const Graph& b);

// All isomorphism classes of connected graphs with the stated number of
// legs, at most max_internal_edges internal edges and, when max_vertices
// >= 1, between 1 and max_vertices vertices. max_vertices == 0 asks for
// the vertexless classes, of which the edge graph is the only one.
// Output is ordered by canonical encoding.
std::vector<Graph> enumerate_graphs(int max_vertices, int max_internal_edges,
                                    int legs);

}  // namespace heg
