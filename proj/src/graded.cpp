#include "heg/graded.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "heg/canonical.hpp"
#include "heg/errors.hpp"
#include "heg/hom.hpp"

namespace heg {

int total_genus(const GradedGraph& gg) {
  int sum = gg.graph.betti_number();
  for (int l : gg.labels) sum += l;
  return sum;
}

bool genus_bound(const GradedGraph& gg, int g) {
  return std::all_of(gg.labels.begin(), gg.labels.end(),
                     [g](int l) { return l <= g; });
}

bool is_stable(const GradedGraph& gg) {
  for (int v = 0; v < gg.graph.vertex_count(); ++v)
    if (2 * gg.labels[v] - 2 + gg.graph.valence(v) <= 0) return false;
  return true;
}

GradedGraph pushforward(const GraphMap& f, const GradedGraph& gg) {
  validate_map(f);
  std::vector<int> labels(f.target.vertex_count(), 0);
  for (int w = 0; w < f.target.vertex_count(); ++w) {
    FiberGraph fib = fiber_over(f, w);
    int l = fib.betti_number();
    for (int v : fib.vertices) l += gg.labels[v];
    labels[w] = l;
  }
  return {f.target, labels};
}

namespace {

// All label vectors of the given length summing to `budget`.
void for_each_composition(int length, int budget,
                          const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> labels(length, 0);
  if (length == 0) {
    if (budget == 0) f(labels);
    return;
  }
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == length - 1) {
      labels[pos] = left;
      f(labels);
      return;
    }
    for (int l = 0; l <= left; ++l) {
      labels[pos] = l;
      rec(pos + 1, left - l);
    }
  };
  rec(0, budget);
}

}  // namespace

std::vector<GradedGraph> enumerate_graded_graphs(int total, int legs,
                                                 bool stable_only,
                                                 std::optional<int> max_edges) {
  if (!stable_only && !max_edges)
    throw DomainError("UNBOUNDED",
                      "unstable enumeration needs an edge bound");
  // Stability forces 2 l(v) - 2 + val(v) >= 1 at each vertex; summing over
  // vertices bounds the graph size in terms of the total genus.
  int vertex_bound, edge_bound;
  if (stable_only) {
    vertex_bound = 2 * total - 2 + legs;
    edge_bound = 3 * total - 3 + legs;
    if (max_edges) edge_bound = std::min(edge_bound, *max_edges);
  } else {
    edge_bound = *max_edges;
    vertex_bound = edge_bound + 1;  // connectedness: E >= V - 1
  }
  std::map<std::string, GradedGraph> classes;
  if (vertex_bound >= 1 && edge_bound >= 0) {
    for (const Graph& g : enumerate_graphs(vertex_bound, edge_bound, legs)) {
      const int budget = total - g.betti_number();
      if (budget < 0) continue;
      for_each_composition(
          g.vertex_count(), budget, [&](const std::vector<int>& labels) {
            GradedGraph gg{g, labels};
            if (stable_only && !is_stable(gg)) return;
            classes.emplace(canonical_encoding_labelled(g, labels), gg);
          });
    }
  }
  std::vector<GradedGraph> out;
  out.reserve(classes.size());
  for (auto& [key, gg] : classes) out.push_back(std::move(gg));
  return out;
}

ConservationReport conservation_sweep(int max_vertices, int max_edges,
                                      int label_max) {
  ConservationReport report;
  std::vector<Graph> corpus = {make_edge_graph()};
  for (int legs = 0; legs <= 2 && legs <= max_edges; ++legs)
    for (const Graph& g :
         enumerate_graphs(max_vertices, max_edges - legs, legs))
      corpus.push_back(g);

  auto fail = [&](const std::string& what) {
    if (report.ok) {
      report.ok = false;
      report.first_violation = what;
    }
  };

  for (const Graph& src : corpus)
    for (const Graph& dst : corpus)
      for (const GraphMap& f : enumerate_maps(src, dst)) {
        ++report.maps_checked;
        const MapClass cls = classify(f);
        if (cls.active) ++report.active_maps;

        // Betti deficit: source Betti content not accounted for by fibers
        // or the target. Labels cancel from the ledger identically, so the
        // deficit is label-independent.
        int fiber_betti = 0;
        for (int w = 0; w < dst.vertex_count(); ++w)
          fiber_betti += fiber_over(f, w).betti_number();
        const int deficit =
            src.betti_number() - fiber_betti - dst.betti_number();
        if (deficit < 0) fail("negative betti deficit");
        if (cls.active && deficit != 0)
          fail("active map with nonzero betti deficit");

        for (int sum = 0; sum <= label_max; ++sum)
          for_each_composition(
              src.vertex_count(), sum, [&](const std::vector<int>& labels) {
                GradedGraph gg{src, labels};
                GradedGraph push = pushforward(f, gg);
                int deleted = 0;
                for (int v = 0; v < src.vertex_count(); ++v)
                  if (f.vertex_map[v] == kInf) deleted += labels[v];
                if (total_genus(gg) !=
                    total_genus(push) + deleted + deficit)
                  fail("genus ledger mismatch");
                if (cls.active && total_genus(gg) != total_genus(push))
                  fail("active map changed total genus");
              });
      }
  return report;
}

}  // namespace heg
