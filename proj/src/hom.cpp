#include "heg/hom.hpp"

#include <algorithm>
#include <functional>

#include "heg/errors.hpp"

namespace heg {
namespace {

bool passes(const GraphMap& m, MapFilter filter) {
  if (filter == MapFilter::All) return true;
  MapClass c = classify(m);
  switch (filter) {
    case MapFilter::Inert:
      return c.inert;
    case MapFilter::Active:
      return c.active;
    case MapFilter::QuasiCollapse:
      return c.quasi_collapse;
    case MapFilter::Isomorphism:
      return c.inert && c.active;
    default:
      return true;
  }
}

}  // namespace

std::vector<GraphMap> enumerate_maps(const Graph& src, const Graph& dst,
                                     MapFilter filter) {
  if (src.vertex_count() > 6 || dst.vertex_count() > 6 ||
      src.edge_count() > 8 || dst.edge_count() > 8)
    throw DomainError("TOO_LARGE", "hom-set enumeration beyond desk scale");

  std::vector<GraphMap> out;
  GraphMap m{src, dst, std::vector<int>(src.vertex_count(), kInf),
             std::vector<int>(dst.arc_count(), 0)};

  // Odometer over vertex images (kInf first, then ascending) and, inside,
  // over the image of each target edge's even arc.
  std::function<void(int)> arcs_loop = [&](int edge) {
    if (edge == dst.edge_count()) {
      if (is_valid_map(m) && passes(m, filter)) out.push_back(m);
      return;
    }
    for (int a = 0; a < src.arc_count(); ++a) {
      m.arc_map[2 * edge] = a;
      m.arc_map[2 * edge + 1] = Graph::dagger(a);
      arcs_loop(edge + 1);
    }
  };
  std::function<void(int)> verts_loop = [&](int v) {
    if (v == src.vertex_count()) {
      arcs_loop(0);
      return;
    }
    for (int w = kInf; w < dst.vertex_count(); ++w) {
      m.vertex_map[v] = w;
      verts_loop(v + 1);
    }
  };
  if (dst.arc_count() > 0 && src.arc_count() == 0) return out;
  verts_loop(0);
  return out;
}

std::pair<GraphMap, GraphMap> factorize(const GraphMap& m,
                                        const std::vector<int>* edge_order) {
  const Graph& src = m.source;
  const Graph& dst = m.target;

  // Retained vertices survive into the middle graph.
  std::vector<int> renumber(src.vertex_count(), kInf);
  int kept = 0;
  for (int v = 0; v < src.vertex_count(); ++v)
    if (m.vertex_map[v] != kInf) renumber[v] = kept++;

  std::vector<int> order(src.edge_count());
  if (edge_order != nullptr) {
    order = *edge_order;
  } else {
    for (int e = 0; e < src.edge_count(); ++e) order[e] = e;
  }

  std::vector<int> mid_incidence;
  std::vector<int> inert_arc_map;                       // A_mid -> A_src
  std::vector<int> active_arc_map(dst.arc_count(), -1); // A_dst -> A_mid

  auto add_mid_edge = [&](int head_end, int tail_end, int a) {
    const int x = static_cast<int>(mid_incidence.size());
    mid_incidence.push_back(head_end);
    mid_incidence.push_back(tail_end);
    inert_arc_map.push_back(a);
    inert_arc_map.push_back(Graph::dagger(a));
    return x;
  };

  for (int e : order) {
    const int a = 2 * e;
    const int head = src.incidence(a);
    const int tail = src.incidence(Graph::dagger(a));
    const std::vector<int> path = subdivision_path(m, a);

    if (path.empty()) {
      if (m.map_vertex(head) == kInf) continue;  // deleted edge
      add_mid_edge(renumber[head], renumber[tail], a);
      continue;
    }

    // Split the path at crossings of the basepoint; each run becomes one
    // middle edge, cut ends land at kInf.
    std::vector<std::pair<int, int>> runs;
    int from = 0;
    for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i) {
      if (dst.incidence(path[i]) == kInf) {
        runs.emplace_back(from, i);
        from = i + 1;
      }
    }
    runs.emplace_back(from, static_cast<int>(path.size()) - 1);

    for (size_t s = 0; s < runs.size(); ++s) {
      const bool first = s == 0;
      const bool last = s + 1 == runs.size();
      const int tail_end =
          (first && tail != kInf && renumber[tail] != kInf) ? renumber[tail]
                                                            : kInf;
      const int head_end =
          (last && head != kInf && renumber[head] != kInf) ? renumber[head]
                                                           : kInf;
      const int x = add_mid_edge(head_end, tail_end, a);
      for (int i = runs[s].first; i <= runs[s].second; ++i) {
        active_arc_map[path[i]] = x;
        active_arc_map[Graph::dagger(path[i])] = Graph::dagger(x);
      }
    }
  }

  Graph mid = Graph::make(kept, mid_incidence);

  GraphMap inert{src, mid, {}, inert_arc_map};
  inert.vertex_map = renumber;

  GraphMap active{mid, dst, {}, active_arc_map};
  active.vertex_map.resize(kept);
  for (int v = 0; v < src.vertex_count(); ++v)
    if (renumber[v] != kInf) active.vertex_map[renumber[v]] = m.vertex_map[v];

  validate_map(inert);
  validate_map(active);
  return {inert, active};
}

}  // namespace heg
