#include "heg/graph_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "heg/errors.hpp"

namespace heg {
namespace {

std::vector<int> arc_preimage(const GraphMap& m, int source_arc) {
  std::vector<int> pre;
  for (int b = 0; b < m.target.arc_count(); ++b)
    if (m.arc_map[b] == source_arc) pre.push_back(b);
  return pre;
}

bool path_search(const Graph& g, std::vector<int>& arcs,
                 std::vector<bool>& used, int used_count, int cur, int v_end,
                 std::vector<int>& out) {
  if (used_count == static_cast<int>(arcs.size())) return cur == v_end;
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (used[i]) continue;
    const int b = arcs[i];
    if (g.incidence(Graph::dagger(b)) != cur) continue;
    const int next = g.incidence(b);
    const bool last = used_count + 1 == static_cast<int>(arcs.size());
    if (!last && next != kInf && g.valence(next) != 2) continue;
    used[i] = true;
    out.push_back(b);
    if (path_search(g, arcs, used, used_count + 1, next, v_end, out))
      return true;
    out.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> order_as_bivalent_path(
    const Graph& g, const std::vector<int>& arcs, int v_start, int v_end) {
  if (arcs.empty()) {
    if (v_start == v_end) return std::vector<int>{};
    return std::nullopt;
  }
  std::vector<int> set = arcs;
  std::vector<bool> used(set.size(), false);
  std::vector<int> out;
  if (path_search(g, set, used, 0, v_start, v_end, out)) return out;
  return std::nullopt;
}

std::vector<int> subdivision_path(const GraphMap& m, int source_arc) {
  const int tail = m.source.incidence(Graph::dagger(source_arc));
  const int head = m.source.incidence(source_arc);
  auto path = order_as_bivalent_path(m.target, arc_preimage(m, source_arc),
                                     m.map_vertex(tail), m.map_vertex(head));
  if (!path) throw DomainError("BAD_PATH", "map is not valid");
  return *path;
}

int FiberGraph::betti_number() const {
  if (vertices.empty()) return 0;
  return static_cast<int>(collapsed_edges.size()) -
         static_cast<int>(vertices.size()) + 1;
}

FiberGraph fiber_over(const GraphMap& m, int target_vertex) {
  FiberGraph f;
  for (int v = 0; v < m.source.vertex_count(); ++v)
    if (m.vertex_map[v] == target_vertex) f.vertices.push_back(v);
  for (int e = 0; e < m.source.edge_count(); ++e) {
    if (m.source.edge_kind(e) != EdgeKind::Internal) continue;
    if (!arc_preimage(m, 2 * e).empty()) continue;
    if (m.vertex_map[m.source.incidence(2 * e)] == target_vertex &&
        m.vertex_map[m.source.incidence(2 * e + 1)] == target_vertex)
      f.collapsed_edges.push_back(e);
  }
  return f;
}

const GraphMap& validate_map(const GraphMap& m) {
  if (static_cast<int>(m.vertex_map.size()) != m.source.vertex_count() ||
      static_cast<int>(m.arc_map.size()) != m.target.arc_count())
    throw DomainError("BAD_INDEX", "map component size mismatch");
  for (int w : m.vertex_map)
    if (w != kInf && (w < 0 || w >= m.target.vertex_count()))
      throw DomainError("BAD_INDEX", "vertex image out of range");
  for (int a : m.arc_map)
    if (a < 0 || a >= m.source.arc_count())
      throw DomainError("BAD_INDEX", "arc image out of range");

  // (2) dagger equivariance
  for (int b = 0; b < m.target.arc_count(); b += 2)
    if (m.arc_map[b + 1] != Graph::dagger(m.arc_map[b]))
      throw DomainError("DAGGER_VIOLATION",
                        "arc map does not commute with the involution");

  // (3) each arc preimage is a bivalent path with the right endpoints
  for (int a = 0; a < m.source.arc_count(); ++a) {
    const int tail = m.map_vertex(m.source.incidence(Graph::dagger(a)));
    const int head = m.map_vertex(m.source.incidence(a));
    if (!order_as_bivalent_path(m.target, arc_preimage(m, a), tail, head))
      throw DomainError("BAD_PATH", "arc " + std::to_string(a) +
                                        " has no bivalent path preimage");
  }

  // (4) fibers over hit target vertices are connected
  for (int w = 0; w < m.target.vertex_count(); ++w) {
    FiberGraph fib = fiber_over(m, w);
    if (fib.vertices.empty()) continue;
    std::vector<int> comp(m.source.vertex_count(), -1);
    for (int v : fib.vertices) comp[v] = v;
    std::function<int(int)> find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int e : fib.collapsed_edges)
      comp[find(m.source.incidence(2 * e))] =
          find(m.source.incidence(2 * e + 1));
    const int root = find(fib.vertices.front());
    for (int v : fib.vertices)
      if (find(v) != root)
        throw DomainError("FIBER_DISCONNECTED",
                          "fiber over vertex " + std::to_string(w) +
                              " is not connected");
  }

  // (5) unhit target vertices are bivalent interior points of exactly one
  // subdivision path
  std::vector<bool> hit(m.target.vertex_count(), false);
  for (int w : m.vertex_map)
    if (w != kInf) hit[w] = true;
  std::vector<int> interior_count(m.target.vertex_count(), 0);
  for (int e = 0; e < m.source.edge_count(); ++e) {
    const int a = 2 * e;
    auto path = order_as_bivalent_path(
        m.target, arc_preimage(m, a),
        m.map_vertex(m.source.incidence(Graph::dagger(a))),
        m.map_vertex(m.source.incidence(a)));
    for (size_t i = 0; i + 1 < path->size(); ++i) {
      const int v = m.target.incidence((*path)[i]);
      if (v != kInf) ++interior_count[v];
    }
  }
  for (int w = 0; w < m.target.vertex_count(); ++w) {
    if (hit[w]) continue;
    if (m.target.valence(w) != 2 || interior_count[w] != 1)
      throw DomainError("ORPHAN_TARGET_VERTEX",
                        "unhit vertex " + std::to_string(w) +
                            " is not interior to exactly one path");
  }
  return m;
}

bool is_valid_map(const GraphMap& m) {
  try {
    validate_map(m);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

GraphMap identity_map(const Graph& g) {
  GraphMap m{g, g, {}, {}};
  m.vertex_map.resize(g.vertex_count());
  std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0);
  m.arc_map.resize(g.arc_count());
  std::iota(m.arc_map.begin(), m.arc_map.end(), 0);
  return m;
}

GraphMap compose(const GraphMap& g, const GraphMap& f) {
  if (f.target != g.source)
    throw DomainError("MISMATCH", "maps are not composable");
  GraphMap h{f.source, g.target, {}, {}};
  h.vertex_map.resize(f.source.vertex_count());
  for (int v = 0; v < f.source.vertex_count(); ++v)
    h.vertex_map[v] = g.map_vertex(f.vertex_map[v]);
  h.arc_map.resize(g.target.arc_count());
  for (int b = 0; b < g.target.arc_count(); ++b)
    h.arc_map[b] = f.arc_map[g.arc_map[b]];
  return validate_map(h), h;
}

MapClass classify(const GraphMap& m) {
  MapClass c;

  std::vector<int> preimages(m.target.vertex_count(), 0);
  for (int w : m.vertex_map)
    if (w != kInf) ++preimages[w];

  c.quasi_collapse = std::all_of(preimages.begin(), preimages.end(),
                                 [](int k) { return k >= 1; });

  c.inert = std::all_of(preimages.begin(), preimages.end(),
                        [](int k) { return k == 1; });
  if (c.inert) {
    for (int a = 0; a < m.source.arc_count() && c.inert; ++a)
      if (arc_preimage(m, a).empty() &&
          m.map_vertex(m.source.incidence(a)) != kInf)
        c.inert = false;
  }

  c.active = std::none_of(m.vertex_map.begin(), m.vertex_map.end(),
                          [](int w) { return w == kInf; });
  if (c.active) {
    for (int e = 0; e < m.source.edge_count() && c.active; ++e) {
      auto path = subdivision_path(m, 2 * e);
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (m.target.incidence(path[i]) == kInf) {
          c.active = false;
          break;
        }
    }
  }
  return c;
}

bool is_isomorphism_map(const GraphMap& m) {
  MapClass c = classify(m);
  return c.inert && c.active;
}

GraphMap rho_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw DomainError("BAD_VERTEX", "no such vertex");
  const std::vector<int> incident = g.arcs_at(v);
  GraphMap m{g, make_corolla(static_cast<int>(incident.size())), {}, {}};
  m.vertex_map.assign(g.vertex_count(), kInf);
  m.vertex_map[v] = 0;
  m.arc_map.resize(m.target.arc_count());
  for (size_t i = 0; i < incident.size(); ++i) {
    m.arc_map[2 * i] = incident[i];
    m.arc_map[2 * i + 1] = Graph::dagger(incident[i]);
  }
  return validate_map(m), m;
}

GraphMap rho_arc(const Graph& g, int a) {
  if (a < 0 || a >= g.arc_count())
    throw DomainError("BAD_INDEX", "no such arc");
  GraphMap m{g, make_edge_graph(), {}, {}};
  m.vertex_map.assign(g.vertex_count(), kInf);
  m.arc_map = {a, Graph::dagger(a)};
  return validate_map(m), m;
}

GraphMap edge_swap() {
  GraphMap m{make_edge_graph(), make_edge_graph(), {}, {1, 0}};
  return m;
}

}  // namespace heg
