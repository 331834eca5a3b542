#include "heg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "heg/errors.hpp"

namespace heg {
namespace {

// Union-find over kVertices + arcs.
struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

Graph Graph::make(int vertex_count, std::vector<int> incidence) {
  if (vertex_count < 0) throw DomainError("BAD_INDEX", "negative vertex count");
  if (incidence.size() % 2 != 0)
    throw DomainError("BAD_INDEX", "odd number of arcs");
  for (int target : incidence) {
    if (target != kInf && (target < 0 || target >= vertex_count))
      throw DomainError("BAD_INDEX",
                        "arc incidence " + std::to_string(target) +
                            " out of range");
  }
  if (vertex_count == 0 && incidence.empty())
    throw DomainError("EMPTY", "the empty graph is not a graph");

  // One class on A |_| V under a ~ a-dagger and a ~ t(a).
  const int arcs = static_cast<int>(incidence.size());
  UnionFind uf(vertex_count + arcs);
  for (int a = 0; a < arcs; a += 2) uf.unite(vertex_count + a, vertex_count + a + 1);
  for (int a = 0; a < arcs; ++a) {
    if (incidence[a] != kInf) uf.unite(vertex_count + a, incidence[a]);
  }
  int root = uf.find(0 < vertex_count ? 0 : vertex_count);
  for (int v = 0; v < vertex_count; ++v)
    if (uf.find(v) != root) throw DomainError("DISCONNECTED", "vertex not reachable");
  for (int a = 0; a < arcs; ++a)
    if (uf.find(vertex_count + a) != root)
      throw DomainError("DISCONNECTED", "arc not reachable");

  return Graph(vertex_count, std::move(incidence));
}

EdgeKind Graph::edge_kind(int edge) const {
  const bool lo = incidence_[2 * edge] != kInf;
  const bool hi = incidence_[2 * edge + 1] != kInf;
  if (lo && hi) return EdgeKind::Internal;
  if (lo || hi) return EdgeKind::Leg;
  return EdgeKind::Free;
}

int Graph::internal_edge_count() const {
  int n = 0;
  for (int e = 0; e < edge_count(); ++e)
    if (edge_kind(e) == EdgeKind::Internal) ++n;
  return n;
}

int Graph::leg_count() const {
  int n = 0;
  for (int e = 0; e < edge_count(); ++e)
    if (edge_kind(e) == EdgeKind::Leg) ++n;
  return n;
}

bool Graph::is_loop(int edge) const {
  return incidence_[2 * edge] != kInf &&
         incidence_[2 * edge] == incidence_[2 * edge + 1];
}

std::vector<int> Graph::arcs_at(int vertex) const {
  std::vector<int> out;
  for (int a = 0; a < arc_count(); ++a)
    if (incidence_[a] == vertex) out.push_back(a);
  return out;
}

int Graph::valence(int vertex) const {
  int n = 0;
  for (int a = 0; a < arc_count(); ++a)
    if (incidence_[a] == vertex) ++n;
  return n;
}

int Graph::betti_number() const {
  if (vertex_count_ == 0) return 0;
  return internal_edge_count() - vertex_count_ + 1;
}

bool Graph::is_linear() const {
  if (vertex_count_ == 0) return true;  // the edge graph is l_0
  if (betti_number() != 0 || leg_count() != 2) return false;
  for (int v = 0; v < vertex_count_; ++v)
    if (valence(v) != 2) return false;
  return true;
}

Graph make_edge_graph() { return Graph::make(0, {kInf, kInf}); }

Graph make_corolla(int legs) {
  if (legs < 0) throw DomainError("BAD_INDEX", "negative leg count");
  std::vector<int> inc;
  for (int i = 0; i < legs; ++i) {
    inc.push_back(0);
    inc.push_back(kInf);
  }
  return Graph::make(1, inc);
}

Graph make_linear(int vertices) {
  if (vertices < 0) throw DomainError("BAD_INDEX", "negative vertex count");
  if (vertices == 0) return make_edge_graph();
  std::vector<int> inc;
  // Edge i runs from vertex i-1 (or inf) to vertex i (or inf).
  for (int i = 0; i <= vertices; ++i) {
    inc.push_back(i == 0 ? kInf : i - 1);
    inc.push_back(i == vertices ? kInf : i);
  }
  return Graph::make(vertices, inc);
}

Graph make_loops(int loops) {
  if (loops < 0) throw DomainError("BAD_INDEX", "negative loop count");
  std::vector<int> inc(2 * loops, 0);
  return Graph::make(1, inc);
}

Graph make_theta() { return Graph::make(2, {0, 1, 0, 1, 0, 1}); }

namespace {

bool has_directed_cycle(const Graph& g, const Orientation& o) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> succ(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge_kind(e) != EdgeKind::Internal) continue;
    const int out = o.out_arc(e);
    succ[g.incidence(out)].push_back(g.incidence(Graph::dagger(out)));
  }
  // 0 = unseen, 1 = on stack, 2 = done.
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : succ[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

}  // namespace

StructuralPredicates structural_predicates(const Graph& g,
                                           const Orientation* o) {
  StructuralPredicates p;
  p.is_tree = g.is_tree();
  p.is_linear = g.is_linear();
  if (o != nullptr) {
    if (static_cast<int>(o->out_low.size()) != g.edge_count())
      throw DomainError("BAD_INDEX", "orientation size mismatch");
    p.is_directed_acyclic = !has_directed_cycle(g, *o);
  }
  return p;
}

}  // namespace heg
