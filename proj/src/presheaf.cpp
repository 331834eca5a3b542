#include "heg/presheaf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heg/errors.hpp"
#include "heg/canonical.hpp"
#include "heg/hom.hpp"

namespace heg {

namespace {

std::string join_tuple(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    out += p;
    out += '\x1f';
  }
  return out;
}

}  // namespace

SegalReport segal_check(const SetPresheaf& P, const Graph& g, size_t bound,
                        const std::vector<bool>* edge_flips) {
  SegalReport report;
  report.graph = g;

  const int V = g.vertex_count();
  const int E = g.edge_count();
  auto first_arc = [&](int e) {
    return 2 * e + (edge_flips && (*edge_flips)[e] ? 1 : 0);
  };

  // Restriction of a corolla element to one leg: the edge value read with
  // the corresponding graph arc first.
  std::vector<std::vector<GraphMap>> leg_restrictions(V);
  std::vector<GraphMap> rho_v;
  std::vector<std::vector<int>> arcs(V);
  for (int v = 0; v < V; ++v) {
    rho_v.push_back(rho_vertex(g, v));
    arcs[v] = g.arcs_at(v);
    const Graph corolla = make_corolla(g.valence(v));
    for (size_t p = 0; p < arcs[v].size(); ++p)
      leg_restrictions[v].push_back(rho_arc(corolla, 2 * static_cast<int>(p)));
  }
  auto restrict_at = [&](int v, int arc, const std::string& x) {
    const size_t p =
        std::find(arcs[v].begin(), arcs[v].end(), arc) - arcs[v].begin();
    return P.act(leg_restrictions[v][p], x);
  };

  // The image of P(g) under the Segal comparison.
  const std::vector<std::string> X = P.elements(g, bound);
  report.lhs_size = X.size();
  std::set<std::string> image;
  std::string duplicate_witness;
  for (const std::string& x : X) {
    std::vector<std::string> tuple;
    for (int v = 0; v < V; ++v) tuple.push_back(P.act(rho_v[v], x));
    for (int e = 0; e < E; ++e)
      tuple.push_back(P.act(rho_arc(g, first_arc(e)), x));
    if (!image.insert(join_tuple(tuple)).second && duplicate_witness.empty())
      duplicate_witness = x;
  }

  // Pullback enumeration: assign corolla values vertex by vertex; an edge
  // value is forced as soon as one endpoint is assigned and checked against
  // the other endpoint once both are.
  std::vector<std::vector<std::string>> C(V);
  for (int v = 0; v < V; ++v)
    C[v] = P.elements(make_corolla(g.valence(v)), bound);
  const GraphMap swap = edge_swap();

  size_t budget = bound * 64 + (1u << 16);
  std::vector<std::string> xs(V), ys(E);
  std::string pullback_witness;

  // Edges become checkable at the later endpoint (INF counts as assigned
  // from the start).
  std::vector<std::vector<int>> edges_ready_at(V + 1);
  for (int e = 0; e < E; ++e) {
    const int v1 = g.incidence(first_arc(e));
    const int v2 = g.incidence(Graph::dagger(first_arc(e)));
    edges_ready_at[std::max(v1, v2) + 1].push_back(e);
  }

  std::function<void(int)> assign = [&](int v) {
    if (v == V) {
      // Free edges (only the edge graph itself has one) range over P(e).
      std::vector<int> free_edges = edges_ready_at[0];
      std::function<void(size_t)> fill = [&](size_t i) {
        if (i == free_edges.size()) {
          ++report.pullback_size;
          std::vector<std::string> tuple(xs.begin(), xs.end());
          tuple.insert(tuple.end(), ys.begin(), ys.end());
          const std::string key = join_tuple(tuple);
          if (!image.count(key) && pullback_witness.empty())
            pullback_witness = key;
          return;
        }
        for (const std::string& y :
             P.elements(make_edge_graph(), bound)) {
          ys[free_edges[i]] = y;
          fill(i + 1);
        }
      };
      fill(0);
      return;
    }
    for (const std::string& x : C[v]) {
      if (budget == 0) throw DomainError("BOUND_EXCEEDED", "search too large");
      --budget;
      xs[v] = x;
      bool consistent = true;
      for (int e : edges_ready_at[v + 1]) {
        const int a1 = first_arc(e), a2 = Graph::dagger(a1);
        const int v1 = g.incidence(a1), v2 = g.incidence(a2);
        std::string y;
        if (v1 != kInf) y = restrict_at(v1, a1, xs[v1]);
        if (v2 != kInf) {
          const std::string other = P.act(swap, restrict_at(v2, a2, xs[v2]));
          if (v1 == kInf)
            y = other;
          else if (y != other) {
            consistent = false;
            break;
          }
        }
        ys[e] = y;
      }
      if (consistent) assign(v + 1);
    }
  };
  assign(0);

  const bool injective = image.size() == X.size();
  report.is_bijection = injective && pullback_witness.empty() &&
                        report.pullback_size == image.size();
  if (!injective)
    report.witness = duplicate_witness;
  else if (!pullback_witness.empty())
    report.witness = pullback_witness;
  return report;
}

SweepReport functoriality_sweep(const SetPresheaf& P, int max_vertices,
                                int max_edges, size_t element_limit) {
  SweepReport report;
  std::vector<Graph> corpus = {make_edge_graph()};
  for (int legs = 0; legs <= 2 && legs <= max_edges; ++legs)
    for (const Graph& g :
         enumerate_graphs(max_vertices, max_edges - legs, legs))
      corpus.push_back(g);

  auto fail = [&](const std::string& what) {
    if (report.ok) {
      report.ok = false;
      report.first_failure = what;
    }
  };

  std::vector<std::vector<std::string>> elements(corpus.size());
  std::vector<bool> usable(corpus.size(), true);
  for (size_t i = 0; i < corpus.size(); ++i) {
    try {
      elements[i] = P.elements(corpus[i], element_limit);
    } catch (const DomainError&) {
      usable[i] = false;
      ++report.skipped;
    }
  }

  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!usable[i]) continue;
    for (const std::string& x : elements[i])
      if (P.act(identity_map(corpus[i]), x) != x)
        fail("act(identity) moved an element of " + P.name);
  }

  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!usable[i]) continue;
    for (size_t j = 0; j < corpus.size(); ++j)
      for (const GraphMap& f : enumerate_maps(corpus[i], corpus[j]))
        for (size_t k = 0; k < corpus.size(); ++k)
          for (const GraphMap& h : enumerate_maps(corpus[j], corpus[k])) {
            ++report.pairs_checked;
            const GraphMap hf = compose(h, f);
            for (const std::string& x : elements[i]) {
              std::string via_composite, via_steps;
              bool composite_defined = true, steps_defined = true;
              try {
                via_composite = P.act(hf, x);
              } catch (const DomainError&) {
                composite_defined = false;
              }
              try {
                via_steps = P.act(h, P.act(f, x));
              } catch (const DomainError&) {
                steps_defined = false;
              }
              if (!composite_defined || !steps_defined) {
                ++report.skipped;
                continue;
              }
              if (via_composite != via_steps)
                fail("act not functorial for " + P.name);
            }
          }
  }
  return report;
}

}  // namespace heg
