#include "heg/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "heg/errors.hpp"

namespace heg {
namespace {

constexpr char kInfByte = 0x7e;

// Serialize under the vertex relabelling perm (perm[v] = new index).
std::string encode_with(const Graph& g, const std::vector<int>& perm,
                        const std::vector<int>* labels) {
  std::vector<std::pair<char, char>> edges;
  edges.reserve(g.edge_count());
  auto mapped = [&](int arc) {
    const int v = g.incidence(arc);
    return v == kInf ? kInfByte : static_cast<char>(perm[v]);
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    char x = mapped(2 * e);
    char y = mapped(2 * e + 1);
    if (x > y) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());

  std::string out;
  out.push_back(static_cast<char>(g.vertex_count()));
  for (auto [x, y] : edges) {
    out.push_back(x);
    out.push_back(y);
  }
  if (labels != nullptr) {
    out.push_back(';');
    std::vector<int> relabelled(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      relabelled[perm[v]] = (*labels)[v];
    for (int l : relabelled) out.push_back(static_cast<char>(l));
  }
  return out;
}

std::string canonical_impl(const Graph& g, const std::vector<int>* labels) {
  const int n = g.vertex_count();
  if (n > 12)
    throw DomainError("TOO_LARGE", "canonicalization beyond desk scale");

  // Degree-signature groups: only permutations preserving the signature can
  // realize an isomorphism, so the search stays within them.
  std::vector<std::tuple<int, int, int, int>> sig(n);
  for (int v = 0; v < n; ++v) {
    int legs = 0, loops = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e) && g.incidence(2 * e) == v) ++loops;
      if (g.edge_kind(e) == EdgeKind::Leg &&
          (g.incidence(2 * e) == v || g.incidence(2 * e + 1) == v))
        ++legs;
    }
    sig[v] = {g.valence(v), legs, loops, labels ? (*labels)[v] : 0};
  }

  // Group vertices into signature blocks; blocks occupy fixed position
  // ranges and only within-block orderings are searched.
  std::vector<std::vector<int>> blocks;
  {
    std::map<std::tuple<int, int, int, int>, std::vector<int>> by_sig;
    for (int v = 0; v < n; ++v) by_sig[sig[v]].push_back(v);
    for (auto& [key, vs] : by_sig) blocks.push_back(vs);
  }

  std::string best;
  std::vector<int> perm(n);
  bool more = true;
  while (more) {
    int pos = 0;
    for (const auto& block : blocks)
      for (int v : block) perm[v] = pos++;
    std::string key = encode_with(g, perm, labels);
    if (best.empty() || key < best) best = std::move(key);

    // Odometer over the blocks.
    more = false;
    for (auto& block : blocks) {
      if (std::next_permutation(block.begin(), block.end())) {
        more = true;
        break;
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_encoding(const Graph& g) {
  return canonical_impl(g, nullptr);
}

std::string canonical_encoding_labelled(const Graph& g,
                                        const std::vector<int>& labels) {
  return canonical_impl(g, &labels);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return canonical_encoding(a) == canonical_encoding(b);
}

namespace {

// Multisets of `count` items drawn from `types` (indices, non-decreasing).
void multisets(int types, int count, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& emit) {
  if (count == 0) {
    emit(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back();
  for (int t = start; t < types; ++t) {
    cur.push_back(t);
    multisets(types, count - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Graph> enumerate_graphs(int max_vertices, int max_internal_edges,
                                    int legs) {
  if (max_vertices < 0 || max_internal_edges < 0 || legs < 0)
    throw DomainError("BAD_INDEX", "negative bound");

  std::map<std::string, Graph> classes;
  if (max_vertices == 0) {
    if (legs == 0) classes.emplace(canonical_encoding(make_edge_graph()),
                                   make_edge_graph());
  } else {
    for (int n = 1; n <= max_vertices; ++n) {
      // Internal edge slots: unordered pairs (i <= j) of vertices.
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) slots.emplace_back(i, j);

      for (int m = 0; m <= max_internal_edges; ++m) {
        std::vector<int> edge_pick;
        multisets(static_cast<int>(slots.size()), m, edge_pick,
                  [&](const std::vector<int>& edges) {
                    std::vector<int> leg_pick;
                    multisets(n, legs, leg_pick,
                              [&](const std::vector<int>& leg_at) {
                                std::vector<int> inc;
                                for (int s : edges) {
                                  inc.push_back(slots[s].first);
                                  inc.push_back(slots[s].second);
                                }
                                for (int v : leg_at) {
                                  inc.push_back(v);
                                  inc.push_back(kInf);
                                }
                                try {
                                  Graph g = Graph::make(n, std::move(inc));
                                  classes.emplace(canonical_encoding(g), g);
                                } catch (const DomainError&) {
                                  // disconnected candidate
                                }
                              });
                  });
      }
    }
  }

  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace heg
