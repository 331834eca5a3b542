#include "heg/cyclic.hpp"

#include <algorithm>
#include <numeric>

#include "heg/errors.hpp"

namespace heg {

CyclicOrder CyclicOrder::from_cycle(const std::vector<int>& cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n == 0) throw DomainError("BAD_INDEX", "empty cycle");
  CyclicOrder c;
  c.successor.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int from = cycle[i], to = cycle[(i + 1) % n];
    if (from < 0 || from >= n || c.successor[from] != -1)
      throw DomainError("BAD_INDEX", "not a permutation of 0..n-1");
    c.successor[from] = to;
  }
  return c;
}

std::vector<int> CyclicOrder::canonical_cycle() const {
  std::vector<int> out;
  int cur = 0;
  do {
    out.push_back(cur);
    cur = successor[cur];
  } while (cur != 0);
  return out;
}

std::string CyclicOrder::to_string() const {
  std::string out = "(";
  const std::vector<int> cycle = canonical_cycle();
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cycle[i]);
  }
  return out + ")";
}

std::vector<CyclicOrder> enumerate_cyclic_orders(int n) {
  if (n < 1) throw DomainError("BAD_INDEX", "need at least one element");
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<CyclicOrder> out;
  do {
    std::vector<int> cycle = {0};
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    out.push_back(CyclicOrder::from_cycle(cycle));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

CyclicOrder induce_cyclic_order(const CyclicOrder& c,
                                const FiberedOrderMap& f) {
  if (static_cast<int>(f.fiber_order.size()) != c.size())
    throw DomainError("BAD_INDEX", "fiber count differs from codomain");
  std::vector<bool> seen(f.domain_size, false);
  int covered = 0;
  for (const auto& fiber : f.fiber_order)
    for (int b : fiber) {
      if (b < 0 || b >= f.domain_size || seen[b])
        throw DomainError("BAD_INDEX", "fibers do not partition the domain");
      seen[b] = true;
      ++covered;
    }
  if (covered != f.domain_size)
    throw DomainError("BAD_INDEX", "fibers do not partition the domain");
  if (f.domain_size == 0)
    throw DomainError("EMPTY_RESULT", "all fibers are empty");

  std::vector<int> cycle;
  for (int a : c.canonical_cycle())
    for (int b : f.fiber_order[a]) cycle.push_back(b);
  return CyclicOrder::from_cycle(cycle);
}

CyclicOrder totalorder_to_cyclic(const std::vector<int>& total) {
  std::vector<int> cycle = total;
  cycle.push_back(static_cast<int>(total.size()));
  return CyclicOrder::from_cycle(cycle);
}

SetPresheaf restrict_to_trees(const SetPresheaf& P) {
  SetPresheaf out;
  out.name = P.name + "|trees";
  out.elements = [P](const Graph& g, size_t limit) {
    if (g.betti_number() != 0)
      throw DomainError("NOT_A_TREE", "graph has positive Betti number");
    return P.elements(g, limit);
  };
  out.act = [P](const GraphMap& m, const std::string& x) {
    if (m.source.betti_number() != 0 || m.target.betti_number() != 0)
      throw DomainError("NOT_A_TREE", "map leaves the tree subcategory");
    return P.act(m, x);
  };
  return out;
}

}  // namespace heg
