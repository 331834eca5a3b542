#pragma once

#include <string>
#include <vector>

#include "heg/presheaf.hpp"

namespace heg {

// A cyclic order on {0..n-1}, stored as the successor map of a single
// n-cycle. Canonical form: the rotation starting at element 0.
struct CyclicOrder {
  std::vector<int> successor;

  // Throws DomainError (BAD_INDEX) unless the input is a single cycle
  // visiting each element once.
  static CyclicOrder from_cycle(const std::vector<int>& cycle);

  int size() const { return static_cast<int>(successor.size()); }
  std::vector<int> canonical_cycle() const;
  std::string to_string() const;

  bool operator==(const CyclicOrder&) const = default;
};

// All cyclic orders on {0..n-1}, in canonical-form order; there are (n-1)!.
std::vector<CyclicOrder> enumerate_cyclic_orders(int n);

// A map of finite sets B -> A with a total order on each fiber.
struct FiberedOrderMap {
  int domain_size = 0;                        // |B|
  std::vector<std::vector<int>> fiber_order;  // per a in A, ordered fiber
};

// Blows up each element of A into its totally ordered fiber. Throws
// EMPTY_RESULT when every fiber is empty, BAD_INDEX on a malformed map.
CyclicOrder induce_cyclic_order(const CyclicOrder& c,
                                const FiberedOrderMap& f);

// Closes a total order on {0..n-1} into a cyclic order on {0..n} by
// appending the new element n after the last; a bijection onto the cyclic
// orders on n+1 elements.
CyclicOrder totalorder_to_cyclic(const std::vector<int>& total);

// Restricts a presheaf to the full subcategory of trees (Betti number 0);
// evaluation or action at a non-tree throws NOT_A_TREE.
SetPresheaf restrict_to_trees(const SetPresheaf& P);

}  // namespace heg
