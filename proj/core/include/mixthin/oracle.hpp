// Brute-force ground truth on small graphs: exact twin-width by
// iterative-deepening search over partition states, the cheapest possible
// first contraction, and an exhaustive thinness test.  Everything here is
// deliberately slow and simple so the fast paths can be checked against it.
#pragma once

#include "mixthin/graph.hpp"
#include "mixthin/trimatrix.hpp"

namespace mixthin {

struct SearchConfig {
  // Partition states with more groups than this are not memoized (bounds
  // memory; the default covers every state of the target sizes).
  int memoMaxGroups = 12;
  // Total search-node budget across all deepening passes.
  long nodeBudget = 5'000'000;
  RedMode mode = RedMode::natural;
};

struct ExactResult {
  int value = 0;
  // True when the search proved the value optimal; false when the node
  // budget ran out and `value` is only the best known upper bound.
  bool exact = true;
};

// Minimum over all symmetric contraction sequences of the maximum red
// number, counted in cfg.mode.  Iterative deepening over partition states
// with canonical-form memoization; practical up to about 10 vertices.
// Invalid budgets throw InvalidParameters.
ExactResult exact_twinwidth(const Graph& g, const SearchConfig& cfg = {});

// Minimum over all unordered vertex pairs of the red number right after
// contracting that pair, in natural mode: the size of the symmetric
// difference of the two neighbourhoods, the pair itself excluded.  Every
// contraction sequence opens with some pair, so this lower-bounds the
// natural twin-width.  Throws TooSmall when n < 2.
int min_first_contraction_red(const Graph& g);

// True iff some global vertex order plus a partition into at most k parts
// satisfies the suffix condition (b) with every pair relation being the edge
// relation.  Exhaustive over all orders; per order the co-partition
// constraints form a conflict graph whose chromatic number is tested
// exactly.  Throws BudgetExceeded when n > 8.
bool exact_thinness_small(const Graph& g, int k);

}  // namespace mixthin
