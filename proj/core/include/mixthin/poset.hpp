// Finite posets with named unary marks, stored as a dense reflexive-transitive
// relation.  Provides closure from an arbitrary acyclic pair set, cover pairs,
// and a minimum chain cover (whose size is the poset's width).
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mixthin {

struct MarkedPoset {
  int n = 0;
  // le[u][v] == true iff u ⪯ v; reflexive, antisymmetric, transitive.
  std::vector<std::vector<bool>> le;
  // Mark name → ascending element ids.  Carried opaquely by the order
  // algorithms; the transduction layer gives marks their meaning.
  std::map<std::string, std::vector<int>> marks;
};

struct ChainDecomposition {
  // Disjoint cover of 0..n-1; each chain ascending in le.
  std::vector<std::vector<int>> chains;
};

// Reflexive-transitive closure of `pairs` over elements 0..n-1.  Throws
// NotAntisymmetric if the pairs close into a cycle through distinct elements,
// ValidationError on out-of-range ids.  Marks start empty.
MarkedPoset transitive_closure(const std::vector<std::pair<int, int>>& pairs,
                               int n);

// All (u, v) with u ≺ v and no z strictly between; ascending lexicographic.
std::vector<std::pair<int, int>> cover_pairs(const MarkedPoset& p);

// Minimum chain cover via bipartite matching on the strict order, with a
// deterministic ascending-id search order.  By Dilworth duality its size is
// the maximum antichain size.  Chains are listed by ascending first element.
ChainDecomposition chain_cover(const MarkedPoset& p);

// Size of a minimum chain cover = maximum antichain size.
int width(const MarkedPoset& p);

}  // namespace mixthin
