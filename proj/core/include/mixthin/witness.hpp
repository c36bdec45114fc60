// Mixed-thin witnesses: a partition of the vertices into k parts, one linear
// order per unordered part pair on the union of the two parts, and a per-pair
// choice of working against the edge set or its complement.  The verifier
// checks the defining order/edge compatibility conditions in all four
// strictness variants.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixthin/graph.hpp"

namespace mixthin {

// Strictness variants, ordered from weakest to strongest:
//   mixedThin            conditions (a) + (b)
//   inversionFree        conditions (a') + (b)
//   proper               conditions (a) + (b) + (c)
//   properInversionFree  conditions (a') + (b) + (c)
// (a)  each part's restriction of a pair order equals the part's own order or
//      its reverse; (a') demands equality; (b) forbids a non-neighbour wedged
//      between a neighbour and its partner from below; (c) the same from
//      above (see verify_witness).
enum class Variant { mixedThin, proper, inversionFree, properInversionFree };

bool variant_requires_c(Variant v);
bool variant_requires_equal_alignment(Variant v);
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // UnknownSymbol if bad

struct MixedThinWitness {
  int k = 0;
  // part[v] in 1..k for every vertex v of the accompanying graph.
  std::vector<int> part;
  // Key (i,j) with i <= j; value = the vertices of V_i ∪ V_j in pair order
  // (for i == j, the internal order of V_i).  Keys whose union is empty may
  // be omitted.
  std::map<std::pair<int, int>, std::vector<int>> orders;
  // Pairs working against the complement edge set; absent pairs use E.
  std::set<std::pair<int, int>> complementPairs;
  Variant variant = Variant::properInversionFree;
};

struct Violation {
  std::string condition;  // "a", "a'", "b" or "c"
  int i = 0, j = 0;       // the part pair the violation lives in
  std::vector<int> vertices;  // concrete witnessing pair or triple
};

struct VerificationReport {
  bool accepted = false;
  std::vector<Violation> violations;  // empty iff accepted
};

// Classification of one permutation against another over the same ground set
// (DomainMismatch otherwise).  Lists of size <= 1 classify as equal.
enum class AlignmentKind { equal, reversed, neither };
AlignmentKind alignment(const std::vector<int>& o1, const std::vector<int>& o2);

// Checks the witness against the graph.  Structural defects (part values out
// of range, orders that are not permutations of the right sets) throw
// InvalidWitness; semantic condition failures come back as violations.
//
// Accepted iff for every pair i <= j:
//  - (a/a') the restriction of the pair order to V_i (and to V_j) is aligned
//    with (equal to, for inversion-free variants) the part's internal order;
//    vacuous for i == j;
//  - (b) whenever u < v < w in the pair order, u and v lie in one part, w is
//    a partner of both (the other part for i != j, the same part for i == j),
//    and {u,w} is in the pair's edge relation, then so is {v,w};
//  - (c), proper variants only: whenever u < v < w, v and w in one part and
//    u a partner, and {u,w} is in the relation, then so is {u,v}.
// The pair's edge relation is graph adjacency, complemented for pairs listed
// in complementPairs.
VerificationReport verify_witness(const Graph& g, const MixedThinWitness& w);

// --- helpers shared by the modules that consume accepted witnesses ---

// Normalized order key for an unordered part pair.
std::pair<int, int> pair_key(int i, int j);

// The stored pair order for {i, j} (empty if the key is absent).
const std::vector<int>& pair_order(const MixedThinWitness& w, int i, int j);

// The sublist of `order` consisting of the vertices in part p.
std::vector<int> restrict_to_part(const MixedThinWitness& w,
                                  const std::vector<int>& order, int p);

// Membership of {u, v} in the pair's edge relation (adjacency XOR
// complement flag for the pair {i, j}).
bool pair_edge(const Graph& g, const MixedThinWitness& w, int i, int j, int u,
               int v);

// Vertices of part p in internal order (the (p,p) order).
const std::vector<int>& part_members(const MixedThinWitness& w, int p);

}  // namespace mixthin
