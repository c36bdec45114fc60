// Contraction engine: turns an accepted witness into a full symmetric
// contraction sequence whose red number never exceeds 9k, by merging
// consecutive groups of the largest part while staircase boundary bookkeeping
// keeps the per-merge damage small, then finishing with a fixed-order endgame
// once few groups remain.  A pure replayer re-checks any trace independently.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mixthin/graph.hpp"
#include "mixthin/trimatrix.hpp"
#include "mixthin/trisection.hpp"
#include "mixthin/witness.hpp"

namespace mixthin {

struct EngineState {
  int k = 0;
  TriMatrix matrix;
  std::vector<int> order;  // global row order: parts 1..k by internal order
  std::map<int, int> partOf;  // group key -> part (cross-part merges erase)
  // bands[p] lists part p's group keys in internal (band) order; index 0
  // unused so parts are addressed 1..k as everywhere else.
  std::vector<std::vector<int>> bands;
  // One trisection per unordered part pair, keyed (i,j) with i <= j; rows are
  // part i bands, columns part j bands, in the frame of the internal orders
  // (so mixed alignments yield trbl staircases).
  std::map<std::pair<int, int>, Trisection> trisections;
  std::map<int, int> horizontal;  // group key -> cached horizontal value
  // Boundary bookkeeping is maintained while the engine merges consecutive
  // bands; the endgame merges arbitrary groups and drops it.
  bool bookkeeping = true;
};

// Matrix, bands and boundary bookkeeping for the uncontracted graph.  Throws
// InvalidWitness unless verify_witness accepts (g,w) with condition (c)
// enforced.
EngineState initial_engine_state(const Graph& g, const MixedThinWitness& w);

// Horizontal value of the row group with key q: over the 2k boundaries
// crossing that row, the length of the upper boundary's run hugging the band
// from above plus the lower boundary's run hugging it from below (for pairs
// where q's part is the column side, the mirrored vertical runs).  Recomputed
// from the trisections; requires bookkeeping to still be live.
int horizontal_value(const EngineState& s, int q);

// Full contraction sequence (n-1 symmetric merges) with maxRed <= 9k.  While
// more than 8k groups remain: merge the consecutive band pair of the largest
// part minimizing the combined horizontal value (ties: smaller part index,
// then smaller band index); afterwards: fixed endgame order, lowest two group
// keys, same part first.  redAfterStep is recorded in symmetric mode.  With
// debugInvariants set, the red-alignment, per-row red bound, and
// untouched-row increment invariants are checked after every main-phase step.
ContractionTrace build_sequence(const Graph& g, const MixedThinWitness& w,
                                bool debugInvariants = false);

// Independent replay: rebuilds the matrix from (g, order) and applies the
// trace's steps by group key.  True iff every post-merge red number in the
// given mode is <= bound and, when the trace carries redAfterStep values,
// they and maxRed match the recount exactly.  Unknown or equal step keys
// throw MalformedTrace; partial traces are fine.
bool verify_sequence(const Graph& g, const std::vector<int>& order,
                     const ContractionTrace& trace, int bound, RedMode mode);

}  // namespace mixthin
