// Trigraph matrices: symmetric matrices over {0, 1, red} together with the
// vertex groups they describe, plus the symmetric contraction step that merges
// two groups and records disagreements as red entries.  This is the structure
// every contraction sequence in the library is replayed and scored on.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mixthin/graph.hpp"

namespace mixthin {

enum class Cell : std::uint8_t { Zero = 0, One = 1, Red = 2 };

// How red entries are counted per row.  Symmetric counting includes the
// diagonal entry (a group with an internal edge pattern that is neither
// complete-loopless nor empty carries a red diagonal); natural counting
// ignores the diagonal.  The natural count is never larger, and can be
// smaller by exactly one.
enum class RedMode { symmetric, natural };

struct TriMatrix {
  // groups[i] lists the original vertex ids merged into row/column i,
  // ascending.  The key of a group is its smallest member.
  std::vector<std::vector<int>> groups;
  // Row-major size()*size() symmetric cell storage, diagonal included.
  std::vector<Cell> cells;

  int size() const { return static_cast<int>(groups.size()); }
  Cell at(int i, int j) const {
    return cells[static_cast<std::size_t>(i) * groups.size() + j];
  }
  int key(int i) const { return groups[i][0]; }
  // Index of the group whose smallest member is `key`, or -1.
  int index_of_key(int key) const;
};

// Trigraph matrix of a graph: one singleton group per vertex, rows/columns
// arranged by `order` (a permutation of 0..n-1; otherwise InvalidOrder).
// Off-diagonal cells are One/Zero by adjacency, diagonal cells are Zero.
TriMatrix adjacency_trimatrix(const Graph& g, const std::vector<int>& order);

// Merges the groups at indices a and b (SelfContraction if a == b).  The
// merged group replaces index min(a,b); max(a,b) is erased and later indices
// shift down by one.  A merged off-diagonal cell keeps the common value of
// the two old cells and turns Red on disagreement; the merged diagonal keeps
// the common value of both diagonals and the joining cell, Red otherwise.
void contract_symmetric(TriMatrix& m, int a, int b);

// Red entries in row i under the given counting mode.
int row_red_count(const TriMatrix& m, int i, RedMode mode);

// Maximum row_red_count over all rows (0 for an empty matrix).
int red_number(const TriMatrix& m, RedMode mode);

// Record of a contraction sequence: each step names the two groups merged by
// their keys (smallest original vertex id), paired with the red number of the
// matrix right after that step and the maximum over all steps.
struct ContractionTrace {
  std::vector<std::pair<int, int>> steps;
  std::vector<int> redAfterStep;
  int maxRed = 0;
};

}  // namespace mixthin
