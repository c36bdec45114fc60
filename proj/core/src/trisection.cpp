// Trisection computation and verification.  compute_trisection works in the
// normalized frame (reversed alignments pre-reversed, complemented relations
// complemented away) so its staircases always run top-left to bottom-right;
// the middle region hugs each row's run of ones and empty rows collapse both
// boundaries as far left as the staircase allows.  Main-diagonal cells are
// wildcards: a run may absorb an adjacent diagonal cell when monotonicity
// needs it, and leftmost canonicalization absorbs one on the left whenever
// that lowers the lower boundary.
#include "mixthin/trisection.hpp"

#include <algorithm>
#include <optional>

#include "mixthin/errors.hpp"

namespace mixthin {

std::string orientation_name(Orientation o) {
  return o == Orientation::tlbr ? "tlbr" : "trbl";
}

Orientation orientation_from_name(const std::string& name) {
  if (name == "tlbr") return Orientation::tlbr;
  if (name == "trbl") return Orientation::trbl;
  throw UnknownSymbol("unknown orientation name: " + name);
}

Region region_of(const Trisection& t, int row, int col) {
  if (row < 1 || row > t.rows || col < 1 || col > t.cols)
    throw ShapeError("region_of: cell outside the trisected submatrix");
  if (col <= t.lower[row]) return Region::low;
  if (col <= t.upper[row]) return Region::mid;
  return Region::high;
}

namespace {

// Structural validity of the trisection object itself, independent of any
// cell matrix: array lengths, value range, corner pin, staircase direction,
// and the boundaries never crossing.
void check_trisection_shape(const Trisection& t) {
  if (t.rows < 0 || t.cols < 0)
    throw ShapeError("trisection has negative dimensions");
  if (static_cast<int>(t.lower.size()) != t.rows + 1 ||
      static_cast<int>(t.upper.size()) != t.rows + 1)
    throw ShapeError("trisection boundary arrays must have rows+1 entries");
  const bool tlbr = t.orientation == Orientation::tlbr;
  const int corner = tlbr ? 0 : t.cols;
  if (t.lower[0] != corner || t.upper[0] != corner)
    throw ValidationError("trisection boundaries must start at the entry corner");
  for (int r = 0; r <= t.rows; ++r) {
    if (t.lower[r] < 0 || t.upper[r] > t.cols || t.lower[r] > t.upper[r])
      throw ValidationError("trisection boundaries out of range or crossing");
    if (r > 0) {
      const bool ok = tlbr ? (t.lower[r] >= t.lower[r - 1] &&
                              t.upper[r] >= t.upper[r - 1])
                           : (t.lower[r] <= t.lower[r - 1] &&
                              t.upper[r] <= t.upper[r - 1]);
      if (!ok) throw ValidationError("trisection boundaries are not staircases");
    }
  }
}

}  // namespace

bool verify_trisection(const std::vector<std::vector<Cell>>& m,
                       const Trisection& t,
                       const std::set<std::pair<int, int>>& mainDiagonalCells) {
  check_trisection_shape(t);
  if (static_cast<int>(m.size()) != t.rows)
    throw ShapeError("cell matrix row count does not match the trisection");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != t.cols)
      throw ShapeError("cell matrix column count does not match the trisection");

  std::optional<Cell> seen[3];
  for (int r = 1; r <= t.rows; ++r) {
    for (int c = 1; c <= t.cols; ++c) {
      if (mainDiagonalCells.count({r, c})) continue;
      const Cell cell = m[r - 1][c - 1];
      if (cell == Cell::Red) return false;
      auto& slot = seen[static_cast<int>(region_of(t, r, c))];
      if (!slot) slot = cell;
      else if (*slot != cell) return false;
    }
  }
  return true;
}

Trisection compute_trisection(const Graph& g, const MixedThinWitness& w, int i,
                              int j) {
  if (i < 1 || i > w.k || j < 1 || j > w.k)
    throw ValidationError("compute_trisection: part index out of range");
  MixedThinWitness strong = w;
  strong.variant = Variant::proper;
  const VerificationReport report = verify_witness(g, strong);
  if (!report.accepted)
    throw InvalidWitness(
        "compute_trisection requires a witness accepted with condition (c); "
        "first failing condition: " +
        (report.violations.empty() ? std::string("?")
                                   : report.violations.front().condition));

  // Normalized frame: rows/columns in internal order, reversed up front when
  // the pair order restricts to the reversed internal order.
  std::vector<int> rows = part_members(w, i);
  std::vector<int> cols = part_members(w, j);
  if (i != j) {
    const std::vector<int>& po = pair_order(w, i, j);
    if (alignment(restrict_to_part(w, po, i), rows) == AlignmentKind::reversed)
      std::reverse(rows.begin(), rows.end());
    if (alignment(restrict_to_part(w, po, j), cols) == AlignmentKind::reversed)
      std::reverse(cols.begin(), cols.end());
  }
  const int p = static_cast<int>(rows.size());
  const int q = static_cast<int>(cols.size());

  Trisection t;
  t.rows = p;
  t.cols = q;
  t.orientation = Orientation::tlbr;
  t.lower.assign(p + 1, 0);
  t.upper.assign(p + 1, 0);

  // Pair relation over the frame, with the diagonal marked for i=j.  Both
  // orders are the same vector then, so the diagonal of the frame is exactly
  // the element-equality diagonal.
  std::vector<std::vector<Cell>> m(p, std::vector<Cell>(q, Cell::Zero));
  std::set<std::pair<int, int>> diag;
  bool anyOne = false, anyZero = false;
  for (int r = 1; r <= p; ++r) {
    for (int c = 1; c <= q; ++c) {
      if (i == j && rows[r - 1] == cols[c - 1]) {
        diag.insert({r, c});
        continue;
      }
      const bool one = pair_edge(g, w, i, j, rows[r - 1], cols[c - 1]);
      m[r - 1][c - 1] = one ? Cell::One : Cell::Zero;
      (one ? anyOne : anyZero) = true;
    }
  }

  // A constant submatrix is a single region; leftmost puts everything high.
  if (!(anyOne && anyZero)) return t;

  for (int r = 1; r <= p; ++r) {
    int rawF = 0, rawG = -1;  // 1-based column run of ones, empty when rawG<rawF
    for (int c = 1; c <= q; ++c) {
      if (diag.count({r, c}) || m[r - 1][c - 1] != Cell::One) continue;
      if (rawG < rawF) rawF = c;
      rawG = c;
    }
    if (rawG < rawF) {
      // No ones: collapse both boundaries to the leftmost staircase-valid
      // position.
      t.lower[r] = t.upper[r] = t.upper[r - 1];
      continue;
    }
    // Candidate run ends; an adjacent main-diagonal cell may be absorbed.
    // The lower boundary absorbs one whenever the staircase permits
    // (leftmost), the upper boundary only when the staircase forces it.
    int f = rawF;
    if (i == j && r == rawF - 1 && rawF - 2 >= t.lower[r - 1]) f = rawF - 1;
    int gEnd = rawG;
    if (rawG < t.upper[r - 1] && i == j && r == rawG + 1) gEnd = rawG + 1;
    t.lower[r] = f - 1;
    t.upper[r] = gEnd;
    if (t.lower[r] < t.lower[r - 1] || t.upper[r] < t.upper[r - 1] ||
        t.lower[r] > t.upper[r])
      throw InvalidWitness(
          "compute_trisection: pair submatrix does not have the staircase "
          "structure an accepted witness guarantees");
  }

  if (!verify_trisection(m, t, diag))
    throw InvalidWitness(
        "compute_trisection: computed boundaries do not trisect the pair "
        "submatrix into constant regions");
  return t;
}

}  // namespace mixthin
