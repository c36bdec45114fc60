// Engine internals.  The boundary bookkeeping lives on per-pair trisections
// in the frame of the internal orders: initial staircases hug each row's run
// of related columns (the divide, for empty rows), a row merge takes the
// envelope of the two bands, a column merge renumbers counts so straddled
// cells stay in the middle region.  Horizontal values charge the upper
// boundary's run above a band and the lower boundary's run below it, so a
// merged band's red cells are always paid for by the combined value of the
// two bands, which pigeonholing over the largest part keeps at most 5k-1.
#include "mixthin/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "mixthin/errors.hpp"

namespace mixthin {
namespace {

void engine_check(bool ok, const std::string& what) {
  if (!ok) throw Error("contraction engine invariant failed: " + what);
}

// Trisection of pair (i,j) in the engine frame.  Built first in the
// normalized frame where both sides ascend along the pair order, then mapped
// back through the reversals.
Trisection build_pair_trisection(const Graph& g, const MixedThinWitness& w,
                                 int i, int j) {
  std::vector<int> rowsN = part_members(w, i);
  std::vector<int> colsN = part_members(w, j);
  bool rowRev = false, colRev = false;
  if (i != j) {
    const std::vector<int>& po = pair_order(w, i, j);
    rowRev =
        alignment(restrict_to_part(w, po, i), rowsN) == AlignmentKind::reversed;
    colRev =
        alignment(restrict_to_part(w, po, j), colsN) == AlignmentKind::reversed;
    if (rowRev) std::reverse(rowsN.begin(), rowsN.end());
    if (colRev) std::reverse(colsN.begin(), colsN.end());
  }
  const int p = static_cast<int>(rowsN.size());
  const int q = static_cast<int>(colsN.size());

  // Number of columns preceding each row element along the pair order: where
  // an empty row's collapsed boundaries sit.
  std::vector<int> divide(p + 1, 0);
  if (i == j) {
    for (int r = 1; r <= p; ++r) divide[r] = r - 1;
  } else if (p > 0 && q > 0) {
    const std::vector<int>& po = pair_order(w, i, j);
    std::map<int, int> pos;
    for (int t = 0; t < static_cast<int>(po.size()); ++t) pos[po[t]] = t;
    std::vector<int> colPos;
    colPos.reserve(q);
    for (int v : colsN) colPos.push_back(pos.at(v));  // ascending
    for (int r = 1; r <= p; ++r)
      divide[r] = static_cast<int>(
          std::upper_bound(colPos.begin(), colPos.end(), pos.at(rowsN[r - 1])) -
          colPos.begin());
  }

  std::vector<int> lowerN(p + 1, 0), upperN(p + 1, 0);
  for (int r = 1; r <= p; ++r) {
    int f = -1, gEnd = -1;  // 1-based run of related columns
    for (int c = 1; c <= q; ++c) {
      if (i == j && rowsN[r - 1] == colsN[c - 1]) continue;
      if (!pair_edge(g, w, i, j, rowsN[r - 1], colsN[c - 1])) continue;
      if (f < 0) f = c;
      gEnd = c;
    }
    if (i == j) {
      // The diagonal cell always joins the run, keeping it on the divide.
      f = f < 0 ? r : std::min(f, r);
      gEnd = std::max(gEnd, r);
    }
    if (f < 0) {
      lowerN[r] = upperN[r] = divide[r];
    } else {
      lowerN[r] = f - 1;
      upperN[r] = gEnd;
    }
    engine_check(lowerN[r] >= lowerN[r - 1] && upperN[r] >= upperN[r - 1] &&
                     lowerN[r] <= upperN[r],
                 "initial boundaries form staircases");
  }

  Trisection t;
  t.rows = p;
  t.cols = q;
  const bool trbl = rowRev != colRev;
  t.orientation = trbl ? Orientation::trbl : Orientation::tlbr;
  t.lower.assign(p + 1, trbl ? q : 0);
  t.upper.assign(p + 1, trbl ? q : 0);
  for (int r = 1; r <= p; ++r) {
    const int srcR = rowRev ? p + 1 - r : r;
    if (!colRev) {
      t.lower[r] = lowerN[srcR];
      t.upper[r] = upperN[srcR];
    } else {
      // Flipping the columns turns left counts into right counts and swaps
      // the boundaries' roles.
      t.lower[r] = q - upperN[srcR];
      t.upper[r] = q - lowerN[srcR];
    }
  }
  return t;
}

// Horizontal contribution of one pair to a row-side band: the upper
// boundary's run hugging the band from above plus the lower boundary's run
// hugging it from below (the implied exit run included for the last band).
int row_side_h(const Trisection& t, int band) {
  const int exitCol = t.orientation == Orientation::tlbr ? t.cols : 0;
  const int above = std::abs(t.upper[band] - t.upper[band - 1]);
  const int lowerNext = band == t.rows ? exitCol : t.lower[band + 1];
  const int below = std::abs(lowerNext - t.lower[band]);
  return above + below;
}

// Mirrored contribution when the group's part is the column side: the lower
// boundary's vertical run on the line left of the band plus the upper
// boundary's run on the line right of it.
int col_side_h(const Trisection& t, int band) {
  int n = 0;
  for (int r = 1; r <= t.rows; ++r) {
    if (t.lower[r] == band - 1) ++n;
    if (t.upper[r] == band) ++n;
  }
  return n;
}

int group_h(const EngineState& s, int part, int band) {
  int h = 0;
  for (const auto& [key, t] : s.trisections) {
    if (key.first == part)
      h += row_side_h(t, band);
    else if (key.second == part)
      h += col_side_h(t, band);
  }
  return h;
}

void recompute_horizontal(EngineState& s) {
  s.horizontal.clear();
  for (int p = 1; p <= s.k; ++p)
    for (int t = 1; t <= static_cast<int>(s.bands[p].size()); ++t)
      s.horizontal[s.bands[p][t - 1]] = group_h(s, p, t);
}

// Merge bands `band` and `band+1` of `part` in the matrix and the
// bookkeeping.
void apply_band_merge(EngineState& s, int part, int band) {
  auto& bl = s.bands[part];
  const int keyA = bl[band - 1], keyB = bl[band];
  contract_symmetric(s.matrix, s.matrix.index_of_key(keyA),
                     s.matrix.index_of_key(keyB));
  bl[band - 1] = std::min(keyA, keyB);
  bl.erase(bl.begin() + band);
  s.partOf.erase(std::max(keyA, keyB));
  for (auto& [key, t] : s.trisections) {
    if (key.first == part) {  // row side: envelope of the two bands
      t.lower[band] = std::min(t.lower[band], t.lower[band + 1]);
      t.upper[band] = std::max(t.upper[band], t.upper[band + 1]);
      t.lower.erase(t.lower.begin() + band + 1);
      t.upper.erase(t.upper.begin() + band + 1);
      --t.rows;
    }
    if (key.second == part) {  // column side: straddled cells stay middle
      for (int r = 0; r <= t.rows; ++r) {
        if (t.lower[r] >= band) --t.lower[r];
        if (t.upper[r] >= band + 1) --t.upper[r];
      }
      --t.cols;
    }
  }
}

std::map<int, int> row_reds(const TriMatrix& m) {
  std::map<int, int> out;
  for (int i = 0; i < m.size(); ++i)
    out[m.key(i)] = row_red_count(m, i, RedMode::symmetric);
  return out;
}

// Debug-mode inductive invariants: region constancy with reds mapped to
// their region's value class, reds confined to the middle region, and the
// per-row red bound h(q) + 2k + 1.
void check_debug_invariants(const EngineState& s) {
  for (const auto& [pk, t] : s.trisections) {
    const auto& rowKeys = s.bands[pk.first];
    const auto& colKeys = s.bands[pk.second];
    engine_check(static_cast<int>(rowKeys.size()) == t.rows &&
                     static_cast<int>(colKeys.size()) == t.cols,
                 "trisection dimensions track the bands");
    std::vector<std::vector<Cell>> cells(t.rows,
                                         std::vector<Cell>(t.cols, Cell::Zero));
    std::set<std::pair<int, int>> diag;
    std::optional<Cell> cls[3];
    for (int r = 1; r <= t.rows; ++r) {
      const int ir = s.matrix.index_of_key(rowKeys[r - 1]);
      for (int c = 1; c <= t.cols; ++c) {
        if (pk.first == pk.second && r == c) {
          diag.insert({r, c});
          continue;
        }
        const Cell cell = s.matrix.at(ir, s.matrix.index_of_key(colKeys[c - 1]));
        cells[r - 1][c - 1] = cell;
        const Region reg = region_of(t, r, c);
        if (cell == Cell::Red)
          engine_check(reg == Region::mid, "reds confined to the middle region");
        else if (!cls[static_cast<int>(reg)])
          cls[static_cast<int>(reg)] = cell;
      }
    }
    std::vector<std::vector<Cell>> mapped = cells;
    for (int r = 1; r <= t.rows; ++r)
      for (int c = 1; c <= t.cols; ++c)
        if (mapped[r - 1][c - 1] == Cell::Red)
          mapped[r - 1][c - 1] =
              cls[static_cast<int>(region_of(t, r, c))].value_or(Cell::Zero);
    engine_check(verify_trisection(mapped, t, diag),
                 "regions constant once reds take their class");
  }
  for (int p = 1; p <= s.k; ++p)
    for (int t = 1; t <= static_cast<int>(s.bands[p].size()); ++t) {
      const int idx = s.matrix.index_of_key(s.bands[p][t - 1]);
      engine_check(row_red_count(s.matrix, idx, RedMode::symmetric) <=
                       group_h(s, p, t) + 2 * s.k + 1,
                   "per-row red count within h(q) + 2k + 1");
    }
}

}  // namespace

EngineState initial_engine_state(const Graph& g, const MixedThinWitness& w) {
  MixedThinWitness strong = w;
  strong.variant = Variant::proper;
  const VerificationReport report = verify_witness(g, strong);
  if (!report.accepted)
    throw InvalidWitness(
        "contraction engine requires a witness accepted with condition (c); "
        "first failing condition: " +
        (report.violations.empty() ? std::string("?")
                                   : report.violations.front().condition));
  EngineState s;
  s.k = w.k;
  s.bands.assign(w.k + 1, {});
  for (int p = 1; p <= w.k; ++p) {
    s.bands[p] = part_members(w, p);
    for (int v : s.bands[p]) {
      s.order.push_back(v);
      s.partOf[v] = p;
    }
  }
  s.matrix = adjacency_trimatrix(g, s.order);
  for (int i = 1; i <= w.k; ++i)
    for (int j = i; j <= w.k; ++j)
      s.trisections[{i, j}] = build_pair_trisection(g, w, i, j);
  recompute_horizontal(s);
  return s;
}

int horizontal_value(const EngineState& s, int q) {
  if (!s.bookkeeping)
    throw ValidationError(
        "horizontal values are not maintained once the endgame starts");
  const auto it = s.partOf.find(q);
  if (it == s.partOf.end())
    throw ValidationError("horizontal_value: unknown group key " +
                          std::to_string(q));
  const auto& bl = s.bands[it->second];
  const auto bit = std::find(bl.begin(), bl.end(), q);
  engine_check(bit != bl.end(), "group key listed in its part's bands");
  return group_h(s, it->second, static_cast<int>(bit - bl.begin()) + 1);
}

ContractionTrace build_sequence(const Graph& g, const MixedThinWitness& w,
                                bool debugInvariants) {
  EngineState s = initial_engine_state(g, w);
  ContractionTrace trace;
  const int k = s.k;

  while (s.matrix.size() > 8 * k) {
    int part = 0, sz = 0;
    for (int p = 1; p <= k; ++p)
      if (static_cast<int>(s.bands[p].size()) > sz) {
        sz = static_cast<int>(s.bands[p].size());
        part = p;
      }
    engine_check(sz >= 9, "largest part has at least 9 bands in the main phase");
    int bestBand = -1;
    long bestSum = std::numeric_limits<long>::max();
    for (int t = 1; t < sz; ++t) {
      const long sum = group_h(s, part, t) + group_h(s, part, t + 1);
      if (sum < bestSum) {
        bestSum = sum;
        bestBand = t;
      }
    }
    engine_check(bestSum <= 5L * k - 1, "selected pair within the horizontal budget");

    const int keyA = s.bands[part][bestBand - 1];
    const int keyB = s.bands[part][bestBand];
    std::map<int, int> before;
    if (debugInvariants) before = row_reds(s.matrix);
    apply_band_merge(s, part, bestBand);
    const int merged = std::min(keyA, keyB);
    engine_check(row_red_count(s.matrix, s.matrix.index_of_key(merged),
                               RedMode::symmetric) <= 7 * k,
                 "merged row has at most 7k reds");
    const int redAfter = red_number(s.matrix, RedMode::symmetric);
    engine_check(redAfter <= 9 * k, "red number stays at most 9k");
    if (debugInvariants) {
      const auto after = row_reds(s.matrix);
      for (const auto& [key, red] : after)
        if (key != merged) {
          const auto bit = before.find(key);
          engine_check(bit != before.end() && red <= bit->second + 2 * k,
                       "untouched row gains at most 2k reds");
        }
      check_debug_invariants(s);
    }
    recompute_horizontal(s);
    trace.steps.push_back({merged, std::max(keyA, keyB)});
    trace.redAfterStep.push_back(redAfter);
  }

  // Endgame: few enough groups that any row's red count is under the bound;
  // the boundary bookkeeping is no longer needed (or maintainable, since the
  // fixed order can merge non-consecutive bands).
  s.bookkeeping = false;
  s.trisections.clear();
  s.horizontal.clear();
  while (s.matrix.size() > 1) {
    std::vector<int> keys;
    keys.reserve(s.matrix.size());
    for (int i = 0; i < s.matrix.size(); ++i) keys.push_back(s.matrix.key(i));
    std::sort(keys.begin(), keys.end());
    int a = -1, b = -1;
    for (int key : keys) {
      const auto pit = s.partOf.find(key);
      if (pit == s.partOf.end()) continue;
      for (int other : keys) {
        if (other == key) continue;
        const auto oit = s.partOf.find(other);
        if (oit != s.partOf.end() && oit->second == pit->second) {
          a = key;
          b = other;
          break;
        }
      }
      if (a >= 0) break;
    }
    const bool samePart = a >= 0;
    if (!samePart) {
      a = keys[0];
      b = keys[1];
    }
    contract_symmetric(s.matrix, s.matrix.index_of_key(a),
                       s.matrix.index_of_key(b));
    if (samePart) {
      s.partOf.erase(std::max(a, b));
    } else {
      s.partOf.erase(a);
      s.partOf.erase(b);
    }
    const int redAfter = red_number(s.matrix, RedMode::symmetric);
    engine_check(redAfter <= 9 * k, "red number stays at most 9k");
    if (debugInvariants)
      engine_check(redAfter <= 8 * k, "endgame red number stays at most 8k");
    trace.steps.push_back({std::min(a, b), std::max(a, b)});
    trace.redAfterStep.push_back(redAfter);
  }

  trace.maxRed = 0;
  for (int red : trace.redAfterStep) trace.maxRed = std::max(trace.maxRed, red);
  return trace;
}

bool verify_sequence(const Graph& g, const std::vector<int>& order,
                     const ContractionTrace& trace, int bound, RedMode mode) {
  TriMatrix m = adjacency_trimatrix(g, order);
  const bool haveReds = !trace.redAfterStep.empty();
  if (haveReds && trace.redAfterStep.size() != trace.steps.size())
    throw MalformedTrace("redAfterStep length does not match the step count");
  int observedMax = 0;
  for (std::size_t step = 0; step < trace.steps.size(); ++step) {
    const auto [a, b] = trace.steps[step];
    if (a == b)
      throw MalformedTrace("step " + std::to_string(step) +
                           " merges a group with itself");
    const int ia = m.index_of_key(a), ib = m.index_of_key(b);
    if (ia < 0 || ib < 0)
      throw MalformedTrace("step " + std::to_string(step) +
                           " references an unknown group key");
    contract_symmetric(m, ia, ib);
    const int red = red_number(m, mode);
    observedMax = std::max(observedMax, red);
    if (red > bound) return false;
    if (haveReds && trace.redAfterStep[step] != red) return false;
  }
  if (haveReds && trace.maxRed != observedMax) return false;
  return true;
}

}  // namespace mixthin
