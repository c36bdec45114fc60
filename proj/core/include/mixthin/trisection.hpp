// Diagonal trisections: for an accepted witness, the submatrix of any part
// pair splits into three staircase-bounded regions, each constant off the
// main diagonal.  This module computes the canonical (leftmost) trisection in
// the normalized frame and verifies a claimed trisection against a cell
// matrix.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixthin/graph.hpp"
#include "mixthin/trimatrix.hpp"
#include "mixthin/witness.hpp"

namespace mixthin {

// Which corner pair the two staircases join.
enum class Orientation { tlbr, trbl };

std::string orientation_name(Orientation o);
Orientation orientation_from_name(const std::string& name);

struct Trisection {
  int rows = 0, cols = 0;
  // Length rows+1 each.  Entry 0 pins the staircase's entry corner (0 when it
  // starts top-left, cols when top-right); entry r >= 1 counts the cells of
  // row r on the low-column side of the staircase.  The exit run along the
  // bottom edge to the far corner is implied.  tlbr staircases are
  // nondecreasing, trbl nonincreasing; lower[r] <= upper[r] throughout.
  std::vector<int> lower, upper;
  Orientation orientation = Orientation::tlbr;
};

// Region of a cell under a trisection: cells up to lower[r] / between the
// boundaries / past upper[r].
enum class Region { low, mid, high };
Region region_of(const Trisection& t, int row, int col);  // 1-based

// Canonical trisection of the (i,j) pair submatrix: rows are part i by its
// internal order, columns part j likewise, each reversed up front when the
// pair order's restriction is reversed against it, and the cells carry the
// pair's edge relation (complement already applied).  The middle region hugs
// each row's run of ones, empty-run rows collapse both boundaries leftmost.
// Throws InvalidWitness unless verify_witness accepts (g,w) with condition
// (c) enforced.
Trisection compute_trisection(const Graph& g, const MixedThinWitness& w, int i,
                              int j);

// True iff every region of `m` is constant with a value in {Zero, One},
// ignoring the listed cells (1-based row/col positions, used for the main
// diagonal when i=j).  Malformed trisections (wrong lengths, out-of-range or
// crossing boundaries) throw ShapeError / ValidationError.
bool verify_trisection(const std::vector<std::vector<Cell>>& m,
                       const Trisection& t,
                       const std::set<std::pair<int, int>>& mainDiagonalCells);

}  // namespace mixthin
