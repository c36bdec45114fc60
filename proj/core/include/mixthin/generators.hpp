// Certified witness constructions: graph families together with mixed-thin
// witnesses that verify_witness accepts.  Covers complements of perfect
// matchings, grid graphs in two and more dimensions, trees, the cyclic
// clique-chain lower-bound family, and intersection graphs of proper path
// systems in subdivided host graphs.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mixthin/graph.hpp"
#include "mixthin/witness.hpp"

namespace mixthin {

// Complement of t disjoint edges on 2t vertices (vertices 2i and 2i+1 are the
// i-th matched pair).  Witness: one part working against the complement edge
// set, order listing matched pairs consecutively.  InvalidParameters if t < 1.
std::pair<Graph, MixedThinWitness> gen_complement_matching(int t);

// m×n grid graph (rows a = 1..m, columns b = 1..n, id = (a-1)*n + (b-1)),
// edges between vertices at Manhattan distance 1.  Witness: three parts by
// row index mod 3; pair orders interleave adjacent row bands column-first.
// InvalidParameters if m < 1 or n < 1.
std::pair<Graph, MixedThinWitness> gen_grid2d(int m, int n);

// Tree given by its edges (any orientation) on vertices 0..|edges|, rooted at
// `root`.  Witness: three parts by depth mod 3; pair orders interleave
// adjacent depth levels in rooted pre-order.  NotATree on malformed input.
std::pair<Graph, MixedThinWitness> gen_tree(
    const std::vector<std::pair<int, int>>& edges, int root);

// Which metric defines grid adjacency in gen_multidim: cartesian uses L1
// distance (the ordinary grid), strong uses Chebyshev distance (the full
// grid with diagonals).
enum class GridMetric { cartesian, strong };

// d-dimensional grid on {1..m}^d (vertex id = lexicographic rank of the
// coordinate vector), edges between vertices at metric distance 1.  Witness:
// 3^(d-1) parts keyed by the first d-1 coordinates mod 3.  InvalidParameters
// if d < 1, m < 1, or m^d is unreasonably large.
std::pair<Graph, MixedThinWitness> gen_multidim(int d, int m, GridMetric metric);

// Lower-bound family: 2k+1 chains of h+1 vertices each (chain i vertex j has
// id (i-1)*(h+1)+j), cliques along each chain plus a cyclic pattern of slant
// edges between chains at cyclic distance ≤ k.  Witness: one part per chain
// with block-interleaved pair orders.  InvalidParameters if k < 1 or
// h < 4k-4.
std::pair<Graph, MixedThinWitness> gen_lower_bound(int k, int h);

// A system of paths in a subdivision H' of a host graph H.  The vertices of
// H keep their ids 0..H.n-1 in H'; each host edge, taken in ascending order
// with endpoints from smaller to larger, contributes its subdivision vertices
// as the next consecutive block of ids.  paths[v] lists the H'-vertices of
// the path representing vertex v of the derived intersection graph.
struct PathRepresentation {
  Graph host;
  // Host edge (u,v), u < v → number of subdivision vertices on it (absent
  // edges default to 0).
  std::map<std::pair<int, int>, int> subdivisionCounts;
  std::vector<std::vector<int>> paths;
};

// The subdivision H' itself plus the id blocks assigned to each host edge.
struct Subdivision {
  Graph graph;
  std::vector<std::pair<int, int>> hostEdges;  // ascending
  // innerVertices[e] lists the subdivision vertices of hostEdges[e] from the
  // smaller endpoint towards the larger.
  std::vector<std::vector<int>> innerVertices;
};

Subdivision subdivide_host(const Graph& host,
                           const std::map<std::pair<int, int>, int>& counts);

// Intersection graph of the paths (u ~ v iff the paths share an H'-vertex)
// with a witness partitioned by which host edges a path touches and where
// its ends lie.  Paths must be connected (InvalidPath), pairwise
// set-incomparable (NotProper), and must end in the interior of subdivided
// host edges.  The witness variant is proper: pair orders may reverse a
// part's internal order.
std::pair<Graph, MixedThinWitness> from_path_representation(
    const PathRepresentation& rep);

}  // namespace mixthin
