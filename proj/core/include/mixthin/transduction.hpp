// Both transduction directions: an inversion-free proper k-mixed-thin graph
// encoded as a marked poset of bounded width, and a width-k poset encoded as a
// marked inversion-free proper (2k+1)-mixed-thin graph.  Each direction ships
// a procedural decoder and a formula-faithful decoder that must agree.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mixthin/graph.hpp"
#include "mixthin/poset.hpp"
#include "mixthin/witness.hpp"

namespace mixthin {

enum class DecodeMode { procedural, fo };
std::string decode_mode_name(DecodeMode m);
DecodeMode decode_mode_from_name(const std::string& name);  // UnknownSymbol

// ---- graphs → posets ----
//
// Elements 0..n-1 are the graph vertices, carrying their part mark V_i.
// Appended centre elements encode, per part pair, the cross-successor pairs
// (mark S) and the endpoints of maximal homogeneous subchains (mark B_i_j);
// each centre sits cover-wise between its two joined vertices, and centres of
// the same join type are ordered when both joins advance.  Complemented pairs
// mark element 0 with C_i_j.  Centre ids are allocated by (mark kind, pair,
// join positions), so encodings are byte-stable.
//
// The witness must be accepted at variant properInversionFree
// (InvalidWitness otherwise).  The resulting width is at most
// 5·C(k,2) + 5k.
MarkedPoset encode_graph_to_poset(const Graph& g, const MixedThinWitness& w);

// A chain cover of an encoding witnessing the width bound without running a
// matching: one chain per part, one per cross pair for the S-centres, and
// four per pair for the B-centres split by which parts the run endpoints
// fall in.  Empty chains are dropped; the raw chain count before dropping is
// k + 5·C(k,2) + 4k.  Throws NotAnEncoding if the marks do not describe an
// encoding produced by encode_graph_to_poset.
ChainDecomposition chain_cover_certificate(const MarkedPoset& p, int k);

// Reads the graph back out of a marked poset: vertices from the V_i marks
// (their ids must be exactly 0..n-1), the pair orders from the S-centres, the
// homogeneous runs from the B-centres, and the edge/non-edge flip from C_i_j.
// The fo mode computes the same relations as dense boolean matrices following
// the decoding formulas bottom-up; the procedural mode reconstructs orders
// and runs directly.  Both return identical graphs on any valid encoding.
// Throws NotAnEncoding on inconsistent marks or dangling centres.
Graph decode_poset_to_graph(const MarkedPoset& p, int k, DecodeMode mode);

// ---- posets → graphs ----

struct GraphEncoding {
  Graph graph;
  // Marks A (chain-element originals), B (their twins), O (rank scale),
  // C_1..C_k (per chain).
  std::map<std::string, std::vector<int>> marks;
  // Accepted witness with exactly 2·width+1 parts: O first, then A_1..A_k,
  // then B_1..B_k.
  MixedThinWitness witness;
};

// Splits the poset into a minimum chain cover C_1..C_k, then builds the graph
// on vertices {a_v = v, b_v = n+v, o_m = 2n+m-1}: o_m is adjacent to a_v and
// b_v iff m is at most the rank of v inside its chain, and a_u is adjacent to
// b_v iff u ⪯ v across different chains.  Any finite poset is valid input.
GraphEncoding encode_poset_to_graph(const MarkedPoset& p);

// Reads the poset back: elements are the A-marked vertices (relabelled
// ascending to 0..m-1), same-chain comparisons via O-neighborhood
// containment, cross-chain comparisons via the edge to the partner's B-twin.
// Throws NotAnEncoding on inconsistent marks, missing twins, or a relation
// that fails the partial-order axioms.
MarkedPoset decode_graph_to_poset(
    const Graph& g, const std::map<std::string, std::vector<int>>& marks,
    DecodeMode mode);

}  // namespace mixthin
