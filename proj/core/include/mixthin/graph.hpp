// Simple undirected graph on vertex ids 0..n-1 with a dense adjacency matrix.
// Vertex counts stay small throughout the library (worst case a few hundred),
// so dense storage keeps every neighbourhood query O(1) and comparisons cheap.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mixthin {

struct Graph {
  int n = 0;
  // Sorted, deduplicated list of edges {u, v} with u < v.
  std::vector<std::pair<int, int>> edges;
  // adj[u][v] == true iff {u, v} is an edge.  Diagonal is always false.
  std::vector<std::vector<bool>> adj;
};

// Builds a Graph, normalizing edges (sorting endpoints and the list,
// removing duplicates).  Throws ValidationError on out-of-range endpoints
// or self-loops.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

bool has_edge(const Graph& g, int u, int v);

// Neighbours of u in ascending order.
std::vector<int> neighbors(const Graph& g, int u);

// Induced subgraph on `vertices` (ascending ids reused as 0..m-1 in order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Complement graph (no self-loops).
Graph complement(const Graph& g);

}  // namespace mixthin
