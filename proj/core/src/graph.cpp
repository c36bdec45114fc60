#include "mixthin/graph.hpp"

#include <algorithm>
#include <string>

#include "mixthin/errors.hpp"

namespace mixthin {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw ValidationError("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("graph: edge endpoint out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw ValidationError("graph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges) {
    g.adj[u][v] = true;
    g.adj[v][u] = true;
  }
  return g;
}

bool has_edge(const Graph& g, int u, int v) {
  return u >= 0 && v >= 0 && u < g.n && v < g.n && g.adj[u][v];
}

std::vector<int> neighbors(const Graph& g, int u) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (g.adj[u][v]) out.push_back(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 0 || v >= g.n)
      throw ValidationError("induced_subgraph: vertex out of range: " +
                            std::to_string(v));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adj[vs[a]][vs[b]])
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return make_graph(static_cast<int>(vs.size()), std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.adj[u][v]) edges.emplace_back(u, v);
  return make_graph(g.n, std::move(edges));
}

}  // namespace mixthin
